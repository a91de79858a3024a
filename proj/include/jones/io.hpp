#pragma once

#include "jones/geometry.hpp"

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

namespace jones {

// Plain coordinate file: one point per non-empty, non-comment (#) line,
// three whitespace-separated reals. Returns an open curve; the caller marks
// it closed if appropriate.
Curve3D read_xyz(const std::filesystem::path& path);

// Writes one "x y z" line per point at 17 significant digits, so a
// read/write round trip reproduces the values exactly.
void write_xyz(std::ostream& out, const Curve3D& curve);

// CA-backbone extraction from fixed-column PDB ATOM records, first model
// only. chain empty means the first chain encountered; atom_limit keeps the
// first that many CA atoms. Returns an open curve.
Curve3D read_pdb(const std::filesystem::path& path, const std::string& chain = "",
                 std::optional<int> atom_limit = std::nullopt);

}  // namespace jones
