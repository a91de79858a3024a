#include "jones/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace jones {

namespace {

std::string location(const std::filesystem::path& path, int line) {
    return path.string() + ":" + std::to_string(line);
}

bool parse_double(std::string_view text, double& out) {
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

std::string trim(std::string_view s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

}  // namespace

Curve3D read_xyz(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());

    Curve3D curve;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ss(line);
        std::vector<std::string> fields;
        std::string f;
        while (ss >> f) fields.push_back(f);
        if (fields.empty() || fields.front().front() == '#') continue;
        if (fields.size() != 3)
            throw std::runtime_error(location(path, line_no) + ": expected 3 coordinates, got " +
                                     std::to_string(fields.size()));
        Vec3 p;
        if (!parse_double(fields[0], p.x) || !parse_double(fields[1], p.y) ||
            !parse_double(fields[2], p.z))
            throw std::runtime_error(location(path, line_no) + ": unparsable coordinate");
        curve.points.push_back(p);
    }
    if (curve.points.size() < 3)
        throw std::runtime_error(path.string() + ": a curve needs at least 3 points, got " +
                                 std::to_string(curve.points.size()));
    curve.validate();
    return curve;
}

void write_xyz(std::ostream& out, const Curve3D& curve) {
    char buf[80];
    for (const Vec3& p : curve.points) {
        std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g\n", p.x, p.y, p.z);
        out << buf;
    }
}

Curve3D read_pdb(const std::filesystem::path& path, const std::string& chain,
                 std::optional<int> atom_limit) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());

    Curve3D curve;
    std::string selected_chain = chain;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view v(line);
        if (v.rfind("ENDMDL", 0) == 0) break;  // first model only
        if (v.rfind("ATOM", 0) != 0) continue;
        if (v.size() < 54)
            throw std::runtime_error(location(path, line_no) + ": truncated ATOM record");

        std::string name = trim(v.substr(12, 4));
        if (name != "CA") continue;
        char alt_loc = v[16];
        if (alt_loc != ' ' && alt_loc != 'A') continue;
        std::string record_chain(1, v[21]);
        if (selected_chain.empty()) selected_chain = record_chain;
        if (record_chain != selected_chain) continue;

        Vec3 p;
        if (!parse_double(trim(v.substr(30, 8)), p.x) ||
            !parse_double(trim(v.substr(38, 8)), p.y) ||
            !parse_double(trim(v.substr(46, 8)), p.z))
            throw std::runtime_error(location(path, line_no) + ": unparsable ATOM coordinates");
        curve.points.push_back(p);
        if (atom_limit && static_cast<int>(curve.points.size()) >= *atom_limit) break;
    }
    if (curve.points.empty())
        throw std::runtime_error(path.string() + ": no CA atoms found" +
                                 (chain.empty() ? "" : " in chain " + chain));
    if (curve.points.size() < 3)
        throw std::runtime_error(path.string() + ": a curve needs at least 3 points, got " +
                                 std::to_string(curve.points.size()));
    curve.validate();
    return curve;
}

}  // namespace jones
