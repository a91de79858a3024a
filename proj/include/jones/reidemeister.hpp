#pragma once

#include "jones/diagram.hpp"

#include <string>
#include <vector>

namespace jones {

enum class Move { rm1 = 1, rm2 = 2, rm3 = 3 };
using MoveSequence = std::vector<Move>;

// The pipeline order used throughout: RM1, RM2, RM3, RM1, RM2.
const MoveSequence& default_move_sequence();

// Parses "1,2,3,1,2" or "rm1,rm2,rm3"; throws std::invalid_argument.
MoveSequence parse_move_sequence(const std::string& text);

// Kink removal: deletes every crossing whose two passes along the curve are
// consecutive (no other crossing in between), repeating until none remain.
Diagram rm1(const Diagram& d);

// Poke removal: deletes pairs of crossings that are consecutive along both
// strands, with the same strand on top at both and opposite signs,
// repeating until none remain.
Diagram rm2(const Diagram& d);

// Triangle slide: when one strand crosses two others consecutively on
// succ-adjacent edges, entirely over or entirely under both, and the
// enclosed triangle is empty, that strand slides past the third crossing.
// At most one slide per invocation; crossing count is preserved.
Diagram rm3(const Diagram& d);

Diagram simplify(const Diagram& d);
Diagram simplify(const Diagram& d, const MoveSequence& seq);

}  // namespace jones
