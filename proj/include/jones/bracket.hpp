#pragma once

#include "jones/diagram.hpp"
#include "jones/laurent.hpp"
#include "jones/reidemeister.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace jones {

enum class Engine { oracle, split, split_rm };

inline constexpr int kDefaultOracleCap = 24;

// Raised when the brute-force state sum would exceed the crossing cap.
class CrossingCapExceeded : public std::runtime_error {
public:
    CrossingCapExceeded(int count, int cap)
        : std::runtime_error("bracket oracle refused: " + std::to_string(count) +
                             " crossings exceed the cap of " + std::to_string(cap)),
          count_(count) {}
    int count() const { return count_; }

private:
    int count_ = 0;
};

// One smoothing state of a sub-tangle: the signed exponent sum of the
// skein choices and the resulting connectivity of the part's arc endpoints.
// Endpoint labels are vertex indices of the parent curve (edge i's tail is
// vertex i, its head is vertex i+1, mod n for closed curves). A set with no
// labels is a loop closed off inside the part.
struct PartialState {
    int a_exp = 0;
    std::vector<std::vector<int>> pairing;

    bool operator==(const PartialState&) const = default;
};

struct JonesOptions {
    int oracle_cap = kDefaultOracleCap;
    MoveSequence rm_sequence;  // empty means the default RM1,RM2,RM3,RM1,RM2
};

// Full Kauffman state sum over all 2^n smoothings. Refuses diagrams above
// the crossing cap.
LaurentPoly bracket_oracle(const Diagram& d, int crossing_cap = kDefaultOracleCap);

// Splits the diagram's arcs into two parts, each a union of at most two
// contiguous runs, so that every crossing lies wholly inside one part and
// the parts hold as close to half the crossings each as achievable.
// Refuses crossing-free diagrams.
std::pair<SubTangle, SubTangle> split(const Diagram& d);

// All 2^k smoothing states of the sub-tangle, in smoothing-mask order
// (state 0 is the all-A smoothing).
std::vector<PartialState> partial_poly(const SubTangle& t);

struct GlueStats {
    std::size_t pairs_examined = 0;
};

// Combines the partial states of two complementary sub-tangles into the
// bracket polynomial of the original diagram: every pair of states
// contributes A^(sum of exponents) * d^(merged components - 1).
LaurentPoly glue(const std::vector<PartialState>& s1, const std::vector<PartialState>& s2,
                 GlueStats* stats = nullptr);

// (-A^3)^(-w) * <D> with the bracket computed by the chosen engine. The
// split engine evaluates the two partial polynomials on two concurrent
// workers; split_rm simplifies first and normalizes with the writhe of the
// diagram it actually evaluates.
LaurentPoly jones_of_diagram(const Diagram& d, Engine engine, const JonesOptions& opts = {});

}  // namespace jones
