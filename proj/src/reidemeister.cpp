#include "jones/reidemeister.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace jones {

const MoveSequence& default_move_sequence() {
    static const MoveSequence seq{Move::rm1, Move::rm2, Move::rm3, Move::rm1, Move::rm2};
    return seq;
}

MoveSequence parse_move_sequence(const std::string& text) {
    MoveSequence seq;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char c) { return std::isspace(c); }),
                  tok.end());
        if (tok.empty()) continue;
        if (tok == "1" || tok == "rm1" || tok == "RM1")
            seq.push_back(Move::rm1);
        else if (tok == "2" || tok == "rm2" || tok == "RM2")
            seq.push_back(Move::rm2);
        else if (tok == "3" || tok == "rm3" || tok == "RM3")
            seq.push_back(Move::rm3);
        else
            throw std::invalid_argument("unknown Reidemeister move '" + tok + "'");
    }
    if (seq.empty()) throw std::invalid_argument("empty move sequence");
    return seq;
}

namespace {

// One pass of a crossing along the curve. Concatenating every edge's slot
// list in edge order lists all passes in traversal order; each crossing
// appears exactly twice.
struct Occurrence {
    int crossing = -1;
    int edge = -1;
};

std::vector<Occurrence> strand_sequence(const Diagram& d) {
    std::vector<Occurrence> seq;
    seq.reserve(2 * d.crossings().size());
    for (int e = 0; e < d.n_edges(); ++e)
        for (int id : d.edge_slots()[static_cast<std::size_t>(e)]) seq.push_back({id, e});
    return seq;
}

std::vector<std::array<int, 2>> occurrence_positions(const std::vector<Occurrence>& seq,
                                                     int n_crossings) {
    std::vector<std::array<int, 2>> pos(static_cast<std::size_t>(n_crossings), {-1, -1});
    for (int i = 0; i < static_cast<int>(seq.size()); ++i) {
        auto& slot = pos[static_cast<std::size_t>(seq[static_cast<std::size_t>(i)].crossing)];
        if (slot[0] < 0)
            slot[0] = i;
        else
            slot[1] = i;
    }
    return pos;
}

// Consecutive along the curve: adjacent positions, wrapping for closed curves.
bool positions_adjacent(int p, int q, int len, bool closed) {
    if (std::abs(p - q) == 1) return true;
    return closed && len >= 2 && (std::min(p, q) == 0 && std::max(p, q) == len - 1);
}

std::array<int, 2> sorted_edge_pair(const CrossingRec& c) {
    return {std::min(c.over_edge, c.under_edge), std::max(c.over_edge, c.under_edge)};
}

// The signed slot structure determines the diagram's planar embedding: at a
// positive crossing the counterclockwise ray order is (over-out, under-out,
// over-in, under-in), at a negative one (over-out, under-in, over-in,
// under-out). Tracing the resulting rotation system enumerates the faces of
// the underlying 4-valent map, which is what the RM3 guard needs: a slide is
// only legal when the three sides bound an actual triangular face.
class FaceTracer {
public:
    // Arc a runs from occurrence a to occurrence a+1 (wrapping for closed
    // curves). Open curves get two extra dangling arcs: kStartTip before
    // occurrence 0 and id len-1 after the last occurrence; face walks make a
    // U-turn at their free ends.
    static constexpr int kStartTip = -1;

    struct DirectedArc {
        int arc = 0;
        bool forward = true;
        bool operator==(const DirectedArc&) const = default;
    };

    FaceTracer(const std::vector<Occurrence>& seq,
               const std::vector<std::array<int, 2>>& positions,
               const std::vector<CrossingRec>& crossings, bool closed)
        : len_(static_cast<int>(seq.size())), closed_(closed) {
        rot_next_.assign(static_cast<std::size_t>(2 * len_), -1);
        for (std::size_t c = 0; c < crossings.size(); ++c) {
            auto [x, y] = positions[c];
            bool x_over = seq[static_cast<std::size_t>(x)].edge == crossings[c].over_edge;
            int o_over = x_over ? x : y;
            int o_under = x_over ? y : x;
            int ov_out = 2 * o_over + 1, ov_in = 2 * o_over;
            int un_out = 2 * o_under + 1, un_in = 2 * o_under;
            std::array<int, 4> ccw = crossings[c].sign > 0
                                         ? std::array<int, 4>{ov_out, un_out, ov_in, un_in}
                                         : std::array<int, 4>{ov_out, un_in, ov_in, un_out};
            for (int i = 0; i < 4; ++i)
                rot_next_[static_cast<std::size_t>(ccw[static_cast<std::size_t>(i)])] =
                    ccw[static_cast<std::size_t>((i + 1) % 4)];
        }
    }

    // True when the directed arc's face consists of exactly the three given
    // arcs (in either traversal direction of the start arc).
    bool bounds_triangle(int s_arc, int p_arc, int q_arc) const {
        for (bool forward : {true, false}) {
            std::vector<int> arcs;
            if (!trace({s_arc, forward}, arcs, 4)) continue;
            if (arcs.size() != 3) continue;
            std::vector<int> want{s_arc, p_arc, q_arc};
            std::sort(arcs.begin(), arcs.end());
            std::sort(want.begin(), want.end());
            if (arcs == want) return true;
        }
        return false;
    }

private:
    bool trace(DirectedArc start, std::vector<int>& arcs, int limit) const {
        DirectedArc d = start;
        do {
            arcs.push_back(d.arc);
            if (static_cast<int>(arcs.size()) > limit) return false;
            d = next(d);
        } while (!(d == start));
        return true;
    }

    DirectedArc next(DirectedArc d) const {
        int end_tip = len_ - 1;  // id of the trailing dangling arc (open only)
        // U-turns at the free ends of an open curve.
        if (!closed_ && d.arc == kStartTip && !d.forward) return {kStartTip, true};
        if (!closed_ && d.arc == end_tip && d.forward) return {end_tip, false};

        int head_dart;
        if (d.arc == kStartTip) {
            head_dart = 0;  // forward into occurrence 0
        } else if (!closed_ && d.arc == end_tip && !d.forward) {
            head_dart = 2 * (len_ - 1) + 1;
        } else if (d.forward) {
            head_dart = 2 * ((d.arc + 1) % len_);
        } else {
            head_dart = 2 * d.arc + 1;
        }

        int r = rot_next_[static_cast<std::size_t>(head_dart)];
        int occ = r / 2;
        if (r % 2 == 1) {
            // Departure ray: leave this occurrence along the curve.
            if (!closed_ && occ == len_ - 1) return {end_tip, true};
            return {occ, true};
        }
        // Arrival ray: continue against the curve along the arc entering here.
        if (!closed_ && occ == 0) return {kStartTip, false};
        return {(occ + len_ - 1) % len_, false};
    }

    int len_;
    bool closed_;
    std::vector<int> rot_next_;
};

}  // namespace

Diagram rm1(const Diagram& d) {
    Diagram cur = d;
    for (;;) {
        auto seq = strand_sequence(cur);
        auto pos = occurrence_positions(seq, cur.crossing_count());
        int len = static_cast<int>(seq.size());

        int best = -1;
        std::array<int, 2> best_key{};
        for (int c = 0; c < cur.crossing_count(); ++c) {
            auto [p, q] = pos[static_cast<std::size_t>(c)];
            if (!positions_adjacent(p, q, len, cur.closed())) continue;
            auto key = sorted_edge_pair(cur.crossings()[static_cast<std::size_t>(c)]);
            if (best < 0 || key < best_key) {
                best = c;
                best_key = key;
            }
        }
        if (best < 0) return cur;
        cur = cur.without_crossings({best});
    }
}

Diagram rm2(const Diagram& d) {
    Diagram cur = d;
    for (;;) {
        auto seq = strand_sequence(cur);
        auto pos = occurrence_positions(seq, cur.crossing_count());
        int len = static_cast<int>(seq.size());
        const auto& crs = cur.crossings();

        auto strand_over = [&](int position) {
            const auto& occ = seq[static_cast<std::size_t>(position)];
            return occ.edge == crs[static_cast<std::size_t>(occ.crossing)].over_edge;
        };

        int best1 = -1, best2 = -1;
        std::array<std::array<int, 2>, 2> best_key{};
        for (int c1 = 0; c1 < cur.crossing_count(); ++c1) {
            for (int c2 = c1 + 1; c2 < cur.crossing_count(); ++c2) {
                if (crs[static_cast<std::size_t>(c1)].sign !=
                    -crs[static_cast<std::size_t>(c2)].sign)
                    continue;
                auto [p1, p2] = pos[static_cast<std::size_t>(c1)];
                auto [q1, q2] = pos[static_cast<std::size_t>(c2)];
                // The two crossings must be consecutive along both strands.
                bool straight = positions_adjacent(p1, q1, len, cur.closed()) &&
                                positions_adjacent(p2, q2, len, cur.closed());
                bool crossed = positions_adjacent(p1, q2, len, cur.closed()) &&
                               positions_adjacent(p2, q1, len, cur.closed());
                if (!straight && !crossed) continue;
                int site1 = p1;
                int site2 = straight ? q1 : q2;
                // Same strand on top at both crossings.
                if (strand_over(site1) != strand_over(site2)) continue;

                std::array<std::array<int, 2>, 2> key{
                    sorted_edge_pair(crs[static_cast<std::size_t>(c1)]),
                    sorted_edge_pair(crs[static_cast<std::size_t>(c2)])};
                if (key[1] < key[0]) std::swap(key[0], key[1]);
                if (best1 < 0 || key < best_key) {
                    best1 = c1;
                    best2 = c2;
                    best_key = key;
                }
            }
        }
        if (best1 < 0) return cur;
        cur = cur.without_crossings({best1, best2});
    }
}

Diagram rm3(const Diagram& d) {
    auto seq = strand_sequence(d);
    auto pos = occurrence_positions(seq, d.crossing_count());
    int len = static_cast<int>(seq.size());
    const auto& crs = d.crossings();
    FaceTracer faces(seq, pos, crs, d.closed());

    // The arc between two consecutive occurrence positions.
    auto arc_between = [&](int x, int y) {
        if (y == x + 1) return x;
        if (x == y + 1) return y;
        return len - 1;  // the wrap arc of a closed curve
    };

    auto at = [&](int p) -> const Occurrence& { return seq[static_cast<std::size_t>(p)]; };
    auto neighbors = [&](int p) {
        std::vector<int> nb;
        if (p > 0)
            nb.push_back(p - 1);
        else if (d.closed() && len >= 2)
            nb.push_back(len - 1);
        if (p + 1 < len)
            nb.push_back(p + 1);
        else if (d.closed() && len >= 2)
            nb.push_back(0);
        return nb;
    };
    auto forward_of = [&](int p, int nb) {
        // True when nb follows p in traversal direction.
        if (nb == p + 1) return true;
        if (nb == p - 1) return false;
        return p == len - 1 && nb == 0;  // wrapped
    };

    for (int p = 0; p < len; ++p) {
        int q = p + 1 < len ? p + 1 : (d.closed() ? 0 : -1);
        if (q < 0) break;
        int c_a = at(p).crossing, c_b = at(q).crossing;
        if (c_a == c_b) continue;
        int a = at(p).edge, b = at(q).edge;
        if (!d.succ(a) || *d.succ(a) != b || a == b) continue;  // sliding edges succ-adjacent

        const auto& rec_a = crs[static_cast<std::size_t>(c_a)];
        const auto& rec_b = crs[static_cast<std::size_t>(c_b)];
        bool s_over_a = (a == rec_a.over_edge);
        bool s_over_b = (b == rec_b.over_edge);
        if (s_over_a != s_over_b) continue;  // entirely over or entirely under

        auto other_pos = [&](int c, int known) {
            auto [x, y] = pos[static_cast<std::size_t>(c)];
            return x == known ? y : x;
        };
        int r = other_pos(c_a, p);
        int w = other_pos(c_b, q);
        int e_p1 = at(r).edge;
        int e_q1 = at(w).edge;

        for (int r_nb : neighbors(r)) {
            if (r_nb == p || r_nb == q) continue;
            for (int w_nb : neighbors(w)) {
                if (w_nb == p || w_nb == q || w_nb == r_nb) continue;
                int c3 = at(r_nb).crossing;
                if (c3 != at(w_nb).crossing || c3 == c_a || c3 == c_b) continue;
                int e_p2 = at(r_nb).edge;
                int e_q2 = at(w_nb).edge;

                // The three sides must bound an actual triangular face of the
                // embedding; adjacency of the occurrences alone is not enough
                // (the sides can wind around other strands, e.g. kink loops).
                if (!faces.bounds_triangle(p, arc_between(r, r_nb), arc_between(w, w_nb)))
                    continue;

                // Guards for the re-attached crossings.
                auto invalid_pair = [&](int x, int y, int reuse1, int reuse2) {
                    if (x == y) return true;
                    if (std::abs(x - y) == 1) return true;
                    if (d.closed() && (std::min(x, y) == 0 && std::max(x, y) == d.n_edges() - 1))
                        return true;
                    int existing = d.find_crossing(x, y);
                    return existing >= 0 && existing != reuse1 && existing != reuse2;
                };
                if (invalid_pair(a, e_q2, c_a, c_b) || invalid_pair(b, e_p2, c_a, c_b)) continue;

                // Slide: the strand through a,b now meets the far strands on
                // the other side of c3. Crossing ids are reused; each keeps
                // its strand-level over/under and sign.
                std::vector<CrossingRec> new_crs = crs;
                new_crs[static_cast<std::size_t>(c_a)] =
                    CrossingRec{s_over_a ? a : e_q2, s_over_a ? e_q2 : a, rec_b.sign};
                new_crs[static_cast<std::size_t>(c_b)] =
                    CrossingRec{s_over_a ? b : e_p2, s_over_a ? e_p2 : b, rec_a.sign};

                auto slots = d.edge_slots();
                auto remove_value = [&](int edge, int id) {
                    auto& v = slots[static_cast<std::size_t>(edge)];
                    v.erase(std::find(v.begin(), v.end(), id));
                };
                auto insert_beside = [&](int edge, int anchor, int id, bool after) {
                    auto& v = slots[static_cast<std::size_t>(edge)];
                    auto it = std::find(v.begin(), v.end(), anchor);
                    v.insert(after ? it + 1 : it, id);
                };
                remove_value(e_p1, c_a);
                remove_value(e_q1, c_b);
                // c3 stays put; the slid crossings land just past it, on the
                // side away from where they were.
                insert_beside(e_q2, c3, c_a, forward_of(w, w_nb));
                insert_beside(e_p2, c3, c_b, forward_of(r, r_nb));

                return Diagram::from_crossings(d.n_edges(), d.closed(), std::move(new_crs),
                                               std::move(slots));
            }
        }
    }
    return d;
}

Diagram simplify(const Diagram& d) { return simplify(d, default_move_sequence()); }

Diagram simplify(const Diagram& d, const MoveSequence& seq) {
    Diagram cur = d;
    for (Move m : seq) {
        switch (m) {
            case Move::rm1: cur = rm1(cur); break;
            case Move::rm2: cur = rm2(cur); break;
            case Move::rm3: cur = rm3(cur); break;
        }
    }
    return cur;
}

}  // namespace jones
