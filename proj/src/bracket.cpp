#include "jones/bracket.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <future>
#include <map>
#include <numeric>
#include <set>

namespace jones {

namespace {

// Union-find over a small fixed universe, reset once per state.
class UnionFind {
public:
    explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) { reset(); }

    void reset() { std::iota(parent_.begin(), parent_.end(), 0); }

    int find(int x) {
        while (parent_[static_cast<std::size_t>(x)] != x) {
            parent_[static_cast<std::size_t>(x)] =
                parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
            x = parent_[static_cast<std::size_t>(x)];
        }
        return x;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[static_cast<std::size_t>(a)] = b;
    }

    int count_roots() {
        int n = 0;
        for (int i = 0; i < static_cast<int>(parent_.size()); ++i)
            if (find(i) == i) ++n;
        return n;
    }

    int size() const { return static_cast<int>(parent_.size()); }

private:
    std::vector<int> parent_;
};

// The state-sum machinery shared by the oracle and partial_poly. Edges are
// cut into segments at their crossings; everything that does not depend on
// the smoothing choice (segment chains through vertices) is contracted once,
// leaving one node per contracted class. Each crossing then references the
// four classes its strand ends belong to.
struct StateMachine {
    int n_classes = 0;
    std::vector<std::array<int, 4>> incidence;  // over_in, over_out, under_in, under_out
    std::vector<int> signs;
    std::vector<std::vector<int>> class_labels;  // sorted vertex labels per class

    int n_crossings() const { return static_cast<int>(signs.size()); }
};

StateMachine build_state_machine(int n_edges, bool closed, const std::vector<int>& arcs,
                                 const std::vector<CrossingRec>& crossings,
                                 const std::vector<std::vector<int>>& edge_slots) {
    StateMachine sm;
    const int n_cross = static_cast<int>(crossings.size());

    std::vector<bool> in_part(static_cast<std::size_t>(n_edges), false);
    for (int a : arcs) in_part[static_cast<std::size_t>(a)] = true;

    // Segment numbering: edge e with k crossings owns k+1 segments.
    std::vector<int> seg_base(static_cast<std::size_t>(n_edges), -1);
    int total_segs = 0;
    for (int e : arcs) {
        seg_base[static_cast<std::size_t>(e)] = total_segs;
        total_segs += static_cast<int>(edge_slots[static_cast<std::size_t>(e)].size()) + 1;
    }
    if (total_segs == 0) return sm;  // empty part: one state, empty pairing

    UnionFind uf(total_segs);
    auto first_seg = [&](int e) { return seg_base[static_cast<std::size_t>(e)]; };
    auto last_seg = [&](int e) {
        return seg_base[static_cast<std::size_t>(e)] +
               static_cast<int>(edge_slots[static_cast<std::size_t>(e)].size());
    };

    // Chain consecutive arcs through their shared vertex.
    for (int e : arcs) {
        int next = e + 1;
        if (next == n_edges) {
            if (!closed) continue;
            next = 0;
        }
        if (in_part[static_cast<std::size_t>(next)]) uf.unite(last_seg(e), first_seg(next));
    }

    // Vertex labels: edge e runs from vertex e to vertex e+1 (mod n when the
    // parent curve is closed).
    std::vector<std::set<int>> labels_by_root(static_cast<std::size_t>(total_segs));
    for (int e : arcs) {
        int tail = e;
        int head = closed ? (e + 1) % n_edges : e + 1;
        labels_by_root[static_cast<std::size_t>(uf.find(first_seg(e)))].insert(tail);
        labels_by_root[static_cast<std::size_t>(uf.find(last_seg(e)))].insert(head);
    }

    // Compact contracted classes.
    std::vector<int> class_of(static_cast<std::size_t>(total_segs), -1);
    for (int s = 0; s < total_segs; ++s) {
        int root = uf.find(s);
        if (class_of[static_cast<std::size_t>(root)] < 0) {
            class_of[static_cast<std::size_t>(root)] = sm.n_classes++;
            sm.class_labels.emplace_back(labels_by_root[static_cast<std::size_t>(root)].begin(),
                                         labels_by_root[static_cast<std::size_t>(root)].end());
        }
        class_of[static_cast<std::size_t>(s)] = class_of[static_cast<std::size_t>(root)];
    }

    // Strand ends at each crossing, identified by slot position.
    auto slot_index = [&](int edge, int id) {
        const auto& v = edge_slots[static_cast<std::size_t>(edge)];
        return static_cast<int>(std::find(v.begin(), v.end(), id) - v.begin());
    };
    sm.incidence.resize(static_cast<std::size_t>(n_cross));
    sm.signs.resize(static_cast<std::size_t>(n_cross));
    for (int id = 0; id < n_cross; ++id) {
        const auto& c = crossings[static_cast<std::size_t>(id)];
        int ko = slot_index(c.over_edge, id);
        int ku = slot_index(c.under_edge, id);
        auto seg_class = [&](int e, int k) {
            return class_of[static_cast<std::size_t>(seg_base[static_cast<std::size_t>(e)] + k)];
        };
        sm.incidence[static_cast<std::size_t>(id)] = {
            seg_class(c.over_edge, ko), seg_class(c.over_edge, ko + 1),
            seg_class(c.under_edge, ku), seg_class(c.under_edge, ku + 1)};
        sm.signs[static_cast<std::size_t>(id)] = c.sign;
    }
    return sm;
}

// Applies one smoothing state to the union-find. The A-smoothing connects
// the two regions swept when the over strand rotates counterclockwise onto
// the under strand: with sign > 0 that joins over-in to under-out and
// over-out to under-in; with sign < 0 the parallel pairing. The B-smoothing
// is the other pairing.
void apply_state(const StateMachine& sm, std::uint_fast64_t mask, UnionFind& uf, int& a_exp) {
    a_exp = 0;
    for (int c = 0; c < sm.n_crossings(); ++c) {
        bool b_smoothing = (mask >> c) & 1;
        a_exp += b_smoothing ? -1 : 1;
        const auto& inc = sm.incidence[static_cast<std::size_t>(c)];
        bool swap_ends = (sm.signs[static_cast<std::size_t>(c)] > 0) != b_smoothing;
        if (swap_ends) {
            uf.unite(inc[0], inc[3]);
            uf.unite(inc[1], inc[2]);
        } else {
            uf.unite(inc[0], inc[2]);
            uf.unite(inc[1], inc[3]);
        }
    }
}

// State tallies live in a flat (a_exp, loop count) histogram; polynomial
// arithmetic happens once per nonzero bucket, not once per state.
class StateHistogram {
public:
    StateHistogram(int max_abs_exp, int max_loops)
        : max_abs_exp_(max_abs_exp),
          stride_(max_loops + 1),
          counts_(static_cast<std::size_t>(2 * max_abs_exp + 1) *
                      static_cast<std::size_t>(max_loops + 1),
                  0) {}

    void tally(int a_exp, int loops) {
        ++counts_[static_cast<std::size_t>(a_exp + max_abs_exp_) *
                      static_cast<std::size_t>(stride_) +
                  static_cast<std::size_t>(loops)];
    }

    LaurentPoly assemble() const {
        LaurentPoly result;
        for (int a_exp = -max_abs_exp_; a_exp <= max_abs_exp_; ++a_exp) {
            for (int loops = 1; loops < stride_; ++loops) {
                std::int64_t count =
                    counts_[static_cast<std::size_t>(a_exp + max_abs_exp_) *
                                static_cast<std::size_t>(stride_) +
                            static_cast<std::size_t>(loops)];
                if (count == 0) continue;
                LaurentPoly term = scale(delta_power(loops - 1), count);
                result = add(result, mul(LaurentPoly::monomial(a_exp, 1), term));
            }
        }
        return result;
    }

private:
    int max_abs_exp_;
    int stride_;
    std::vector<std::int64_t> counts_;
};

std::vector<int> all_edges(int n_edges) {
    std::vector<int> v(static_cast<std::size_t>(n_edges));
    std::iota(v.begin(), v.end(), 0);
    return v;
}

}  // namespace

LaurentPoly bracket_oracle(const Diagram& d, int crossing_cap) {
    const int n = d.crossing_count();
    if (n > crossing_cap) throw CrossingCapExceeded(n, crossing_cap);
    if (n > 62) throw CrossingCapExceeded(n, 62);  // state masks are 64-bit

    StateMachine sm = build_state_machine(d.n_edges(), d.closed(), all_edges(d.n_edges()),
                                          d.crossings(), d.edge_slots());
    UnionFind uf(sm.n_classes);
    StateHistogram hist(std::max(n, 1), sm.n_classes);
    const std::uint_fast64_t n_states = std::uint_fast64_t(1) << n;
    for (std::uint_fast64_t mask = 0; mask < n_states; ++mask) {
        uf.reset();
        int a_exp = 0;
        apply_state(sm, mask, uf, a_exp);
        hist.tally(a_exp, uf.count_roots());
    }
    return hist.assemble();
}

namespace {

// Subdivides every edge that carries more than one crossing into one edge
// per crossing. The refined diagram traces the same curve (extra vertices on
// straight runs), so its bracket is unchanged, but crossings no longer share
// edges and the arc partition can balance them freely.
Diagram refine_for_split(const Diagram& d) {
    bool needed = false;
    for (const auto& slots : d.edge_slots())
        if (slots.size() > 1) needed = true;
    if (!needed) return d;

    const int m = d.n_edges();
    std::vector<int> first_piece(static_cast<std::size_t>(m), 0);
    int new_m = 0;
    for (int e = 0; e < m; ++e) {
        first_piece[static_cast<std::size_t>(e)] = new_m;
        new_m += std::max<int>(1, static_cast<int>(d.edge_slots()[static_cast<std::size_t>(e)].size()));
    }

    std::vector<std::vector<int>> slots(static_cast<std::size_t>(new_m));
    for (int e = 0; e < m; ++e) {
        const auto& old = d.edge_slots()[static_cast<std::size_t>(e)];
        for (std::size_t k = 0; k < old.size(); ++k) {
            int piece = first_piece[static_cast<std::size_t>(e)] + static_cast<int>(k);
            slots[static_cast<std::size_t>(piece)].push_back(old[k]);
        }
    }

    std::vector<CrossingRec> crossings = d.crossings();
    for (std::size_t id = 0; id < crossings.size(); ++id) {
        auto& c = crossings[id];
        // Map each endpoint edge to the piece that carries this crossing.
        auto piece_for = [&](int edge) {
            const auto& old = d.edge_slots()[static_cast<std::size_t>(edge)];
            for (std::size_t k = 0; k < old.size(); ++k)
                if (old[k] == static_cast<int>(id))
                    return first_piece[static_cast<std::size_t>(edge)] + static_cast<int>(k);
            throw std::logic_error("refine_for_split: crossing missing from its edge");
        };
        c.over_edge = piece_for(c.over_edge);
        c.under_edge = piece_for(c.under_edge);
    }
    return Diagram::from_crossings(new_m, d.closed(), std::move(crossings), std::move(slots));
}

}  // namespace

std::pair<SubTangle, SubTangle> split(const Diagram& original) {
    if (original.crossing_count() == 0)
        throw std::invalid_argument("split: diagram has no crossings");
    const Diagram d = refine_for_split(original);
    const int n = d.crossing_count();
    const int m = d.n_edges();
    const bool closed = d.closed();

    std::vector<bool> bearing(static_cast<std::size_t>(m), false);
    for (const auto& c : d.crossings()) {
        bearing[static_cast<std::size_t>(c.over_edge)] = true;
        bearing[static_cast<std::size_t>(c.under_edge)] = true;
    }
    std::vector<int> bearing_edges;
    for (int e = 0; e < m; ++e)
        if (bearing[static_cast<std::size_t>(e)]) bearing_edges.push_back(e);

    const int target = (n + 1) / 2;

    // Pull in the partner arc of every crossing the candidate cuts. After
    // refinement each arc carries at most one crossing, so a single pass
    // leaves nothing cut.
    auto complete = [&](std::vector<bool> in_l1) -> std::vector<bool> {
        for (;;) {
            bool changed = false;
            for (const auto& c : d.crossings()) {
                bool a = in_l1[static_cast<std::size_t>(c.over_edge)];
                bool b = in_l1[static_cast<std::size_t>(c.under_edge)];
                if (a != b) {
                    in_l1[static_cast<std::size_t>(c.over_edge)] = true;
                    in_l1[static_cast<std::size_t>(c.under_edge)] = true;
                    changed = true;
                }
            }
            if (!changed) return in_l1;
        }
    };

    auto interior_count = [&](const std::vector<bool>& in_l1) {
        int k = 0;
        for (const auto& c : d.crossings())
            if (in_l1[static_cast<std::size_t>(c.over_edge)] &&
                in_l1[static_cast<std::size_t>(c.under_edge)])
                ++k;
        return k;
    };

    auto run_count = [&](const std::vector<bool>& in_l1) {
        int runs = 0;
        for (int e = 0; e < m; ++e) {
            bool cur = in_l1[static_cast<std::size_t>(e)];
            bool prev = e > 0 ? in_l1[static_cast<std::size_t>(e - 1)]
                              : (closed ? in_l1[static_cast<std::size_t>(m - 1)] : false);
            if (cur && !prev) ++runs;
        }
        if (closed && runs == 0 && in_l1[0]) runs = 1;  // the whole circle
        return runs;
    };

    // Search over windows whose endpoints are crossing-bearing arcs. Fewer
    // runs are preferred, so simple diagrams keep the two-run shape.
    std::vector<bool> best_mask;
    std::array<int, 4> best_score{};  // |interior - target|, runs, |L1|, start
    bool have_best = false;
    for (int s : bearing_edges) {
        for (int e : bearing_edges) {
            if (!closed && e < s) continue;
            std::vector<bool> mask(static_cast<std::size_t>(m), false);
            for (int k = s;; k = (k + 1) % m) {
                mask[static_cast<std::size_t>(k)] = true;
                if (k == e) break;
            }
            mask = complete(std::move(mask));
            int size = static_cast<int>(std::count(mask.begin(), mask.end(), true));
            int interior = interior_count(mask);
            std::array<int, 4> score{std::abs(interior - target), run_count(mask), size, s};
            if (!have_best || score < best_score) {
                best_score = score;
                best_mask = mask;
                have_best = true;
            }
        }
    }

    auto make_part = [&](const std::vector<bool>& member) {
        SubTangle t;
        t.n_edges = m;
        t.closed = closed;
        t.edge_slots.assign(static_cast<std::size_t>(m), {});
        for (int e = 0; e < m; ++e)
            if (member[static_cast<std::size_t>(e)]) t.arcs.push_back(e);

        std::vector<int> remap(d.crossings().size(), -1);
        for (std::size_t id = 0; id < d.crossings().size(); ++id) {
            const auto& c = d.crossings()[id];
            if (member[static_cast<std::size_t>(c.over_edge)] &&
                member[static_cast<std::size_t>(c.under_edge)]) {
                remap[id] = static_cast<int>(t.crossings.size());
                t.crossings.push_back(c);
            }
        }
        for (int e : t.arcs) {
            for (int id : d.edge_slots()[static_cast<std::size_t>(e)]) {
                int new_id = remap[static_cast<std::size_t>(id)];
                if (new_id >= 0) t.edge_slots[static_cast<std::size_t>(e)].push_back(new_id);
            }
        }
        return t;
    };

    std::vector<bool> other(best_mask.size());
    for (std::size_t i = 0; i < best_mask.size(); ++i) other[i] = !best_mask[i];
    SubTangle l1 = make_part(best_mask);
    SubTangle l2 = make_part(other);
    if (l1.crossing_count() + l2.crossing_count() != n)
        throw std::logic_error("split: a crossing was cut between the parts");
    return {std::move(l1), std::move(l2)};
}

std::vector<PartialState> partial_poly(const SubTangle& t) {
    StateMachine sm =
        build_state_machine(t.n_edges, t.closed, t.arcs, t.crossings, t.edge_slots);
    const int k = static_cast<int>(t.crossings.size());
    if (k > 62)
        throw std::invalid_argument("partial_poly: " + std::to_string(k) +
                                    " crossings exceed the enumerable state range");
    std::vector<PartialState> states;
    states.reserve(std::size_t(1) << k);

    if (sm.n_classes == 0) {
        states.push_back(PartialState{});  // empty part: one state, no endpoints
        return states;
    }

    UnionFind uf(sm.n_classes);
    const std::uint_fast64_t n_states = std::uint_fast64_t(1) << k;
    for (std::uint_fast64_t mask = 0; mask < n_states; ++mask) {
        uf.reset();
        PartialState st;
        apply_state(sm, mask, uf, st.a_exp);

        // Collect merged endpoint labels per component; loops that closed
        // off inside the part keep an empty set.
        std::map<int, std::vector<int>> by_root;
        for (int cls = 0; cls < sm.n_classes; ++cls) {
            auto& dest = by_root[uf.find(cls)];
            const auto& lbl = sm.class_labels[static_cast<std::size_t>(cls)];
            dest.insert(dest.end(), lbl.begin(), lbl.end());
        }
        for (auto& [root, labels] : by_root) {
            std::sort(labels.begin(), labels.end());
            st.pairing.push_back(std::move(labels));
        }
        std::sort(st.pairing.begin(), st.pairing.end(),
                  [](const std::vector<int>& x, const std::vector<int>& y) {
                      if (x.empty() != y.empty()) return y.empty();
                      return x < y;
                  });
        states.push_back(std::move(st));
    }
    return states;
}

namespace {

std::vector<int> state_universe(const PartialState& st) {
    std::vector<int> u;
    for (const auto& s : st.pairing) u.insert(u.end(), s.begin(), s.end());
    std::sort(u.begin(), u.end());
    return u;
}

// A state reduced to the labels both parts can see: a canonical partition
// code over the shared labels plus the number of components invisible to
// the other part.
struct ReducedState {
    int a_exp = 0;
    int code = 0;
    int internal_components = 0;
};

}  // namespace

LaurentPoly glue(const std::vector<PartialState>& s1, const std::vector<PartialState>& s2,
                 GlueStats* stats) {
    if (s1.empty() || s2.empty())
        throw std::invalid_argument("glue: empty partial state collection");

    std::vector<int> u1 = state_universe(s1.front());
    std::vector<int> u2 = state_universe(s2.front());
    for (const auto& st : s1)
        if (state_universe(st) != u1)
            throw std::invalid_argument("glue: mismatched endpoint label universes in s1");
    for (const auto& st : s2)
        if (state_universe(st) != u2)
            throw std::invalid_argument("glue: mismatched endpoint label universes in s2");

    std::vector<int> shared;
    std::set_intersection(u1.begin(), u1.end(), u2.begin(), u2.end(), std::back_inserter(shared));
    std::map<int, int> shared_index;
    for (std::size_t i = 0; i < shared.size(); ++i) shared_index[shared[i]] = static_cast<int>(i);
    const int s = static_cast<int>(shared.size());

    // Canonical partition codes over the shared labels keep the pair loop
    // cheap: merged component counts are memoized per code pair.
    std::map<std::vector<int>, int> code_ids;
    std::vector<std::vector<int>> code_blocks;  // block index per shared label
    auto reduce = [&](const PartialState& st) {
        ReducedState r;
        r.a_exp = st.a_exp;
        std::vector<int> block_of(static_cast<std::size_t>(s), -1);
        int blocks = 0;
        for (const auto& set : st.pairing) {
            bool touches_shared = false;
            int this_block = -1;
            for (int label : set) {
                auto it = shared_index.find(label);
                if (it == shared_index.end()) continue;
                touches_shared = true;
                if (this_block < 0) this_block = blocks++;
                block_of[static_cast<std::size_t>(it->second)] = this_block;
            }
            if (!touches_shared) ++r.internal_components;
        }
        // Restricted-growth normalization for a canonical code.
        std::vector<int> rgs(block_of.size(), -1);
        std::map<int, int> seen;
        for (std::size_t i = 0; i < block_of.size(); ++i) {
            auto it = seen.emplace(block_of[i], static_cast<int>(seen.size())).first;
            rgs[i] = it->second;
        }
        auto [it, inserted] = code_ids.emplace(rgs, static_cast<int>(code_ids.size()));
        if (inserted) code_blocks.push_back(rgs);
        r.code = it->second;
        return r;
    };

    std::vector<ReducedState> r1, r2;
    r1.reserve(s1.size());
    r2.reserve(s2.size());
    for (const auto& st : s1) r1.push_back(reduce(st));
    for (const auto& st : s2) r2.push_back(reduce(st));

    // Merged component counts are memoized per code pair; a flat table when
    // the code space is small, a map otherwise.
    const int n_codes = static_cast<int>(code_blocks.size());
    const bool flat_memo = n_codes <= 4096;
    std::vector<int> merged_flat;
    if (flat_memo)
        merged_flat.assign(
            static_cast<std::size_t>(n_codes) * static_cast<std::size_t>(n_codes), -1);
    std::map<std::pair<int, int>, int> merged_map;
    UnionFind uf(s);
    auto compute_merge = [&](int c1, int c2) {
        uf.reset();
        const auto& b1 = code_blocks[static_cast<std::size_t>(c1)];
        const auto& b2 = code_blocks[static_cast<std::size_t>(c2)];
        std::map<int, int> first1, first2;
        for (int i = 0; i < s; ++i) {
            auto [it, inserted] = first1.emplace(b1[static_cast<std::size_t>(i)], i);
            if (!inserted) uf.unite(it->second, i);
            auto [jt, jinserted] = first2.emplace(b2[static_cast<std::size_t>(i)], i);
            if (!jinserted) uf.unite(jt->second, i);
        }
        return s == 0 ? 0 : uf.count_roots();
    };
    auto merged_components = [&](int c1, int c2) {
        if (flat_memo) {
            int& memo = merged_flat[static_cast<std::size_t>(c1) * static_cast<std::size_t>(n_codes) +
                                    static_cast<std::size_t>(c2)];
            if (memo < 0) memo = compute_merge(c1, c2);
            return memo;
        }
        auto [it, inserted] = merged_map.emplace(std::pair<int, int>{c1, c2}, -1);
        if (inserted) it->second = compute_merge(c1, c2);
        return it->second;
    };

    int max_abs_exp = 1, max_internal1 = 0, max_internal2 = 0;
    for (const auto& r : r1) max_internal1 = std::max(max_internal1, r.internal_components);
    for (const auto& r : r2) max_internal2 = std::max(max_internal2, r.internal_components);
    for (const auto& r : r1) max_abs_exp = std::max(max_abs_exp, std::abs(r.a_exp));
    for (const auto& r : r2) max_abs_exp = std::max(max_abs_exp, std::abs(r.a_exp));

    StateHistogram hist(2 * max_abs_exp, s + max_internal1 + max_internal2);
    std::size_t pairs = 0;
    for (const auto& a : r1) {
        for (const auto& b : r2) {
            ++pairs;
            int loops = merged_components(a.code, b.code) + a.internal_components +
                        b.internal_components;
            if (loops == 0)
                throw std::invalid_argument("glue: states describe an empty diagram");
            hist.tally(a.a_exp + b.a_exp, loops);
        }
    }
    if (stats) stats->pairs_examined = pairs;
    return hist.assemble();
}

LaurentPoly jones_of_diagram(const Diagram& d, Engine engine, const JonesOptions& opts) {
    auto bracket_by_split = [&](const Diagram& dg) {
        if (dg.crossing_count() == 0) return bracket_oracle(dg, opts.oracle_cap);
        auto [l1, l2] = split(dg);
        auto future = std::async(std::launch::async, [&l1] { return partial_poly(l1); });
        std::vector<PartialState> states2 = partial_poly(l2);
        std::vector<PartialState> states1 = future.get();
        return glue(states1, states2);
    };

    switch (engine) {
        case Engine::oracle:
            return mul(writhe_factor(writhe(d)), bracket_oracle(d, opts.oracle_cap));
        case Engine::split:
            return mul(writhe_factor(writhe(d)), bracket_by_split(d));
        case Engine::split_rm: {
            Diagram simplified =
                opts.rm_sequence.empty() ? simplify(d) : simplify(d, opts.rm_sequence);
            return mul(writhe_factor(writhe(simplified)), bracket_by_split(simplified));
        }
    }
    throw std::logic_error("jones_of_diagram: unknown engine");
}

}  // namespace jones
