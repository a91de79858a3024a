#include "jones/diagram.hpp"

#include "edge_intersections.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>

namespace jones {

namespace {

bool edges_adjacent(int i, int j, int n_edges, bool closed) {
    if (std::abs(i - j) == 1) return true;
    return closed && ((i == 0 && j == n_edges - 1) || (j == 0 && i == n_edges - 1));
}

}  // namespace

Diagram Diagram::from_crossings(int n_edges, bool closed, std::vector<CrossingRec> crossings,
                                std::vector<std::vector<int>> edge_slots) {
    if (n_edges < 3) throw std::invalid_argument("Diagram: fewer than 3 edges");
    if (static_cast<int>(edge_slots.size()) != n_edges)
        throw std::invalid_argument("Diagram: edge_slots size mismatch");

    std::set<std::pair<int, int>> seen;
    for (const auto& c : crossings) {
        if (c.over_edge < 0 || c.over_edge >= n_edges || c.under_edge < 0 ||
            c.under_edge >= n_edges || c.over_edge == c.under_edge)
            throw std::invalid_argument("Diagram: crossing with invalid edge pair");
        if (edges_adjacent(c.over_edge, c.under_edge, n_edges, closed))
            throw std::invalid_argument("Diagram: adjacent edges must not cross");
        if (c.sign != 1 && c.sign != -1)
            throw std::invalid_argument("Diagram: crossing sign must be +1 or -1");
        auto pair = std::minmax(c.over_edge, c.under_edge);
        if (!seen.insert({pair.first, pair.second}).second)
            throw std::invalid_argument("Diagram: more than one crossing on an edge pair");
    }

    std::vector<int> appearances(crossings.size(), 0);
    for (int e = 0; e < n_edges; ++e) {
        for (int id : edge_slots[static_cast<std::size_t>(e)]) {
            if (id < 0 || id >= static_cast<int>(crossings.size()))
                throw std::invalid_argument("Diagram: slot refers to unknown crossing");
            const auto& c = crossings[static_cast<std::size_t>(id)];
            if (c.over_edge != e && c.under_edge != e)
                throw std::invalid_argument("Diagram: slot on an edge the crossing does not use");
            ++appearances[static_cast<std::size_t>(id)];
        }
    }
    for (std::size_t id = 0; id < crossings.size(); ++id)
        if (appearances[id] != 2)
            throw std::invalid_argument("Diagram: crossing must appear in exactly two slot lists");

    Diagram d;
    d.n_edges_ = n_edges;
    d.closed_ = closed;
    d.crossings_ = std::move(crossings);
    d.edge_slots_ = std::move(edge_slots);
    return d;
}

int Diagram::find_crossing(int i, int j) const {
    if (i < 0 || i >= n_edges_ || j < 0 || j >= n_edges_) return -1;
    for (int id : edge_slots_[static_cast<std::size_t>(i)]) {
        const auto& c = crossings_[static_cast<std::size_t>(id)];
        if ((c.over_edge == i && c.under_edge == j) || (c.over_edge == j && c.under_edge == i))
            return id;
    }
    return -1;
}

bool Diagram::over(int i, int j) const {
    int id = find_crossing(i, j);
    return id >= 0 && crossings_[static_cast<std::size_t>(id)].over_edge == i;
}

int Diagram::sign(int i, int j) const {
    int id = find_crossing(i, j);
    return id < 0 ? 0 : crossings_[static_cast<std::size_t>(id)].sign;
}

Diagram Diagram::without_crossings(const std::vector<int>& ids) const {
    std::vector<bool> drop(crossings_.size(), false);
    for (int id : ids) {
        if (id < 0 || id >= static_cast<int>(crossings_.size()))
            throw std::invalid_argument("without_crossings: unknown crossing id");
        drop[static_cast<std::size_t>(id)] = true;
    }
    std::vector<int> remap(crossings_.size(), -1);
    std::vector<CrossingRec> kept;
    for (std::size_t id = 0; id < crossings_.size(); ++id) {
        if (drop[id]) continue;
        remap[id] = static_cast<int>(kept.size());
        kept.push_back(crossings_[id]);
    }
    std::vector<std::vector<int>> slots(edge_slots_.size());
    for (std::size_t e = 0; e < edge_slots_.size(); ++e) {
        for (int id : edge_slots_[e])
            if (remap[static_cast<std::size_t>(id)] >= 0)
                slots[e].push_back(remap[static_cast<std::size_t>(id)]);
    }
    return from_crossings(n_edges_, closed_, std::move(kept), std::move(slots));
}

std::string Diagram::debug_json() const {
    const int n = n_edges_;
    std::vector<std::vector<bool>> cross_m(static_cast<std::size_t>(n),
                                           std::vector<bool>(static_cast<std::size_t>(n), false));
    std::vector<std::vector<bool>> over_m = cross_m;
    std::vector<std::vector<int>> sign_m(static_cast<std::size_t>(n),
                                         std::vector<int>(static_cast<std::size_t>(n), 0));
    for (const auto& c : crossings_) {
        auto o = static_cast<std::size_t>(c.over_edge);
        auto u = static_cast<std::size_t>(c.under_edge);
        cross_m[o][u] = cross_m[u][o] = true;
        over_m[o][u] = true;
        sign_m[o][u] = sign_m[u][o] = c.sign;
    }
    nlohmann::json j;
    j["n_edges"] = n;
    j["closed"] = closed_;
    j["cross"] = cross_m;
    j["over"] = over_m;
    j["sign"] = sign_m;
    return j.dump();
}

Diagram build_diagram(const PlanarPolyline& p, double eps) {
    auto sweep = detail::scan_intersections(p, eps);
    if (!sweep.ok)
        throw std::invalid_argument("build_diagram: irregular projection: " + sweep.reason);

    const int m = p.edge_count();
    std::vector<CrossingRec> crossings;
    crossings.reserve(sweep.hits.size());
    // (edge, t, crossing id) triples for slot ordering
    std::vector<std::vector<std::pair<double, int>>> by_edge(static_cast<std::size_t>(m));
    for (const auto& hit : sweep.hits) {
        CrossingRec c;
        if (hit.h1 > hit.h2) {
            c.over_edge = hit.e1;
            c.under_edge = hit.e2;
            c.sign = hit.det > 0 ? 1 : -1;
        } else {
            c.over_edge = hit.e2;
            c.under_edge = hit.e1;
            // det is cross(dir_e1, dir_e2); swap the operands, flip the sign.
            c.sign = hit.det > 0 ? -1 : 1;
        }
        int id = static_cast<int>(crossings.size());
        crossings.push_back(c);
        by_edge[static_cast<std::size_t>(hit.e1)].push_back({hit.t1, id});
        by_edge[static_cast<std::size_t>(hit.e2)].push_back({hit.t2, id});
    }

    std::vector<std::vector<int>> slots(static_cast<std::size_t>(m));
    for (int e = 0; e < m; ++e) {
        auto& v = by_edge[static_cast<std::size_t>(e)];
        std::sort(v.begin(), v.end());
        for (const auto& [t, id] : v) slots[static_cast<std::size_t>(e)].push_back(id);
    }
    return Diagram::from_crossings(m, p.closed, std::move(crossings), std::move(slots));
}

int writhe(const Diagram& d) {
    int w = 0;
    for (const auto& c : d.crossings()) w += c.sign;
    return w;
}

}  // namespace jones
