#include "jones/expected.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <random>
#include <thread>

namespace jones {

namespace {

std::vector<Direction> choose_directions(int n, const ProjectionChoice& choice) {
    if (choice.explicit_direction && choice.seed)
        throw std::invalid_argument("expected_jones: explicit direction and seed are exclusive");
    if (choice.explicit_direction) {
        if (n != 1)
            throw std::invalid_argument(
                "expected_jones: an explicit direction requires a single projection");
        return {Direction(*choice.explicit_direction)};
    }
    if (choice.seed) {
        std::mt19937_64 rng(*choice.seed);
        std::normal_distribution<double> gauss(0.0, 1.0);
        std::vector<Direction> dirs;
        dirs.reserve(static_cast<std::size_t>(n));
        while (static_cast<int>(dirs.size()) < n) {
            Vec3 v{gauss(rng), gauss(rng), gauss(rng)};
            if (v.norm() < 1e-6) continue;
            dirs.emplace_back(v);
        }
        return dirs;
    }
    return fibonacci_sphere(n);
}

struct PerDirection {
    DirectionReport report;
    LaurentPoly poly;
};

PerDirection evaluate_direction(const Curve3D& curve, const Direction& dir, Engine engine,
                                const JonesOptions& opts) {
    PerDirection out;
    out.report.direction = dir.vec();
    PlanarPolyline p = project(curve, dir);
    Regularity reg = check_regular(p);
    if (!reg.ok) {
        out.report.reason = reg.reason;
        return out;
    }
    Diagram d = build_diagram(p);
    out.report.crossings = d.crossing_count();
    try {
        out.poly = jones_of_diagram(d, engine, opts);
    } catch (const CrossingCapExceeded& e) {
        out.report.reason = e.what();
        out.report.crossings = -1;
        return out;
    }
    out.report.accepted = true;
    return out;
}

}  // namespace

ExpectedJonesResult expected_jones(const Curve3D& curve, int n, Engine engine,
                                   const ProjectionChoice& choice, const JonesOptions& opts) {
    if (n < 1) throw std::invalid_argument("expected_jones: n must be positive");
    return expected_jones_over(curve, choose_directions(n, choice), engine, opts);
}

ExpectedJonesResult expected_jones_over(const Curve3D& curve,
                                        const std::vector<Direction>& directions, Engine engine,
                                        const JonesOptions& opts) {
    if (directions.empty()) throw std::invalid_argument("expected_jones: no directions");
    curve.validate();

    auto t0 = std::chrono::steady_clock::now();
    const std::size_t n = directions.size();
    std::vector<PerDirection> results(n);

    // Directions are independent; workers pull indices, the reduction below
    // runs in direction order so the result is identical regardless of
    // scheduling.
    std::size_t n_workers = std::min<std::size_t>(
        n, std::max(1u, std::thread::hardware_concurrency()));
    if (n_workers <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            results[i] = evaluate_direction(curve, directions[i], engine, opts);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        std::vector<std::thread> workers;
        workers.reserve(n_workers);
        for (std::size_t w = 0; w < n_workers; ++w) {
            workers.emplace_back([&] {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= n) return;
                    try {
                        results[i] = evaluate_direction(curve, directions[i], engine, opts);
                    } catch (...) {
                        std::lock_guard<std::mutex> lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                        return;
                    }
                }
            });
        }
        for (auto& t : workers) t.join();
        if (failure) std::rethrow_exception(failure);
    }

    ExpectedJonesResult res;
    res.n_requested = static_cast<int>(n);
    LaurentPoly sum;
    for (const auto& pd : results) {
        res.reports.push_back(pd.report);
        if (pd.report.accepted) {
            sum = add(sum, pd.poly);
            ++res.n_accepted;
        }
    }
    if (res.n_accepted == 0)
        throw std::runtime_error("expected_jones: all " + std::to_string(n) +
                                 " projections were rejected (first reason: " +
                                 res.reports.front().reason + ")");
    res.poly_a = scale(sum, Rational(1, res.n_accepted));
    res.poly_t = to_t(res.poly_a);
    res.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

}  // namespace jones
