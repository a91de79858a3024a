#include "jones/bracket.hpp"
#include "jones/expected.hpp"
#include "jones/io.hpp"
#include "jones/laurent.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace jones;

Engine parse_engine(const std::string& name) {
    if (name == "oracle") return Engine::oracle;
    if (name == "split") return Engine::split;
    if (name == "split-rm" || name == "split_rm") return Engine::split_rm;
    throw std::runtime_error("unknown engine '" + name + "' (oracle|split|split-rm)");
}

std::string engine_name(Engine e) {
    switch (e) {
        case Engine::oracle: return "oracle";
        case Engine::split: return "split";
        case Engine::split_rm: return "split-rm";
    }
    return "?";
}

Vec3 parse_vec3(const std::string& text) {
    std::stringstream ss(text);
    std::string tok;
    std::vector<double> vals;
    while (std::getline(ss, tok, ',')) vals.push_back(std::stod(tok));
    if (vals.size() != 3) throw std::runtime_error("--direction expects X,Y,Z");
    return {vals[0], vals[1], vals[2]};
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) out.push_back(tok);
    }
    return out;
}

Curve3D load_curve(const std::string& path, const std::string& format, const std::string& chain,
                   std::optional<int> atoms, bool closed) {
    Curve3D curve;
    if (format == "pdb") {
        curve = read_pdb(path, chain, atoms);
    } else if (format == "xyz") {
        curve = read_xyz(path);
        if (atoms) {
            if (*atoms < 3) throw std::runtime_error("--atoms must be at least 3");
            if (static_cast<std::size_t>(*atoms) < curve.points.size())
                curve.points.resize(static_cast<std::size_t>(*atoms));
        }
    } else {
        throw std::runtime_error("unknown format '" + format + "' (xyz|pdb)");
    }
    curve.closed = closed;
    curve.validate();
    return curve;
}

std::string guess_format(const std::string& path, const std::string& given) {
    if (!given.empty()) return given;
    auto ext = std::filesystem::path(path).extension().string();
    return ext == ".pdb" ? "pdb" : "xyz";
}

struct ComputeArgs {
    std::string input;
    std::string format;
    std::string chain;
    int atoms = 0;
    bool closed = false;
    int projections = 1;
    std::string engine = "split-rm";
    std::string direction;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::string var = "t";
    bool json = false;
    std::string rm_sequence;
};

int run_compute(const ComputeArgs& args) {
    Curve3D curve = load_curve(args.input, guess_format(args.input, args.format), args.chain,
                               args.atoms > 0 ? std::optional<int>(args.atoms) : std::nullopt,
                               args.closed);

    ProjectionChoice choice;
    if (!args.direction.empty()) choice.explicit_direction = parse_vec3(args.direction);
    if (args.seed_set) choice.seed = args.seed;

    JonesOptions opts;
    if (!args.rm_sequence.empty()) opts.rm_sequence = parse_move_sequence(args.rm_sequence);

    Engine engine = parse_engine(args.engine);
    ExpectedJonesResult res = expected_jones(curve, args.projections, engine, choice, opts);

    int cross_lo = -1, cross_hi = -1;
    for (const auto& r : res.reports) {
        if (!r.accepted) continue;
        if (cross_lo < 0 || r.crossings < cross_lo) cross_lo = r.crossings;
        if (r.crossings > cross_hi) cross_hi = r.crossings;
    }

    if (args.json) {
        nlohmann::json j;
        j["engine"] = engine_name(engine);
        j["polynomial_a"] = render_a(res.poly_a);
        j["polynomial_t"] = render_t(res.poly_t);
        j["n_requested"] = res.n_requested;
        j["n_accepted"] = res.n_accepted;
        j["elapsed_seconds"] = res.elapsed_seconds;
        nlohmann::json dirs = nlohmann::json::array();
        for (const auto& r : res.reports) {
            dirs.push_back({{"direction", {r.direction.x, r.direction.y, r.direction.z}},
                            {"accepted", r.accepted},
                            {"reason", r.reason},
                            {"crossings", r.crossings}});
        }
        j["directions"] = dirs;
        std::cout << j.dump(2) << "\n";
    } else {
        if (args.var == "A")
            std::cout << "jones (A): " << render_a(res.poly_a) << "\n";
        else
            std::cout << "jones (t): " << render_t(res.poly_t) << "\n";
        std::cout << "projections: " << res.n_accepted << "/" << res.n_requested << " accepted\n";
        if (cross_lo >= 0) {
            std::cout << "crossings: " << cross_lo;
            if (cross_hi != cross_lo) std::cout << ".." << cross_hi;
            std::cout << "\n";
        }
        std::cout << "elapsed: " << res.elapsed_seconds << " s\n";
    }
    return 0;
}

struct BenchArgs {
    std::string inputs;
    std::string atoms;
    std::string engines = "oracle,split,split-rm";
    std::string format;
    std::string chain;
    bool closed = false;
    int reps = 5;
    std::string csv_path;
    std::string rm_sequence;
};

struct BenchCell {
    bool ok = false;
    std::string note;
    double min_s = 0, median_s = 0;
};

int run_bench(const BenchArgs& args) {
    auto inputs = split_list(args.inputs);
    if (inputs.empty()) throw std::runtime_error("bench: no inputs");
    std::vector<std::optional<int>> prefixes;
    if (args.atoms.empty()) {
        prefixes.push_back(std::nullopt);
    } else {
        for (const auto& a : split_list(args.atoms)) prefixes.push_back(std::stoi(a));
    }
    std::vector<Engine> engines;
    std::vector<std::string> engine_names;
    for (const auto& e : split_list(args.engines)) {
        engines.push_back(parse_engine(e));
        engine_names.push_back(engine_name(engines.back()));
    }
    if (engines.empty()) throw std::runtime_error("bench: no engines");
    if (args.reps < 1) throw std::runtime_error("bench: reps must be positive");

    JonesOptions opts;
    if (!args.rm_sequence.empty()) opts.rm_sequence = parse_move_sequence(args.rm_sequence);

    struct Row {
        std::string label;
        int crossings = -1;
        std::vector<BenchCell> cells;
    };
    std::vector<Row> rows;

    for (const auto& input : inputs) {
        for (const auto& prefix : prefixes) {
            Row row;
            row.label = std::filesystem::path(input).filename().string();
            if (prefix) row.label += ":" + std::to_string(*prefix);
            try {
                Curve3D curve = load_curve(input, guess_format(input, args.format), args.chain,
                                           prefix, args.closed);
                PlanarPolyline p = project(curve, Direction({0, 0, 1}));
                Regularity reg = check_regular(p);
                if (!reg.ok) throw std::runtime_error("projection rejected: " + reg.reason);
                Diagram d = build_diagram(p);
                row.crossings = d.crossing_count();
                for (Engine engine : engines) {
                    BenchCell cell;
                    try {
                        std::vector<double> times;
                        for (int r = 0; r < args.reps; ++r) {
                            auto t0 = std::chrono::steady_clock::now();
                            LaurentPoly poly = jones_of_diagram(d, engine, opts);
                            auto t1 = std::chrono::steady_clock::now();
                            (void)poly;
                            times.push_back(std::chrono::duration<double>(t1 - t0).count());
                        }
                        std::sort(times.begin(), times.end());
                        cell.ok = true;
                        cell.min_s = times.front();
                        cell.median_s = times[times.size() / 2];
                    } catch (const CrossingCapExceeded& e) {
                        cell.note = "refused (" + std::to_string(e.count()) + " crossings)";
                    } catch (const std::exception& e) {
                        cell.note = std::string("error: ") + e.what();
                    }
                    row.cells.push_back(cell);
                }
            } catch (const std::exception& e) {
                row.cells.assign(engines.size(), BenchCell{false, e.what(), 0, 0});
            }
            rows.push_back(std::move(row));
        }
    }

    // Aligned text table: one row per structure, min/median per engine.
    auto fmt_cell = [](const BenchCell& c) {
        if (!c.ok) return c.note;
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.6f/%.6f", c.min_s, c.median_s);
        return std::string(buf);
    };
    std::vector<std::size_t> widths{9, 9};
    for (const auto& r : rows) widths[0] = std::max(widths[0], r.label.size());
    std::vector<std::string> header{"structure", "crossings"};
    for (const auto& name : engine_names) {
        header.push_back(name + " min/median [s]");
        widths.push_back(header.back().size());
    }
    for (const auto& r : rows)
        for (std::size_t i = 0; i < r.cells.size(); ++i)
            widths[2 + i] = std::max(widths[2 + i], fmt_cell(r.cells[i]).size());

    auto print_row = [&](const std::vector<std::string>& cols) {
        for (std::size_t i = 0; i < cols.size(); ++i)
            std::cout << cols[i] << std::string(widths[i] - cols[i].size() + 2, ' ');
        std::cout << "\n";
    };
    print_row(header);
    for (const auto& r : rows) {
        std::vector<std::string> cols{r.label,
                                      r.crossings >= 0 ? std::to_string(r.crossings) : "-"};
        for (const auto& c : r.cells) cols.push_back(fmt_cell(c));
        print_row(cols);
    }

    if (!args.csv_path.empty()) {
        std::ofstream csv(args.csv_path);
        if (!csv) throw std::runtime_error("cannot write " + args.csv_path);
        csv << "structure,engine,crossings,reps,min_s,median_s\n";
        for (const auto& r : rows) {
            for (std::size_t i = 0; i < r.cells.size(); ++i) {
                const auto& c = r.cells[i];
                csv << r.label << "," << engine_names[i] << "," << r.crossings << "," << args.reps
                    << ",";
                if (c.ok) {
                    char buf[64];
                    std::snprintf(buf, sizeof buf, "%.9f,%.9f", c.min_s, c.median_s);
                    csv << buf;
                } else {
                    csv << ",";
                }
                csv << "\n";
            }
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Jones polynomial of open and closed polygonal curves in R^3"};
    app.require_subcommand(1);

    ComputeArgs cargs;
    auto* compute = app.add_subcommand("compute", "compute the (expected) Jones polynomial");
    compute->add_option("--input", cargs.input, "coordinate file")->required();
    compute->add_option("--format", cargs.format, "xyz|pdb (default: by extension)");
    compute->add_option("--chain", cargs.chain, "PDB chain id (default: first chain)");
    compute->add_option("--atoms", cargs.atoms, "keep only the first K points/CA atoms");
    compute->add_flag("--closed", cargs.closed, "treat the curve as closed");
    compute->add_option("--projections", cargs.projections, "number of projection directions")
        ->default_val(1);
    compute->add_option("--engine", cargs.engine, "oracle|split|split-rm")
        ->default_val("split-rm");
    auto* dir_opt =
        compute->add_option("--direction", cargs.direction, "explicit projection direction X,Y,Z");
    compute->add_option("--seed", cargs.seed, "seeded random projection directions")
        ->excludes(dir_opt)
        ->each([&cargs](const std::string&) { cargs.seed_set = true; });
    compute->add_option("--var", cargs.var, "A|t output variable")
        ->default_val("t")
        ->check(CLI::IsMember({"A", "t"}));
    compute->add_flag("--json", cargs.json, "emit the full result as JSON");
    compute->add_option("--rm-sequence", cargs.rm_sequence,
                        "Reidemeister move order for split-rm, e.g. 1,2,3,1,2");

    BenchArgs bargs;
    auto* bench = app.add_subcommand("bench", "time the engines on a set of structures");
    bench->add_option("--input", bargs.inputs, "comma-separated coordinate files")->required();
    bench->add_option("--atoms", bargs.atoms, "comma-separated prefix lengths");
    bench->add_option("--engines", bargs.engines, "comma-separated engine list")
        ->default_val("oracle,split,split-rm");
    bench->add_option("--format", bargs.format, "xyz|pdb (default: by extension)");
    bench->add_option("--chain", bargs.chain, "PDB chain id");
    bench->add_flag("--closed", bargs.closed, "treat curves as closed");
    bench->add_option("--reps", bargs.reps, "repetitions per cell")->default_val(5);
    bench->add_option("--csv", bargs.csv_path, "also write results as CSV");
    bench->add_option("--rm-sequence", bargs.rm_sequence, "Reidemeister move order for split-rm");

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed()) return run_compute(cargs);
        if (bench->parsed()) return run_bench(bargs);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
