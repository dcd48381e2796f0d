#include "confpersist/cli.hpp"

#include "confpersist/complex.hpp"
#include "confpersist/errors.hpp"
#include "confpersist/io.hpp"
#include "confpersist/obstruction.hpp"
#include "confpersist/packing.hpp"
#include "confpersist/persistence.hpp"
#include "confpersist/regular.hpp"
#include "confpersist/util.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

namespace confpersist::cli {

using nlohmann::json;

namespace {

struct RunConfig {
    std::string subcommand;
    std::vector<std::string> inputs;
    std::string metric = "matrix"; // matrix | graph | circle
    int k = 2;
    double r = 0;
    double delta = 0;
    std::string r_grid_raw;
    int k_max = 2;
    int t_max = 2;
    double tol = 1e-8;
    std::size_t budget = kDefaultBudget;
    std::string out_dir = ".";
    std::uint64_t seed = 0;
    std::string pack_mode = "exact";
    bool map_complex = false;

    std::vector<double> r_grid() const {
        std::vector<double> grid;
        std::stringstream ss(r_grid_raw);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) continue;
            try {
                std::size_t used = 0;
                grid.push_back(std::stod(tok, &used));
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw Error(Errc::invalid_input, "bad --r-grid entry '" + tok + "'");
            }
        }
        return grid;
    }

    std::string canonical() const {
        std::ostringstream os;
        os << "cmd=" << subcommand << ";metric=" << metric << ";k=" << k << ";r="
           << format_sig12(r) << ";delta=" << format_sig12(delta) << ";grid=" << r_grid_raw
           << ";k_max=" << k_max << ";t_max=" << t_max << ";tol=" << format_sig12(tol)
           << ";budget=" << budget << ";seed=" << seed << ";mode=" << pack_mode
           << ";complex=" << map_complex;
        for (const auto& i : inputs) os << ";in=" << i;
        return os.str();
    }
};

FiniteMetricSpace load_metric(const RunConfig& cfg) {
    if (cfg.inputs.empty()) throw Error(Errc::invalid_input, "--input is required");
    const std::string& path = cfg.inputs.front();
    if (cfg.metric == "matrix") return read_distance_csv(path);
    if (cfg.metric == "graph") return shortest_path_metric(read_graph_json(path));
    if (cfg.metric == "circle") return read_circle_json(path);
    throw Error(Errc::invalid_input, "unknown metric kind '" + cfg.metric + "'");
}

ExportMeta make_meta(const RunConfig& cfg) {
    ExportMeta meta;
    meta.tool_version = kToolVersion;
    meta.config_hash = hex64(fnv1a(cfg.canonical()));
    return meta;
}

std::filesystem::path out_path(const RunConfig& cfg, const std::string& name) {
    std::filesystem::create_directories(cfg.out_dir);
    return std::filesystem::path(cfg.out_dir) / name;
}

int cmd_build(const RunConfig& cfg) {
    auto space = load_metric(cfg);
    auto fc = build_independence_filtration(space, cfg.k_max, cfg.budget);
    write_complex_jsonl(out_path(cfg, "complex.jsonl").string(), fc, space, make_meta(cfg));
    return 0;
}

int cmd_persist(const RunConfig& cfg) {
    auto space = load_metric(cfg);
    auto fc = build_independence_filtration(space, cfg.k_max, cfg.budget);
    auto bc = compute_persistence(fc, cfg.k_max - 1);
    write_barcode_json(out_path(cfg, "barcode.json").string(), bc, make_meta(cfg));
    return 0;
}

int cmd_obstruct(const RunConfig& cfg) {
    auto space = load_metric(cfg);
    auto grid = cfg.r_grid();
    if (!grid.empty()) {
        double lo = *std::min_element(grid.begin(), grid.end());
        if (cfg.delta > lo)
            throw Error(Errc::guard_violated, "--delta must be <= min(--r-grid)");
    }
    auto rep = obstruction_report(space, cfg.k, cfg.r, cfg.delta, grid, cfg.t_max, -1,
                                  cfg.budget);
    write_obstruction_json(out_path(cfg, "obstruction.json").string(), rep, make_meta(cfg));
    if (!grid.empty()) {
        std::vector<double> abs_grid;
        for (double rp : grid) abs_grid.push_back(rp + cfg.r);
        auto build = build_config_rips(space, cfg.k, cfg.delta, abs_grid, 2, cfg.budget);
        write_cocycle_jsonl(out_path(cfg, "cocycle.jsonl").string(), build.complex,
                            build.cocycle, make_meta(cfg));
    }
    return 0;
}

int cmd_verify_regular(const RunConfig& cfg) {
    if (cfg.inputs.size() < 2)
        throw Error(Errc::invalid_input,
                    "verify-regular needs --input <metric> --input <map.csv>");
    auto space = load_metric(cfg);
    auto f = read_map_csv(cfg.inputs[1], space, cfg.map_complex);
    auto linear = is_kr_regular(f, cfg.k, cfg.r, cfg.tol, cfg.budget);
    if (f.field == FieldTag::real) {
        auto affine = is_affine_kr_regular(f, cfg.k, cfg.r, cfg.tol, cfg.budget);
        auto realization = realization_check(f, cfg.k, cfg.r, cfg.tol, cfg.budget);
        write_regularity_json(out_path(cfg, "regularity.json").string(), linear, &affine,
                              &realization, make_meta(cfg));
    } else {
        write_regularity_json(out_path(cfg, "regularity.json").string(), linear, nullptr,
                              nullptr, make_meta(cfg));
    }
    return linear.passed ? 0 : 1;
}

int cmd_pack(const RunConfig& cfg) {
    auto space = load_metric(cfg);
    PackingMode mode = cfg.pack_mode == "greedy" ? PackingMode::greedy : PackingMode::exact;
    auto res = max_packing_radius(space, cfg.k, mode, cfg.budget, cfg.seed);
    write_packing_json(out_path(cfg, "packing.json").string(), res, make_meta(cfg));
    return 0;
}

int cmd_delta_check(const RunConfig& cfg) {
    auto space = load_metric(cfg);
    auto fc = build_independence_filtration(space, cfg.k_max, cfg.budget);
    std::vector<double> radii = fc.critical_radii();
    radii.push_back(0.0);

    json audit;
    audit["k_max"] = cfg.k_max;
    json checks = json::array();
    bool all_ok = true;
    auto is_zero = [](const IntMat& m) {
        for (long long v : m.a)
            if (v) return false;
        return true;
    };
    for (int k = 2; k <= cfg.k_max; ++k) {
        for (double r : radii) {
            IntMat dk = configuration_boundary(k, r, space, cfg.budget);
            bool sq_zero = true;
            if (k >= 3) {
                IntMat dk1 = configuration_boundary(k - 1, r, space, cfg.budget);
                sq_zero = is_zero(mat_mul(dk1, dk));
            }
            checks.push_back({{"k", k}, {"r", format_sig12(r)}, {"dd_zero", sq_zero}});
            all_ok = all_ok && sq_zero;
        }
        for (std::size_t i = 0; i + 1 < radii.size(); ++i) {
            double r1 = radii[i], r2 = radii[i + 1];
            if (r2 > r1) continue;
            IntMat inc_k = configuration_inclusion(k, r1, r2, space, cfg.budget);
            IntMat inc_k1 = configuration_inclusion(k - 1, r1, r2, space, cfg.budget);
            IntMat lhs = mat_mul(configuration_boundary(k, r2, space, cfg.budget), inc_k);
            IntMat rhs = mat_mul(inc_k1, configuration_boundary(k, r1, space, cfg.budget));
            bool commute = lhs.a == rhs.a && lhs.rows == rhs.rows && lhs.cols == rhs.cols;
            checks.push_back({{"k", k},
                              {"r_from", format_sig12(r1)},
                              {"r_to", format_sig12(r2)},
                              {"square_commutes", commute}});
            all_ok = all_ok && commute;
        }
    }
    audit["checks"] = checks;
    audit["ok"] = all_ok;
    ExportMeta meta = make_meta(cfg);
    audit["schema_version"] = meta.schema_version;
    audit["tool_version"] = meta.tool_version;
    audit["config_hash"] = meta.config_hash;
    std::ofstream out(out_path(cfg, "delta_audit.json"));
    out << audit.dump(2) << "\n";
    return all_ok ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"hard-sphere configuration filtrations, persistence and embedding obstructions",
                 "confpersist"};
    app.require_subcommand(1);

    RunConfig cfg;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--input", cfg.inputs, "input path (repeatable)");
        sub->add_option("--metric", cfg.metric, "metric source: matrix|graph|circle");
        sub->add_option("--k", cfg.k, "configuration multiplicity");
        sub->add_option("--r", cfg.r, "hard-sphere radius");
        sub->add_option("--delta", cfg.delta, "proximity scale");
        sub->add_option("--r-grid", cfg.r_grid_raw, "comma-separated radius offsets");
        sub->add_option("--k-max", cfg.k_max, "maximum configuration size");
        sub->add_option("--t-max", cfg.t_max, "maximum class power");
        sub->add_option("--tol", cfg.tol, "relative rank tolerance");
        sub->add_option("--budget", cfg.budget, "enumeration budget");
        sub->add_option("--out", cfg.out_dir, "output directory");
        sub->add_option("--seed", cfg.seed, "random seed (greedy packing starts)");
    };

    auto* build = app.add_subcommand("build", "export the independence filtration");
    add_common(build);
    auto* persist = app.add_subcommand("persist", "compute persistence barcodes");
    add_common(persist);
    auto* obstruct = app.add_subcommand("obstruct", "dimension lower bounds from w1");
    add_common(obstruct);
    auto* verify = app.add_subcommand("verify-regular", "brute-force (k,r)-regularity");
    add_common(verify);
    verify->add_flag("--complex", cfg.map_complex, "map values are complex (interleaved re/im)");
    auto* pack = app.add_subcommand("pack", "maximal hard-sphere packing radius");
    add_common(pack);
    pack->add_option("--mode", cfg.pack_mode, "exact|greedy");
    auto* delta = app.add_subcommand("delta-check", "boundary and inclusion audits");
    add_common(delta);

    if (args.empty()) {
        std::cout << app.help() << std::endl;
        return 0;
    }
    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            std::cout << app.help() << std::endl;
            return 0;
        }
        std::cout << json{{"error", {{"code", "UsageError"}, {"message", e.what()}}}}.dump()
                  << std::endl;
        return 2;
    }

    try {
        if (build->parsed()) { cfg.subcommand = "build"; return cmd_build(cfg); }
        if (persist->parsed()) { cfg.subcommand = "persist"; return cmd_persist(cfg); }
        if (obstruct->parsed()) { cfg.subcommand = "obstruct"; return cmd_obstruct(cfg); }
        if (verify->parsed()) { cfg.subcommand = "verify-regular"; return cmd_verify_regular(cfg); }
        if (pack->parsed()) { cfg.subcommand = "pack"; return cmd_pack(cfg); }
        if (delta->parsed()) { cfg.subcommand = "delta-check"; return cmd_delta_check(cfg); }
        return 2;
    } catch (const Error& e) {
        std::cout << json{{"error", {{"code", errc_name(e.code())}, {"message", e.what()}}}}.dump()
                  << std::endl;
        return 2;
    } catch (const std::exception& e) {
        std::cout << json{{"error", {{"code", "Internal"}, {"message", e.what()}}}}.dump()
                  << std::endl;
        return 3;
    }
}

} // namespace confpersist::cli
