#include "confpersist/io.hpp"

#include "confpersist/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

namespace confpersist {

using nlohmann::json;

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    std::stringstream ss(line);
    while (std::getline(ss, cur, ',')) {
        // trim
        std::size_t a = cur.find_first_not_of(" \t\r");
        std::size_t b = cur.find_last_not_of(" \t\r");
        out.push_back(a == std::string::npos ? "" : cur.substr(a, b - a + 1));
    }
    return out;
}

double parse_dist_entry(const std::string& tok) {
    if (tok == "inf" || tok == "+inf") return kInf;
    try {
        std::size_t used = 0;
        double v = std::stod(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw Error(Errc::invalid_input, "bad distance entry '" + tok + "'");
    }
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::invalid_input, "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw Error(Errc::invalid_input, std::string("bad JSON in ") + path + ": " + e.what());
    }
    return j;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(Errc::invalid_input, "cannot write " + path);
    return out;
}

json meta_json(const ExportMeta& meta) {
    return json{{"schema_version", meta.schema_version},
                {"tool_version", meta.tool_version},
                {"config_hash", meta.config_hash}};
}

// Finite values render with 12 significant digits; +inf renders as the
// string "inf", mirroring the CSV convention.
json num_or_inf(double v) {
    if (std::isinf(v)) return json("inf");
    return json::parse(format_sig12(v));
}

} // namespace

FiniteMetricSpace read_distance_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::invalid_input, "cannot open " + path);
    std::string line;
    std::vector<std::string> ids;
    std::vector<std::vector<double>> dist;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto toks = split_csv_line(line);
        if (header) {
            ids = toks;
            header = false;
            continue;
        }
        if (toks.size() != ids.size())
            throw Error(Errc::invalid_input, "matrix row width != header width");
        std::vector<double> row;
        row.reserve(toks.size());
        for (const auto& t : toks) row.push_back(parse_dist_entry(t));
        dist.push_back(std::move(row));
    }
    if (dist.size() != ids.size())
        throw Error(Errc::invalid_input, "matrix row count != header width");
    return FiniteMetricSpace::create(ids, dist);
}

WeightedGraph read_graph_json(const std::string& path) {
    json j = load_json(path);
    WeightedGraph g;
    if (!j.contains("vertices") || !j.contains("edges"))
        throw Error(Errc::invalid_input, "graph JSON needs 'vertices' and 'edges'");
    for (const auto& v : j["vertices"]) g.vertices.push_back(v.get<std::string>());
    for (const auto& e : j["edges"])
        g.edges.push_back({e.at("u").get<std::string>(), e.at("v").get<std::string>(),
                           e.at("w").get<double>()});
    g.validate();
    return g;
}

FiniteMetricSpace read_circle_json(const std::string& path) {
    json j = load_json(path);
    if (!j.contains("n") || !j.contains("L"))
        throw Error(Errc::invalid_input, "circle JSON needs 'n' and 'L'");
    return sample_circle(j["n"].get<std::size_t>(), j["L"].get<double>());
}

SampledMap read_map_csv(const std::string& path, const FiniteMetricSpace& domain, bool complex) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::invalid_input, "cannot open " + path);
    SampledMap f;
    f.domain = domain;
    f.field = complex ? FieldTag::complex_ : FieldTag::real;
    std::string line;
    std::vector<std::vector<double>> rows(domain.size());
    std::size_t width = 0;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto toks = split_csv_line(line);
        if (toks.size() < 2) throw Error(Errc::invalid_input, "map row needs id + coordinates");
        auto idx = domain.index_of(toks[0]);
        if (!idx) throw Error(Errc::invalid_input, "map id '" + toks[0] + "' not in domain");
        std::vector<double> coords;
        for (std::size_t i = 1; i < toks.size(); ++i) coords.push_back(parse_dist_entry(toks[i]));
        if (width == 0) width = coords.size();
        if (coords.size() != width)
            throw Error(Errc::invalid_input, "map rows have inconsistent width");
        rows[*idx] = std::move(coords);
    }
    if (complex && width % 2 != 0)
        throw Error(Errc::invalid_input, "complex map rows need interleaved re/im pairs");
    f.n_dims = complex ? width / 2 : width;
    f.values.reserve(domain.size() * width);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].empty())
            throw Error(Errc::invalid_input, "map misses point '" + domain.point(i) + "'");
        f.values.insert(f.values.end(), rows[i].begin(), rows[i].end());
    }
    f.validate();
    return f;
}

void write_complex_jsonl(const std::string& path, const FilteredComplex& fc,
                         const FiniteMetricSpace& space, const ExportMeta& meta) {
    auto out = open_out(path);
    out << meta_json(meta).dump() << "\n";
    for (const auto& s : fc.simplices()) {
        out << "{\"verts\":[";
        for (std::size_t i = 0; i < s.verts.size(); ++i) {
            if (i) out << ",";
            out << json(space.point(s.verts[i])).dump();
        }
        out << "],\"sep\":";
        if (std::isinf(s.sep))
            out << "\"inf\"";
        else
            out << format_sig12(s.sep);
        out << "}\n";
    }
}

void write_barcode_json(const std::string& path, const Barcode& bc, const ExportMeta& meta) {
    json j = meta_json(meta);
    json intervals = json::array();
    for (const auto& iv : bc.intervals) {
        json rec{{"dim", iv.dim},
                 {"birth_r", num_or_inf(iv.birth_r)},
                 {"death_r", num_or_inf(iv.death_r)}};
        if (iv.essential) rec["essential"] = true;
        intervals.push_back(rec);
    }
    j["intervals"] = intervals;
    open_out(path) << j.dump(2) << "\n";
}

void write_cocycle_jsonl(const std::string& path, const ConfigRipsComplex& cx,
                         const CoveringCocycle& g, const ExportMeta& meta) {
    auto out = open_out(path);
    out << meta_json(meta).dump() << "\n";
    for (const auto& [u, v] : cx.edges) {
        Perm p = g.transport(u, v);
        out << "{\"edge\":[" << u << "," << v << "],\"perm\":[";
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i) out << ",";
            out << (p[i] + 1); // one-line notation, 1-based
        }
        out << "]}\n";
    }
}

void write_packing_json(const std::string& path, const PackingResult& res,
                        const ExportMeta& meta) {
    json j = meta_json(meta);
    j["k"] = res.k;
    j["r_star"] = num_or_inf(res.r_star);
    j["witness"] = res.witness;
    j["mode"] = res.mode == PackingMode::exact ? "exact" : "greedy";
    if (res.lower_bound_only) j["lower_bound_only"] = true;
    open_out(path) << j.dump(2) << "\n";
}

void write_obstruction_json(const std::string& path, const ObstructionReport& rep,
                            const ExportMeta& meta) {
    json j = meta_json(meta);
    j["k"] = rep.k;
    j["r"] = num_or_inf(rep.r);
    j["delta"] = num_or_inf(rep.delta);
    j["t_max"] = rep.t_max;
    j["n_lb_real"] = rep.n_lb_real;
    if (rep.n_lb_complex) j["n_lb_complex"] = *rep.n_lb_complex;
    j["dual_class_available"] = rep.dual_class_available;
    j["excluded_triangles"] = rep.excluded_triangles;
    j["discrete_model_t"] = rep.discrete_model_t;
    if (rep.empty_grid_warning) j["empty_grid_warning"] = true;
    json scales = json::array();
    for (const auto& s : rep.scales) {
        json rec{{"r_prime", num_or_inf(s.r_prime)}, {"r_abs", num_or_inf(s.r_abs)},
                 {"t_real", s.t_real},               {"vertices", s.vertices},
                 {"edges", s.edges}};
        if (s.t_real_truncated) rec["t_real_truncated"] = true;
        if (s.t_complex) rec["t_complex"] = *s.t_complex;
        scales.push_back(rec);
    }
    j["scales"] = scales;
    open_out(path) << j.dump(2) << "\n";
}

void write_regularity_json(const std::string& path, const RegularityVerdict& linear,
                           const RegularityVerdict* affine, const RealizationCheck* realization,
                           const ExportMeta& meta) {
    auto verdict_json = [](const RegularityVerdict& v) {
        json j{{"passed", v.passed}, {"tol", v.tol}, {"subsets_checked", v.subsets_checked}};
        if (v.witness) {
            j["witness"] = {{"subset", v.witness->subset},
                            {"separation", num_or_inf(v.witness->separation)},
                            {"numerical_rank", v.witness->numerical_rank}};
        }
        return j;
    };
    json j = meta_json(meta);
    j["linear"] = verdict_json(linear);
    if (affine) j["affine"] = verdict_json(*affine);
    if (realization) {
        json r{{"passed", realization->passed}, {"failed_level", realization->failed_level}};
        json certs = json::array();
        for (const auto& c : realization->certificates)
            certs.push_back({{"verts", c.verts},
                             {"affinely_independent", c.affinely_independent},
                             {"min_singular_ratio", c.min_singular_ratio}});
        r["certificates"] = certs;
        j["realization"] = r;
    }
    open_out(path) << j.dump(2) << "\n";
}

} // namespace confpersist
