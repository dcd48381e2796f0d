#pragma once

#include "confpersist/covering.hpp"
#include "confpersist/metric.hpp"
#include "confpersist/obstruction.hpp"
#include "confpersist/packing.hpp"
#include "confpersist/persistence.hpp"
#include "confpersist/regular.hpp"

#include <string>
#include <vector>

namespace confpersist {

// Distance-matrix CSV: first row point ids, then an n x n block of
// nonnegative decimals; the literal `inf` marks unreachable pairs.
FiniteMetricSpace read_distance_csv(const std::string& path);

// Weighted-graph JSON: {"vertices":[...], "edges":[{"u":..,"v":..,"w":..}]}.
WeightedGraph read_graph_json(const std::string& path);

// Circle sampler parameters: {"n":.., "L":..}.
FiniteMetricSpace read_circle_json(const std::string& path);

// Sampled-map CSV: row = point id followed by N coordinates (2N interleaved
// re/im when complex=true).
SampledMap read_map_csv(const std::string& path, const FiniteMetricSpace& domain, bool complex);

struct ExportMeta {
    std::string config_hash;
    std::string tool_version;
    int schema_version = kSchemaVersion;
};

// JSON lines, one record per simplex: {"verts":[...], "sep": n} with 12
// significant digits; the first line is a meta record.
void write_complex_jsonl(const std::string& path, const FilteredComplex& fc,
                         const FiniteMetricSpace& space, const ExportMeta& meta);

void write_barcode_json(const std::string& path, const Barcode& bc, const ExportMeta& meta);

// JSON lines {"edge":[u,v], "perm":[...]} (one-line notation, 1-based).
void write_cocycle_jsonl(const std::string& path, const ConfigRipsComplex& cx,
                         const CoveringCocycle& g, const ExportMeta& meta);

void write_packing_json(const std::string& path, const PackingResult& res,
                        const ExportMeta& meta);

void write_obstruction_json(const std::string& path, const ObstructionReport& rep,
                            const ExportMeta& meta);

void write_regularity_json(const std::string& path, const RegularityVerdict& linear,
                           const RegularityVerdict* affine, const RealizationCheck* realization,
                           const ExportMeta& meta);

} // namespace confpersist
