#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "rcr/symmetry.hpp"
#include "rcr/topology.hpp"

namespace rcr {

/// Per bit index t, the number of ring positions b whose edge rule can
/// output t. min == 0 exactly when some bit is never flipped, i.e. the
/// network is unconnected.
struct NumTable {
    std::vector<int> count;  // indexed by t in [0, k+j-1]

    int min() const;
};

NumTable num_table(const NetworkParams& p);

struct DegreePrediction {
    int lo;
    int hi;
    // Set for the RCR case r>2, j>=1, k>j+1: degrees must take multiple values.
    bool forced_nonuniform;

    bool uniform() const { return lo == hi; }
};

DegreePrediction predicted_degree(const NetworkParams& p);

struct DegreeReport {
    std::map<int, std::uint64_t> histogram;  // degree -> node count
    DegreePrediction predicted;

    bool conforms() const;
};

DegreeReport degree_distribution(const Topology& g);

/// Closed-form connectivity: RCR is connected iff (r-1)k >= j for r <= 2 and
/// (r-1)k >= j+1 for r > 2; RCR-II iff (r-1)k >= j.
bool predicted_connected(const NetworkParams& p);

struct Coverage {
    bool covered;
    std::vector<int> missing;  // bit indices never output by the edge rule
};

/// Coverage of [0, k+j-1] by the edge rule over all ring positions;
/// equivalent to connectivity.
Coverage coverage_check(const NetworkParams& p);

/// Component sizes, sorted descending. Sizes sum to the node count.
std::vector<std::uint32_t> connected_components(const Topology& g);

/// min_t Num(t) * N/(2r); 0 when the graph is unconnected.
std::uint64_t bisection_upper_bound(const NetworkParams& p);

/// Exhaustive minimum crossing-edge count over all balanced bipartitions,
/// node 0 fixed on one side, pruning on partial counts. Throws
/// std::length_error above node_cap.
std::uint32_t exact_bisection(const Topology& g, std::uint32_t node_cap = 24);

struct CutReport {
    bool bisects;
    std::uint32_t side_a;
    std::uint32_t side_b;
};

/// Removes the given edges and checks whether the remaining components can be
/// grouped into two sides of exactly N/2 nodes each (exact subset-sum over
/// component sizes). Throws std::invalid_argument for an edge not in g.
CutReport verify_cut(const Topology& g, const std::vector<std::pair<NodeId, NodeId>>& cut);

/// BFS hop count; nullopt when unreachable.
std::optional<int> distance(const Topology& g, NodeId from, NodeId to);

/// Node sequence of one shortest path (from .. to inclusive); nullopt when
/// unreachable.
std::optional<std::vector<NodeId>> shortest_path(const Topology& g, NodeId from, NodeId to);

/// Max BFS eccentricity over all sources; nullopt (infinite) when unconnected.
std::optional<int> diameter(const Topology& g);

/// Closed-form diameter bound: nullopt (infinite) when min Num == 0, else
/// k+j+r-1+floor(r/2) for r <= 3 and k+j+r-2+floor(r/2) for r > 3.
std::optional<std::uint64_t> diameter_bound(const NetworkParams& p);

struct AnalysisOptions {
    bool exact_bisection = false;
    std::uint32_t bisect_cap = 24;
    bool symmetry = false;
    std::uint32_t symmetry_cap = 64;
};

struct AnalysisReport {
    NetworkParams params;
    std::uint64_t nodes;
    std::uint64_t ring_edges;
    std::uint64_t cube_edges;
    DegreeReport degree;
    std::vector<std::uint32_t> components;
    bool predicted_conn;
    bool observed_conn;
    NumTable num;
    std::uint64_t bisection_bound;
    bool exact_bisection_requested = false;
    std::optional<std::uint32_t> exact_bisection_value;  // empty: skipped (size)
    std::optional<int> diameter_observed;                // empty: infinite
    std::optional<std::uint64_t> diameter_bnd;           // empty: infinite
    bool symmetry_checked = false;
    SymmetryVerdict symmetry;
};

/// Runs every analysis and cross-checks predictions against observations.
/// Throws std::logic_error if predicted and observed connectivity disagree.
AnalysisReport analyze(const Topology& g, const AnalysisOptions& opt = {});

/// Stable JSON document with fixed key order.
nlohmann::ordered_json to_json(const AnalysisReport& rep);

}  // namespace rcr
