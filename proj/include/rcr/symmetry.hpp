#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rcr/topology.hpp"

namespace rcr {

/// A total permutation of node ids.
struct NodeMapping {
    std::vector<NodeId> image;  // image[u] is where u is sent

    bool is_bijection() const;
};

NodeMapping identity_mapping(NodeId node_count);

/// Composition: (a then b), i.e. result[u] = b.image[a.image[u]].
NodeMapping compose(const NodeMapping& a, const NodeMapping& b);

/// True when the RCR-II recentering construction applies: mod(r*j, k+j) == 0.
bool recentering_applicable(const NetworkParams& p);

/// RCR-II coordinate relabeling that moves the all-zero origin onto the given
/// node: b' = (b + beta) mod r and a'_{(t - beta*k) mod (k+j)} = a_t XOR
/// alpha_{(t - beta*k) mod (k+j)}, with (alpha, beta) = origin. Bijective by
/// construction; an automorphism whenever mod(r*j, k+j) == 0.
/// Throws std::invalid_argument for the RCR variant.
NodeMapping recentering_map(const NetworkParams& p, const NodeCoord& origin);

/// True iff every edge maps to an edge and, when preserve_kinds, the
/// ring/cube label is kept. A bijection mapping edges into edges is onto the
/// edge set, so one direction suffices.
bool is_automorphism(const Topology& g, const NodeMapping& m, bool preserve_kinds = true);

/// Backtracking search for an automorphism sending `from` to `to`;
/// candidates are pruned by per-kind degree and mapped-neighborhood
/// consistency. Deterministic: nodes processed in BFS order, candidates in
/// id order.
std::optional<NodeMapping> find_automorphism(const Topology& g, NodeId from, NodeId to,
                                             bool preserve_kinds = true);

struct SymmetryVerdict {
    enum class Transitive { Yes, No, Undetermined };

    Transitive vertex_transitive = Transitive::Undetermined;
    // For a No verdict: a node pair with no automorphism between them.
    std::optional<std::pair<NodeId, NodeId>> witness;
    bool recentering_applicable = false;
    // For a Yes verdict: per node v, an automorphism carrying node 0 to v.
    std::vector<NodeMapping> certificates;
};

/// Exhaustive vertex-transitivity verdict for graphs up to node_cap.
/// For RCR-II with mod(r*j, k+j) == 0 the recentering maps are tried first
/// as certificates before falling back to search.
SymmetryVerdict is_vertex_transitive(const Topology& g, std::uint32_t node_cap = 64,
                                     bool preserve_kinds = true);

}  // namespace rcr
