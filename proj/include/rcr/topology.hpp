#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rcr/params.hpp"

namespace rcr {

enum class EdgeKind : std::uint8_t { Ring, Cube };

struct Edge {
    NodeId u;
    NodeId v;
    EdgeKind kind;

    bool operator==(const Edge&) const = default;
};

/// Cube-edge index selector of the original RCR rule:
/// m - a when a <= m, a mod m otherwise. Callers pass a = b*j + x >= 1,
/// which keeps the result in [0, m-1].
int rcr_edge_index(std::uint64_t a, int m);

/// Set of bit indices (sorted, deduplicated) at which a node with the given
/// ring position has cube edges. RCR uses rcr_edge_index over x in [1, k];
/// RCR-II uses (b*j + x) mod (k+j) over x in [0, k-1].
std::vector<int> cube_bit_indices(const NetworkParams& p, int ring_pos);

/// Immutable undirected simple graph built from a parameter triple.
/// Safe for concurrent reads once built.
class Topology {
public:
    static constexpr std::uint64_t kDefaultNodeCap = std::uint64_t(1) << 22;

    /// Deterministic construction from the edge rules. Throws
    /// std::length_error when the node count exceeds node_cap.
    static Topology build(const NetworkParams& p, std::uint64_t node_cap = kDefaultNodeCap);

    const NetworkParams& params() const { return params_; }
    NodeId node_count() const { return NodeId(adj_.size()); }

    std::span<const NodeId> neighbors(NodeId u) const { return adj_[u]; }
    std::span<const EdgeKind> neighbor_kinds(NodeId u) const { return kind_[u]; }

    bool has_edge(NodeId u, NodeId v) const;
    std::optional<EdgeKind> edge_kind(NodeId u, NodeId v) const;

    std::uint64_t edge_count() const { return ring_edges_ + cube_edges_; }
    std::uint64_t ring_edge_count() const { return ring_edges_; }
    std::uint64_t cube_edge_count() const { return cube_edges_; }

    /// All edges with u < v, sorted by (u, v).
    std::vector<Edge> edges() const;

    /// One edge per line: "u v kind", kind in {ring, cube}, sorted by (u, v).
    std::string to_edge_list() const;

    /// Undirected DOT graph; node labels are coordinate text, edges carry a
    /// "kind" attribute and cube edges are drawn dashed.
    std::string to_dot() const;

private:
    Topology(NetworkParams p) : params_(p) {}

    NetworkParams params_;
    std::vector<std::vector<NodeId>> adj_;
    std::vector<std::vector<EdgeKind>> kind_;
    std::uint64_t ring_edges_ = 0;
    std::uint64_t cube_edges_ = 0;
};

}  // namespace rcr
