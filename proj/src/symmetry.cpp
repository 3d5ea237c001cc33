#include "rcr/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace rcr {

bool NodeMapping::is_bijection() const {
    std::vector<bool> seen(image.size(), false);
    for (NodeId v : image) {
        if (v >= image.size() || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

NodeMapping identity_mapping(NodeId node_count) {
    NodeMapping m;
    m.image.resize(node_count);
    for (NodeId u = 0; u < node_count; ++u) m.image[u] = u;
    return m;
}

NodeMapping compose(const NodeMapping& a, const NodeMapping& b) {
    if (a.image.size() != b.image.size())
        throw std::invalid_argument("mapping sizes differ");
    NodeMapping out;
    out.image.resize(a.image.size());
    for (NodeId u = 0; u < a.image.size(); ++u) out.image[u] = b.image[a.image[u]];
    return out;
}

bool recentering_applicable(const NetworkParams& p) {
    return p.variant == Variant::RcrII &&
           (std::uint64_t(p.r) * p.j) % std::uint64_t(p.bit_width()) == 0;
}

NodeMapping recentering_map(const NetworkParams& p, const NodeCoord& origin) {
    if (p.variant != Variant::RcrII)
        throw std::invalid_argument("recentering map is defined for rcr2 only");
    const int m = p.bit_width();
    const std::uint32_t alpha = origin.cube_value;
    const int beta = origin.ring_pos;
    // Bit t of the input lands at index (t - beta*k) mod m.
    std::vector<int> dest(static_cast<std::size_t>(m), 0);
    for (int t = 0; t < m; ++t) {
        long long idx = (t - (long long)beta * p.k) % m;
        dest[std::size_t(t)] = int((idx + m) % m);
    }
    NodeMapping map;
    map.image.resize(p.node_count());
    for (NodeId u = 0; u < map.image.size(); ++u) {
        const NodeCoord c = id_to_coord(u, p);
        NodeCoord out;
        out.ring_pos = (c.ring_pos + beta) % p.r;
        for (int t = 0; t < m; ++t) {
            const int d = dest[std::size_t(t)];
            const std::uint32_t bit = (c.cube_value >> t & 1) ^ (alpha >> d & 1);
            out.cube_value |= bit << d;
        }
        map.image[u] = coord_to_id(out, p);
    }
    return map;
}

bool is_automorphism(const Topology& g, const NodeMapping& m, bool preserve_kinds) {
    if (m.image.size() != g.node_count())
        throw std::invalid_argument("mapping size does not match graph");
    if (!m.is_bijection()) return false;
    for (NodeId u = 0; u < g.node_count(); ++u) {
        const auto nbrs = g.neighbors(u);
        const auto kinds = g.neighbor_kinds(u);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            if (u > nbrs[i]) continue;
            const auto mapped = g.edge_kind(m.image[u], m.image[nbrs[i]]);
            if (!mapped) return false;
            if (preserve_kinds && *mapped != kinds[i]) return false;
        }
    }
    return true;
}

namespace {

// Per-node invariant used to reject candidate images early.
struct NodeInvariant {
    int ring_deg;
    int cube_deg;
    std::vector<std::pair<int, int>> neighbor_degs;  // sorted

    bool operator==(const NodeInvariant&) const = default;
};

std::vector<NodeInvariant> node_invariants(const Topology& g, bool preserve_kinds) {
    const NodeId n = g.node_count();
    std::vector<NodeInvariant> inv(n);
    for (NodeId u = 0; u < n; ++u) {
        const auto kinds = g.neighbor_kinds(u);
        int rings = 0;
        for (EdgeKind k : kinds)
            if (k == EdgeKind::Ring) ++rings;
        if (!preserve_kinds) rings = 0;
        inv[u].ring_deg = rings;
        inv[u].cube_deg = int(kinds.size()) - rings;
    }
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v : g.neighbors(u))
            inv[u].neighbor_degs.emplace_back(inv[v].ring_deg, inv[v].cube_deg);
        std::sort(inv[u].neighbor_degs.begin(), inv[u].neighbor_degs.end());
    }
    return inv;
}

std::vector<NodeId> bfs_order(const Topology& g, NodeId start) {
    std::vector<NodeId> order;
    order.reserve(g.node_count());
    std::vector<bool> seen(g.node_count(), false);
    std::deque<NodeId> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
        const NodeId u = queue.front();
        queue.pop_front();
        order.push_back(u);
        for (NodeId v : g.neighbors(u)) {
            if (seen[v]) continue;
            seen[v] = true;
            queue.push_back(v);
        }
    }
    // Disconnected remainder in id order.
    for (NodeId u = 0; u < g.node_count(); ++u)
        if (!seen[u]) order.push_back(u);
    return order;
}

constexpr NodeId kUnset = NodeId(-1);

struct AutomorphismSearch {
    const Topology& g;
    const std::vector<NodeInvariant>& inv;
    const std::vector<NodeId>& order;
    bool preserve_kinds;
    std::vector<NodeId> img;
    std::vector<NodeId> pre;

    bool consistent(NodeId u, NodeId w) const {
        if (!(inv[u] == inv[w])) return false;
        const auto u_nbrs = g.neighbors(u);
        const auto u_kinds = g.neighbor_kinds(u);
        for (std::size_t i = 0; i < u_nbrs.size(); ++i) {
            if (img[u_nbrs[i]] == kUnset) continue;
            const auto kind = g.edge_kind(w, img[u_nbrs[i]]);
            if (!kind) return false;
            if (preserve_kinds && *kind != u_kinds[i]) return false;
        }
        const auto w_nbrs = g.neighbors(w);
        const auto w_kinds = g.neighbor_kinds(w);
        for (std::size_t i = 0; i < w_nbrs.size(); ++i) {
            if (pre[w_nbrs[i]] == kUnset) continue;
            const auto kind = g.edge_kind(u, pre[w_nbrs[i]]);
            if (!kind) return false;
            if (preserve_kinds && *kind != w_kinds[i]) return false;
        }
        return true;
    }

    bool extend(std::size_t depth) {
        if (depth == order.size()) return true;
        const NodeId u = order[depth];
        // Anchor candidates to the image of an already-mapped neighbor when
        // one exists; otherwise fall back to all unmapped nodes.
        NodeId anchor = kUnset;
        for (NodeId n : g.neighbors(u)) {
            if (img[n] != kUnset) {
                anchor = img[n];
                break;
            }
        }
        std::vector<NodeId> candidates;
        if (anchor != kUnset) {
            candidates.assign(g.neighbors(anchor).begin(), g.neighbors(anchor).end());
        } else {
            for (NodeId w = 0; w < g.node_count(); ++w) candidates.push_back(w);
        }
        for (NodeId w : candidates) {
            if (pre[w] != kUnset) continue;
            if (!consistent(u, w)) continue;
            img[u] = w;
            pre[w] = u;
            if (extend(depth + 1)) return true;
            img[u] = kUnset;
            pre[w] = kUnset;
        }
        return false;
    }
};

}  // namespace

std::optional<NodeMapping> find_automorphism(const Topology& g, NodeId from, NodeId to,
                                             bool preserve_kinds) {
    if (from >= g.node_count() || to >= g.node_count())
        throw std::invalid_argument("node id out of range");
    const auto inv = node_invariants(g, preserve_kinds);
    const auto order = bfs_order(g, from);
    AutomorphismSearch search{g, inv, order, preserve_kinds,
                              std::vector<NodeId>(g.node_count(), kUnset),
                              std::vector<NodeId>(g.node_count(), kUnset)};
    if (!search.consistent(from, to)) return std::nullopt;
    search.img[from] = to;
    search.pre[to] = from;
    if (!search.extend(1)) return std::nullopt;
    NodeMapping m;
    m.image = std::move(search.img);
    return m;
}

SymmetryVerdict is_vertex_transitive(const Topology& g, std::uint32_t node_cap,
                                     bool preserve_kinds) {
    SymmetryVerdict verdict;
    verdict.recentering_applicable = recentering_applicable(g.params());
    const NodeId n = g.node_count();

    // Fast certificate: the recentering construction covers every target.
    if (verdict.recentering_applicable) {
        std::vector<NodeMapping> certs;
        certs.reserve(n);
        bool all_pass = true;
        for (NodeId v = 0; v < n && all_pass; ++v) {
            certs.push_back(recentering_map(g.params(), id_to_coord(v, g.params())));
            all_pass = is_automorphism(g, certs.back(), preserve_kinds);
        }
        if (all_pass) {
            verdict.vertex_transitive = SymmetryVerdict::Transitive::Yes;
            verdict.certificates = std::move(certs);
            return verdict;
        }
    }

    if (n > node_cap) {
        verdict.vertex_transitive = SymmetryVerdict::Transitive::Undetermined;
        return verdict;
    }

    // Non-uniform degree rules transitivity out immediately.
    const auto inv = node_invariants(g, preserve_kinds);
    for (NodeId v = 1; v < n; ++v) {
        if (!(inv[v] == inv[0])) {
            verdict.vertex_transitive = SymmetryVerdict::Transitive::No;
            verdict.witness = {NodeId(0), v};
            return verdict;
        }
    }

    std::vector<NodeMapping> certs;
    certs.push_back(identity_mapping(n));
    for (NodeId v = 1; v < n; ++v) {
        auto aut = find_automorphism(g, 0, v, preserve_kinds);
        if (!aut) {
            verdict.vertex_transitive = SymmetryVerdict::Transitive::No;
            verdict.witness = {NodeId(0), v};
            return verdict;
        }
        certs.push_back(std::move(*aut));
    }
    verdict.vertex_transitive = SymmetryVerdict::Transitive::Yes;
    verdict.certificates = std::move(certs);
    return verdict;
}

}  // namespace rcr
