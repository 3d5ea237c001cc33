#include "rcr/topology.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rcr {

int rcr_edge_index(std::uint64_t a, int m) {
    const auto um = std::uint64_t(m);
    return a <= um ? int(um - a) : int(a % um);
}

std::vector<int> cube_bit_indices(const NetworkParams& p, int ring_pos) {
    if (ring_pos < 0 || ring_pos >= p.r)
        throw std::out_of_range("ring position out of range");
    const int m = p.bit_width();
    std::vector<int> out;
    out.reserve(p.k);
    if (p.variant == Variant::Rcr) {
        for (int x = 1; x <= p.k; ++x)
            out.push_back(rcr_edge_index(std::uint64_t(ring_pos) * p.j + x, m));
    } else {
        for (int x = 0; x < p.k; ++x)
            out.push_back(int((std::uint64_t(ring_pos) * p.j + x) % m));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Topology Topology::build(const NetworkParams& p, std::uint64_t node_cap) {
    const std::uint64_t n = p.node_count();
    if (n > node_cap)
        throw std::length_error("network has " + std::to_string(n) +
                                " nodes, exceeding the cap of " + std::to_string(node_cap));

    Topology g(p);
    g.adj_.resize(n);
    g.kind_.resize(n);

    auto add_edge = [&](NodeId u, NodeId v, EdgeKind kind) {
        g.adj_[u].push_back(v);
        g.kind_[u].push_back(kind);
        g.adj_[v].push_back(u);
        g.kind_[v].push_back(kind);
        (kind == EdgeKind::Ring ? g.ring_edges_ : g.cube_edges_) += 1;
    };

    const std::uint64_t rings = std::uint64_t(1) << p.bit_width();

    // Ring edges: none for r=1, one edge for r=2, a full cycle for r>2.
    if (p.r >= 2) {
        for (std::uint64_t c = 0; c < rings; ++c) {
            const NodeId base = NodeId(c * p.r);
            const int last = p.r == 2 ? 1 : p.r;
            for (int b = 0; b < last; ++b)
                add_edge(base + b, base + (b + 1) % p.r, EdgeKind::Ring);
        }
    }

    // Cube edges: per ring position b, one edge across each active bit index.
    for (int b = 0; b < p.r; ++b) {
        for (int t : cube_bit_indices(p, b)) {
            const std::uint32_t mask = std::uint32_t(1) << t;
            for (std::uint64_t c = 0; c < rings; ++c) {
                if (c & mask) continue;
                add_edge(NodeId(c * p.r + b), NodeId((c | mask) * p.r + b), EdgeKind::Cube);
            }
        }
    }

    // Sort each adjacency list together with its parallel kind labels.
    for (std::uint64_t u = 0; u < n; ++u) {
        auto& nbrs = g.adj_[u];
        auto& kinds = g.kind_[u];
        std::vector<std::uint32_t> order(nbrs.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](std::uint32_t a, std::uint32_t b) { return nbrs[a] < nbrs[b]; });
        std::vector<NodeId> sorted_nbrs(nbrs.size());
        std::vector<EdgeKind> sorted_kinds(nbrs.size());
        for (std::size_t i = 0; i < order.size(); ++i) {
            sorted_nbrs[i] = nbrs[order[i]];
            sorted_kinds[i] = kinds[order[i]];
        }
        nbrs = std::move(sorted_nbrs);
        kinds = std::move(sorted_kinds);
    }
    return g;
}

bool Topology::has_edge(NodeId u, NodeId v) const {
    return edge_kind(u, v).has_value();
}

std::optional<EdgeKind> Topology::edge_kind(NodeId u, NodeId v) const {
    const auto& nbrs = adj_[u];
    const auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v);
    if (it == nbrs.end() || *it != v) return std::nullopt;
    return kind_[u][std::size_t(it - nbrs.begin())];
}

std::vector<Edge> Topology::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (NodeId u = 0; u < node_count(); ++u)
        for (std::size_t i = 0; i < adj_[u].size(); ++i)
            if (u < adj_[u][i]) out.push_back({u, adj_[u][i], kind_[u][i]});
    std::sort(out.begin(), out.end(),
              [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
    return out;
}

std::string Topology::to_edge_list() const {
    std::ostringstream os;
    for (const Edge& e : edges())
        os << e.u << ' ' << e.v << ' ' << (e.kind == EdgeKind::Ring ? "ring" : "cube") << '\n';
    return os.str();
}

std::string Topology::to_dot() const {
    std::ostringstream os;
    os << "graph " << variant_name(params_.variant) << " {\n";
    for (NodeId u = 0; u < node_count(); ++u)
        os << "  " << u << " [label=\"" << format_coord(id_to_coord(u, params_), params_)
           << "\"];\n";
    for (const Edge& e : edges()) {
        os << "  " << e.u << " -- " << e.v;
        if (e.kind == EdgeKind::Ring)
            os << " [kind=\"ring\"];\n";
        else
            os << " [kind=\"cube\", style=dashed];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace rcr
