#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <tuple>

#include "rcr/topology.hpp"

using namespace rcr;

namespace {

// Brute-force edge predicate straight from the connection rules, independent
// of Topology::build. Used as the construction oracle.
std::set<std::tuple<NodeId, NodeId, EdgeKind>> naive_edges(const NetworkParams& p) {
    std::set<std::tuple<NodeId, NodeId, EdgeKind>> edges;
    const NodeId n = NodeId(p.node_count());
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) {
            const NodeCoord a = id_to_coord(u, p);
            const NodeCoord b = id_to_coord(v, p);
            if (a.cube_value == b.cube_value && p.r > 1) {
                const int diff = (b.ring_pos - a.ring_pos + p.r) % p.r;
                if (diff == 1 || diff == p.r - 1) edges.insert({u, v, EdgeKind::Ring});
            } else if (a.ring_pos == b.ring_pos) {
                const std::uint32_t x = a.cube_value ^ b.cube_value;
                if (x == 0 || (x & (x - 1)) != 0) continue;  // not a one-bit difference
                int t = 0;
                while (!(x >> t & 1)) ++t;
                const auto active = cube_bit_indices(p, a.ring_pos);
                if (std::find(active.begin(), active.end(), t) != active.end())
                    edges.insert({u, v, EdgeKind::Cube});
            }
        }
    }
    return edges;
}

}  // namespace

TEST_CASE("edge index function") {
    CHECK(rcr_edge_index(5, 4) == 1);
    CHECK(rcr_edge_index(4, 4) == 0);
    CHECK(rcr_edge_index(1, 3) == 2);
    CHECK(rcr_edge_index(3, 3) == 0);
    CHECK(rcr_edge_index(7, 3) == 1);
}

TEST_CASE("cube bit indices") {
    CHECK(cube_bit_indices(NetworkParams(Variant::Rcr, 3, 3, 1), 2) == std::vector<int>{0, 1});
    CHECK(cube_bit_indices(NetworkParams(Variant::Rcr, 2, 5, 7), 0) == std::vector<int>{7, 8});
    CHECK(cube_bit_indices(NetworkParams(Variant::RcrII, 3, 3, 1), 2) ==
          std::vector<int>{0, 2, 3});
    CHECK_THROWS_AS(cube_bit_indices(NetworkParams(Variant::Rcr, 2, 3, 0), 3), std::out_of_range);

    // Size <= k always; exactly k for the class-II rule.
    for (Variant variant : {Variant::Rcr, Variant::RcrII}) {
        for (int k = 1; k <= 5; ++k)
            for (int r = 1; r <= 6; ++r)
                for (int j = 0; j <= 6; ++j) {
                    const NetworkParams p(variant, k, r, j);
                    for (int b = 0; b < r; ++b) {
                        const auto idx = cube_bit_indices(p, b);
                        CHECK(int(idx.size()) <= k);
                        if (variant == Variant::RcrII) CHECK(int(idx.size()) == k);
                        for (int t : idx) {
                            CHECK(t >= 0);
                            CHECK(t < p.bit_width());
                        }
                    }
                }
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(NetworkParams(Variant::Rcr, 0, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(NetworkParams(Variant::Rcr, 2, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(NetworkParams(Variant::Rcr, 2, 3, -1), std::invalid_argument);
    CHECK(NetworkParams(Variant::Rcr, 3, 3, 1).node_count() == 48);
}

TEST_CASE("coordinate text round trip") {
    const NetworkParams p(Variant::Rcr, 2, 5, 7);
    const NodeCoord c = parse_coord("110001100;3", p);
    CHECK(c.cube_value == 0b110001100);
    CHECK(c.ring_pos == 3);
    CHECK(format_coord(c, p) == "110001100;3");

    const NetworkParams q(Variant::Rcr, 2, 3, 0);
    CHECK(parse_coord("00;0", q) == NodeCoord{0, 0});

    const NetworkParams w(Variant::Rcr, 1, 10, 1);
    CHECK(parse_coord("00;5", w) == NodeCoord{0, 5});

    CHECK_THROWS_AS(parse_coord("110;3", p), std::invalid_argument);   // wrong width
    CHECK_THROWS_AS(parse_coord("1102;0", NetworkParams(Variant::Rcr, 2, 2, 2)),
                    std::invalid_argument);                            // non-binary digit
    CHECK_THROWS_AS(parse_coord("00;5", q), std::invalid_argument);    // b >= r
    CHECK_THROWS_AS(parse_coord("0000", q), std::invalid_argument);    // missing separator

    // Round trip over every node of a small graph.
    for (NodeId u = 0; u < p.node_count(); ++u) {
        const NodeCoord coord = id_to_coord(u, p);
        CHECK(parse_coord(format_coord(coord, p), p) == coord);
        CHECK(coord_to_id(coord, p) == u);
    }
}

TEST_CASE("build matches the brute-force edge predicate") {
    for (Variant variant : {Variant::Rcr, Variant::RcrII}) {
        for (int k = 1; k <= 3; ++k)
            for (int r = 1; r <= 4; ++r)
                for (int j = 0; j <= 3; ++j) {
                    const NetworkParams p(variant, k, r, j);
                    if (p.node_count() > 128) continue;
                    const auto g = Topology::build(p);
                    std::set<std::tuple<NodeId, NodeId, EdgeKind>> built;
                    for (const Edge& e : g.edges()) built.insert({e.u, e.v, e.kind});
                    CHECK(built == naive_edges(p));
                }
    }
}

TEST_CASE("adjacency symmetry, simplicity, ring-neighbor counts") {
    for (Variant variant : {Variant::Rcr, Variant::RcrII}) {
        for (int k = 1; k <= 5; ++k)
            for (int r = 1; r <= 6; ++r)
                for (int j = 0; j <= 6; ++j) {
                    const NetworkParams p(variant, k, r, j);
                    if (p.node_count() > 4096) continue;
                    const auto g = Topology::build(p);
                    REQUIRE(g.node_count() == p.node_count());
                    const int expected_ring = std::min(r - 1, 2);
                    for (NodeId u = 0; u < g.node_count(); ++u) {
                        const auto nbrs = g.neighbors(u);
                        const auto kinds = g.neighbor_kinds(u);
                        int ring_neighbors = 0;
                        for (std::size_t i = 0; i < nbrs.size(); ++i) {
                            REQUIRE(nbrs[i] != u);                           // no self-loop
                            if (i) REQUIRE(nbrs[i] > nbrs[i - 1]);           // no duplicate
                            REQUIRE(g.edge_kind(nbrs[i], u) == kinds[i]);    // symmetric
                            if (kinds[i] == EdgeKind::Ring) ++ring_neighbors;
                        }
                        REQUIRE(ring_neighbors == expected_ring);
                    }
                }
    }
}

TEST_CASE("RCR(k,1,0) is the k-hypercube") {
    for (int k = 1; k <= 5; ++k) {
        const auto g = Topology::build(NetworkParams(Variant::Rcr, k, 1, 0));
        CHECK(g.node_count() == (1u << k));
        CHECK(g.edge_count() == std::uint64_t(k) << (k - 1));
        CHECK(g.ring_edge_count() == 0);
        for (NodeId u = 0; u < g.node_count(); ++u) {
            CHECK(g.neighbors(u).size() == std::size_t(k));
            for (NodeId v : g.neighbors(u)) {
                const std::uint32_t x = u ^ v;  // r=1: id == cube value
                CHECK((x & (x - 1)) == 0);
            }
        }
    }
}

TEST_CASE("r=2 rings carry a single edge") {
    const auto g = Topology::build(NetworkParams(Variant::Rcr, 1, 2, 1));
    CHECK(g.node_count() == 8);
    CHECK(g.ring_edge_count() == 4);
    CHECK(g.cube_edge_count() == 4);
}

TEST_CASE("example 3 network misses bit 2 entirely") {
    const auto g = Topology::build(NetworkParams(Variant::Rcr, 2, 2, 3));
    CHECK(g.node_count() == 64);
    for (const Edge& e : g.edges()) {
        if (e.kind != EdgeKind::Cube) continue;
        const std::uint32_t flipped = (e.u / 2) ^ (e.v / 2);
        CHECK(flipped != 0b00100);
    }
}

TEST_CASE("size cap") {
    CHECK_THROWS_AS(Topology::build(NetworkParams(Variant::Rcr, 5, 6, 6), 4096),
                    std::length_error);
    CHECK_NOTHROW(Topology::build(NetworkParams(Variant::Rcr, 1, 2, 1), 8));
}

TEST_CASE("edge list export") {
    const auto g = Topology::build(NetworkParams(Variant::Rcr, 1, 1, 0));
    CHECK(g.to_edge_list() == "0 1 cube\n");

    const auto h = Topology::build(NetworkParams(Variant::Rcr, 1, 2, 1));
    const auto edges = h.edges();
    CHECK(edges.size() == 8);
    CHECK(std::is_sorted(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return std::tie(a.u, a.v) < std::tie(b.u, b.v);
    }));
    for (const Edge& e : edges) CHECK(e.u < e.v);
}

TEST_CASE("dot export carries labels and kinds") {
    const auto g = Topology::build(NetworkParams(Variant::Rcr, 1, 1, 0));
    const auto dot = g.to_dot();
    CHECK(dot.find("label=\"0;0\"") != std::string::npos);
    CHECK(dot.find("kind=\"cube\"") != std::string::npos);
    // Deterministic output.
    CHECK(dot == Topology::build(NetworkParams(Variant::Rcr, 1, 1, 0)).to_dot());
}
