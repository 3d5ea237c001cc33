#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rcr/symmetry.hpp"

using namespace rcr;

namespace {

Topology build(Variant v, int k, int r, int j) {
    return Topology::build(NetworkParams(v, k, r, j));
}

}  // namespace

TEST_CASE("identity is an automorphism") {
    const auto g = build(Variant::Rcr, 2, 3, 2);
    CHECK(is_automorphism(g, identity_mapping(g.node_count())));
}

TEST_CASE("recentering map basics") {
    const NetworkParams p(Variant::RcrII, 2, 3, 1);

    // Origin at the all-zero node reduces to the identity.
    const auto ident = recentering_map(p, NodeCoord{0, 0});
    CHECK(ident.image == identity_mapping(NodeId(p.node_count())).image);

    // Origin <000;1>: ring coordinates shift by +1 mod 3, cube bits rotate.
    const auto shift = recentering_map(p, parse_coord("000;1", p));
    CHECK(shift.image[coord_to_id(parse_coord("000;0", p), p)] ==
          coord_to_id(parse_coord("000;1", p), p));
    for (NodeId u = 0; u < p.node_count(); ++u) {
        const auto before = id_to_coord(u, p);
        const auto after = id_to_coord(shift.image[u], p);
        CHECK(after.ring_pos == (before.ring_pos + 1) % 3);
    }

    // Origin <011;2>: hand-applied image of <101;1> is <101;0>.
    const auto m = recentering_map(p, parse_coord("011;2", p));
    CHECK(m.image[coord_to_id(parse_coord("101;1", p), p)] ==
          coord_to_id(parse_coord("101;0", p), p));
    CHECK(m.is_bijection());
    CHECK(is_automorphism(Topology::build(p), m));

    CHECK_THROWS_AS(recentering_map(NetworkParams(Variant::Rcr, 2, 3, 1), NodeCoord{0, 0}),
                    std::invalid_argument);
}

TEST_CASE("plain ring shift is not an automorphism of RCR(2,3,2)") {
    const NetworkParams p(Variant::Rcr, 2, 3, 2);
    const auto g = Topology::build(p);
    NodeMapping shift;
    shift.image.resize(g.node_count());
    for (NodeId u = 0; u < g.node_count(); ++u) {
        NodeCoord c = id_to_coord(u, p);
        c.ring_pos = (c.ring_pos + 1) % p.r;
        shift.image[u] = coord_to_id(c, p);
    }
    CHECK(shift.is_bijection());
    CHECK_FALSE(is_automorphism(g, shift));
}

TEST_CASE("recentering maps are automorphisms whenever applicable") {
    for (int k = 1; k <= 4; ++k)
        for (int r = 1; r <= 5; ++r)
            for (int j = 0; j <= 5; ++j) {
                const NetworkParams p(Variant::RcrII, k, r, j);
                if (p.node_count() > 512 || !recentering_applicable(p)) continue;
                const auto g = Topology::build(p);
                for (NodeId v = 0; v < g.node_count(); ++v) {
                    const auto m = recentering_map(p, id_to_coord(v, p));
                    REQUIRE(m.image[0] == v);
                    REQUIRE(is_automorphism(g, m));
                }
            }
}

TEST_CASE("composition of recentering maps stays an automorphism") {
    const NetworkParams p(Variant::RcrII, 2, 3, 1);
    const auto g = Topology::build(p);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        const auto first = recentering_map(p, id_to_coord(v, p));
        const auto second = recentering_map(p, id_to_coord(first.image[5], p));
        const auto composed = compose(first, second);
        CHECK(composed.is_bijection());
        CHECK(is_automorphism(g, composed));
    }
}

TEST_CASE("hypercubes are vertex-transitive") {
    for (int k = 1; k <= 4; ++k) {
        const auto g = build(Variant::Rcr, k, 1, 0);
        const auto verdict = is_vertex_transitive(g);
        CHECK(verdict.vertex_transitive == SymmetryVerdict::Transitive::Yes);
        CHECK(verdict.certificates.size() == g.node_count());
        for (NodeId v = 0; v < g.node_count(); ++v) {
            CHECK(verdict.certificates[v].image[0] == v);
            CHECK(is_automorphism(g, verdict.certificates[v]));
        }
    }
}

TEST_CASE("non-uniform degree yields an immediate witness") {
    const auto verdict = is_vertex_transitive(build(Variant::Rcr, 3, 3, 1));
    CHECK(verdict.vertex_transitive == SymmetryVerdict::Transitive::No);
    REQUIRE(verdict.witness.has_value());
}

TEST_CASE("verdicts for the 2,3,1 pair") {
    const auto rcr2 = is_vertex_transitive(build(Variant::RcrII, 2, 3, 1));
    CHECK(rcr2.vertex_transitive == SymmetryVerdict::Transitive::Yes);
    CHECK(rcr2.recentering_applicable);

    const auto rcr = is_vertex_transitive(build(Variant::Rcr, 2, 3, 1));
    CHECK(rcr.vertex_transitive == SymmetryVerdict::Transitive::No);
    CHECK_FALSE(rcr.recentering_applicable);
}

TEST_CASE("size cap gives an undetermined verdict") {
    const auto g = build(Variant::Rcr, 2, 3, 2);
    const auto verdict = is_vertex_transitive(g, 16);
    CHECK(verdict.vertex_transitive == SymmetryVerdict::Transitive::Undetermined);
}

TEST_CASE("find_automorphism agrees with the certificate route") {
    const auto g = build(Variant::RcrII, 2, 3, 1);
    const auto aut = find_automorphism(g, 0, 7);
    REQUIRE(aut.has_value());
    CHECK(aut->image[0] == 7);
    CHECK(is_automorphism(g, *aut));
}
