#include "rcr/scenarios.hpp"

#include <map>
#include <sstream>

#include "rcr/analysis.hpp"
#include "rcr/symmetry.hpp"
#include "rcr/topology.hpp"

namespace rcr {

namespace {

template <typename T>
std::optional<std::string> expect_eq(const T& observed, const T& expected,
                                     const std::string& what) {
    if (observed == expected) return std::nullopt;
    std::ostringstream os;
    os << what << ": expected " << expected << ", observed " << observed;
    return os.str();
}

std::string join(const std::vector<int>& v) {
    std::string out = "{";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out + "}";
}

// RCR(3,3,1): 32 nodes of degree 5, 16 of degree 4.
std::optional<std::string> example1() {
    const auto g = Topology::build(NetworkParams(Variant::Rcr, 3, 3, 1));
    const auto deg = degree_distribution(g);
    const std::map<int, std::uint64_t> expected{{4, 16}, {5, 32}};
    if (deg.histogram != expected) return "degree histogram differs from {4:16, 5:32}";
    if (deg.predicted.lo != 4 || deg.predicted.hi != 5 || !deg.predicted.forced_nonuniform)
        return "degree prediction should be the non-uniform range [4, 5]";
    return std::nullopt;
}

// RCR(2,3,2): uniform degree 4 yet not vertex-transitive.
std::optional<std::string> example2() {
    const auto g = Topology::build(NetworkParams(Variant::Rcr, 2, 3, 2));
    const auto deg = degree_distribution(g);
    if (deg.histogram.size() != 1 || deg.histogram.begin()->first != 4)
        return "degree should be uniformly 4";
    const auto verdict = is_vertex_transitive(g, 64);
    if (verdict.vertex_transitive != SymmetryVerdict::Transitive::No)
        return "expected a not-transitive verdict";
    if (!verdict.witness) return "not-transitive verdict must carry a witness pair";
    return std::nullopt;
}

// RCR(2,2,3): unconnected, components [32, 32], bit 2 never flipped.
std::optional<std::string> example3() {
    const NetworkParams p(Variant::Rcr, 2, 2, 3);
    const auto g = Topology::build(p);
    const auto components = connected_components(g);
    if (components != std::vector<std::uint32_t>{32, 32}) return "components differ from [32, 32]";
    const auto cov = coverage_check(p);
    if (cov.covered || cov.missing != std::vector<int>{2})
        return "coverage should fail with missing index {2}";
    if (predicted_connected(p)) return "closed form should predict unconnected";
    if (auto err = expect_eq(bisection_upper_bound(p), std::uint64_t(0), "bisection bound"))
        return err;
    return std::nullopt;
}

// RCR(1,10,1): cube-only cut bound is 10 but 8 ring edges already bisect.
std::optional<std::string> example4() {
    const NetworkParams p(Variant::Rcr, 1, 10, 1);
    const auto g = Topology::build(p);
    if (auto err = expect_eq(bisection_upper_bound(p), std::uint64_t(10), "bisection bound"))
        return err;
    const std::vector<std::pair<std::string, std::string>> listed{
        {"00;0", "00;1"}, {"00;5", "00;6"}, {"01;5", "01;6"}, {"01;0", "01;1"},
        {"10;0", "10;1"}, {"10;5", "10;6"}, {"11;5", "11;6"}, {"11;0", "11;1"}};
    std::vector<std::pair<NodeId, NodeId>> cut;
    for (const auto& [a, b] : listed)
        cut.emplace_back(coord_to_id(parse_coord(a, p), p), coord_to_id(parse_coord(b, p), p));
    const auto rep = verify_cut(g, cut);
    if (!rep.bisects || rep.side_a != 20 || rep.side_b != 20)
        return "the 8 listed ring edges should bisect into 20/20";
    return std::nullopt;
}

// RCR(1,2,1): exact bisection equals the bound, both 2.
std::optional<std::string> example5() {
    const NetworkParams p(Variant::Rcr, 1, 2, 1);
    const auto g = Topology::build(p);
    if (auto err = expect_eq(bisection_upper_bound(p), std::uint64_t(2), "bisection bound"))
        return err;
    if (auto err = expect_eq(exact_bisection(g), std::uint32_t(2), "exact bisection")) return err;
    return std::nullopt;
}

// RCR(2,5,7): the worst pair takes 14 hops, matching the diameter bound.
std::optional<std::string> example6() {
    const NetworkParams p(Variant::Rcr, 2, 5, 7);
    const auto g = Topology::build(p);
    const auto from = coord_to_id(parse_coord("000000000;0", p), p);
    const auto to = coord_to_id(parse_coord("111111111;2", p), p);
    const auto d = distance(g, from, to);
    if (!d || *d != 14) return "distance <0...0;0> to <1...1;2> should be 14";
    const auto diam = diameter(g);
    if (!diam || *diam != 14) return "diameter should be 14";
    const auto bound = diameter_bound(p);
    if (!bound || *bound != 14) return "diameter bound should be 14";
    // The earlier k+j+1+floor(r/2) = 12 bound is exceeded.
    if (!(*diam > 12)) return "diameter should exceed the superseded bound of 12";
    return std::nullopt;
}

// RCR-II(3,3,1): uniform degree min(3+3-1, 3+2) = 5.
std::optional<std::string> example7() {
    const auto g = Topology::build(NetworkParams(Variant::RcrII, 3, 3, 1));
    const auto deg = degree_distribution(g);
    if (deg.histogram.size() != 1 || deg.histogram.begin()->first != 5)
        return "degree should be uniformly 5";
    return std::nullopt;
}

// RCR-II(2,3,1) is vertex-transitive (all 24 recentering maps check out);
// RCR(2,3,1) is not.
std::optional<std::string> example8() {
    const NetworkParams p2(Variant::RcrII, 2, 3, 1);
    const auto g2 = Topology::build(p2);
    if (!recentering_applicable(p2)) return "mod(r*j, k+j) should be 0 for rcr2(2,3,1)";
    for (NodeId v = 0; v < g2.node_count(); ++v)
        if (!is_automorphism(g2, recentering_map(p2, id_to_coord(v, p2))))
            return "recentering map at node " + std::to_string(v) + " is not an automorphism";
    const auto verdict2 = is_vertex_transitive(g2, 64);
    if (verdict2.vertex_transitive != SymmetryVerdict::Transitive::Yes)
        return "rcr2(2,3,1) should be vertex-transitive";
    const auto g1 = Topology::build(NetworkParams(Variant::Rcr, 2, 3, 1));
    const auto verdict1 = is_vertex_transitive(g1, 64);
    if (verdict1.vertex_transitive != SymmetryVerdict::Transitive::No)
        return "rcr(2,3,1) should not be vertex-transitive";
    return std::nullopt;
}

// RCR(2,5,7): active bit indices per ring position.
std::optional<std::string> table1() {
    const NetworkParams p(Variant::Rcr, 2, 5, 7);
    const std::vector<std::vector<int>> expected{{7, 8}, {0, 1}, {6, 7}, {4, 5}, {2, 3}};
    for (int b = 0; b < 5; ++b) {
        const auto observed = cube_bit_indices(p, b);
        if (observed != expected[std::size_t(b)])
            return "b=" + std::to_string(b) + ": expected " + join(expected[std::size_t(b)]) +
                   ", observed " + join(observed);
    }
    return std::nullopt;
}

}  // namespace

const std::vector<Scenario>& reference_scenarios() {
    static const std::vector<Scenario> scenarios{
        {"example1", example1}, {"example2", example2}, {"example3", example3},
        {"example4", example4}, {"example5", example5}, {"example6", example6},
        {"example7", example7}, {"example8", example8}, {"table1", table1},
    };
    return scenarios;
}

bool run_reference_scenarios(std::ostream& os) {
    bool all_ok = true;
    for (const auto& scenario : reference_scenarios()) {
        const auto failure = scenario.run();
        if (failure) {
            all_ok = false;
            os << "FAIL " << scenario.name << ": " << *failure << "\n";
        } else {
            os << "PASS " << scenario.name << "\n";
        }
    }
    return all_ok;
}

}  // namespace rcr
