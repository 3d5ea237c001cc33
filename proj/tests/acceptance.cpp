// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria 1-8 replay the reference scenarios; 9 and 10 sweep the
// full parameter grid against the closed forms.

#include <chrono>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "rcr/analysis.hpp"
#include "rcr/scenarios.hpp"
#include "rcr/symmetry.hpp"
#include "rcr/topology.hpp"

using namespace rcr;

namespace {

std::optional<std::string> scenario(const std::string& name) {
    for (const auto& s : reference_scenarios())
        if (s.name == name) return s.run();
    return "scenario " + name + " not found";
}

// Criterion 9: zero violations of the degree, connectivity, and diameter
// closed forms over k in [1,5], r in [1,6], j in [0,6], N <= 4096.
std::optional<std::string> property_sweep() {
    for (Variant variant : {Variant::Rcr, Variant::RcrII}) {
        for (int k = 1; k <= 5; ++k) {
            for (int r = 1; r <= 6; ++r) {
                for (int j = 0; j <= 6; ++j) {
                    const NetworkParams p(variant, k, r, j);
                    if (p.node_count() > 4096) continue;
                    const std::string point = variant_name(variant) + "(" + std::to_string(k) +
                                              "," + std::to_string(r) + "," + std::to_string(j) +
                                              ")";
                    const auto g = Topology::build(p);

                    const auto deg = degree_distribution(g);
                    if (!deg.conforms()) return point + ": degree outside the predicted set";

                    const bool observed = connected_components(g).size() == 1;
                    if (predicted_connected(p) != observed)
                        return point + ": closed-form connectivity != BFS";
                    if (coverage_check(p).covered != observed)
                        return point + ": coverage != BFS connectivity";
                    if ((long long)(r - 1) * k < j && observed)
                        return point + ": connected despite (r-1)k < j";
                    if (deg.histogram.size() > 1 && !observed)
                        return point + ": non-uniform degree but unconnected";

                    const auto diam = diameter(g);
                    const auto bound = diameter_bound(p);
                    if (diam.has_value() != observed)
                        return point + ": diameter finiteness != connectivity";
                    if (bound.has_value() != observed)
                        return point + ": bound finiteness != connectivity";
                    if (diam && std::uint64_t(*diam) > *bound)
                        return point + ": diameter " + std::to_string(*diam) + " exceeds bound " +
                               std::to_string(*bound);
                }
            }
        }
    }
    return std::nullopt;
}

// Criterion 10: exact bisection never exceeds the closed-form bound on any
// grid point small enough to enumerate.
std::optional<std::string> bound_soundness() {
    for (Variant variant : {Variant::Rcr, Variant::RcrII}) {
        for (int k = 1; k <= 5; ++k) {
            for (int r = 1; r <= 6; ++r) {
                for (int j = 0; j <= 6; ++j) {
                    const NetworkParams p(variant, k, r, j);
                    if (p.node_count() > 24) continue;
                    const auto g = Topology::build(p);
                    const auto exact = exact_bisection(g);
                    const auto bound = bisection_upper_bound(p);
                    if (exact > bound)
                        return variant_name(variant) + "(" + std::to_string(k) + "," +
                               std::to_string(r) + "," + std::to_string(j) + "): exact " +
                               std::to_string(exact) + " > bound " + std::to_string(bound);
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

int main() {
    struct Criterion {
        std::string name;
        std::function<std::optional<std::string>()> run;
    };
    const std::vector<Criterion> criteria{
        {"1 degree histogram of RCR(3,3,1)", [] { return scenario("example1"); }},
        {"2 uniform-degree RCR(2,3,2) is not vertex-transitive",
         [] { return scenario("example2"); }},
        {"3 RCR(2,2,3) splits 32/32 with bit 2 uncovered", [] { return scenario("example3"); }},
        {"4 ring-edge cut of RCR(1,10,1) beats the cube bound",
         [] { return scenario("example4"); }},
        {"5 exact bisection of RCR(1,2,1) meets the bound", [] { return scenario("example5"); }},
        {"6 active bit indices of RCR(2,5,7)", [] { return scenario("table1"); }},
        {"7 distance and diameter of RCR(2,5,7) are 14", [] { return scenario("example6"); }},
        {"8 class-II degree and symmetry verdicts",
         []() -> std::optional<std::string> {
             if (auto err = scenario("example7")) return err;
             return scenario("example8");
         }},
        {"9 property sweep, zero violations", property_sweep},
        {"10 bisection bound soundness on all tiny points", bound_soundness},
    };

    bool all_ok = true;
    for (const auto& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        const auto failure = criterion.run();
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        if (failure) {
            all_ok = false;
            std::cout << "FAIL criterion " << criterion.name << ": " << *failure << " (" << ms
                      << " ms)\n";
        } else {
            std::cout << "PASS criterion " << criterion.name << " (" << ms << " ms)\n";
        }
    }
    return all_ok ? 0 : 1;
}
