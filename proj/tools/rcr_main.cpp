// Command-line front end: build/export topologies, run analyses, replay the
// reference scenarios, and sweep parameter grids.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rcr/analysis.hpp"
#include "rcr/scenarios.hpp"
#include "rcr/symmetry.hpp"
#include "rcr/topology.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitUnreachable = 3;

rcr::Variant parse_variant(const std::string& s) {
    if (s == "rcr") return rcr::Variant::Rcr;
    if (s == "rcr2") return rcr::Variant::RcrII;
    throw std::invalid_argument("variant must be rcr or rcr2");
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file " + path);
    out << text;
}

struct Range {
    int lo = 0;
    int hi = 0;
};

Range parse_range(const std::string& s) {
    const auto colon = s.find(':');
    Range r;
    if (colon == std::string::npos) {
        r.lo = r.hi = std::stoi(s);
    } else {
        r.lo = std::stoi(s.substr(0, colon));
        r.hi = std::stoi(s.substr(colon + 1));
    }
    if (r.hi < r.lo) throw std::invalid_argument("empty range " + s);
    return r;
}

int run_build(const rcr::NetworkParams& params, const std::string& format,
              std::uint64_t node_cap, const std::string& out_path) {
    const auto g = rcr::Topology::build(params, node_cap);
    if (format == "edges") {
        write_output(g.to_edge_list(), out_path);
    } else if (format == "dot") {
        write_output(g.to_dot(), out_path);
    } else {
        nlohmann::ordered_json doc;
        doc["params"] = {{"variant", rcr::variant_name(params.variant)},
                         {"k", params.k},
                         {"r", params.r},
                         {"j", params.j}};
        doc["nodes"] = g.node_count();
        doc["edges"] = {{"ring", g.ring_edge_count()}, {"cube", g.cube_edge_count()}};
        write_output(doc.dump(2) + "\n", out_path);
    }
    return kExitOk;
}

int run_analyze(const rcr::NetworkParams& params, const rcr::AnalysisOptions& opt,
                std::uint64_t node_cap, const std::string& out_path) {
    const auto g = rcr::Topology::build(params, node_cap);
    write_output(rcr::to_json(rcr::analyze(g, opt)).dump(2) + "\n", out_path);
    return kExitOk;
}

int run_distance(const rcr::NetworkParams& params, const std::string& from_text,
                 const std::string& to_text, std::uint64_t node_cap) {
    const auto g = rcr::Topology::build(params, node_cap);
    const auto from = rcr::coord_to_id(rcr::parse_coord(from_text, params), params);
    const auto to = rcr::coord_to_id(rcr::parse_coord(to_text, params), params);
    const auto path = rcr::shortest_path(g, from, to);
    if (!path) {
        std::cout << "unreachable\n";
        return kExitUnreachable;
    }
    std::cout << path->size() - 1 << " hops\n";
    for (std::size_t i = 0; i + 1 < path->size(); ++i) {
        const auto kind = g.edge_kind((*path)[i], (*path)[i + 1]);
        std::cout << rcr::format_coord(rcr::id_to_coord((*path)[i], params), params) << " --"
                  << (*kind == rcr::EdgeKind::Ring ? "ring" : "cube") << "-- "
                  << rcr::format_coord(rcr::id_to_coord((*path)[i + 1], params), params) << "\n";
    }
    return kExitOk;
}

std::vector<std::pair<rcr::NodeId, rcr::NodeId>> parse_cut(const std::string& text) {
    std::vector<std::pair<rcr::NodeId, rcr::NodeId>> cut;
    std::istringstream is(text);
    std::string item;
    while (is >> item) {
        const auto dash = item.find('-');
        if (dash == std::string::npos)
            throw std::invalid_argument("cut edges must be u-v pairs");
        cut.emplace_back(rcr::NodeId(std::stoul(item.substr(0, dash))),
                         rcr::NodeId(std::stoul(item.substr(dash + 1))));
    }
    return cut;
}

int run_bisect(const rcr::NetworkParams& params, bool exact, std::uint32_t bisect_cap,
               const std::string& cut_text, std::uint64_t node_cap) {
    const auto g = rcr::Topology::build(params, node_cap);
    nlohmann::ordered_json doc;
    doc["upper_bound"] = rcr::bisection_upper_bound(params);
    if (exact) {
        if (g.node_count() <= bisect_cap)
            doc["exact"] = rcr::exact_bisection(g, bisect_cap);
        else
            doc["exact"] = "skipped: size";
    }
    if (!cut_text.empty()) {
        const auto rep = rcr::verify_cut(g, parse_cut(cut_text));
        doc["cut"] = {{"bisects", rep.bisects}, {"sides", {rep.side_a, rep.side_b}}};
    }
    std::cout << doc.dump(2) << "\n";
    return kExitOk;
}

struct SweepSpec {
    std::vector<rcr::Variant> variants;
    Range k, r, j;
    std::uint64_t node_cap = 4096;
    bool degree = true;
    bool connectivity = true;
    bool bisection = true;
    bool exact_bisection = false;
    bool diameter = true;
    bool symmetry = false;
    std::uint32_t bisect_cap = 24;
    std::uint32_t symmetry_cap = 64;
};

std::string check(bool ok, std::uint64_t& violations) {
    if (!ok) ++violations;
    return ok ? "ok" : "VIOLATION";
}

int run_sweep(const SweepSpec& spec) {
    std::uint64_t violations = 0;
    std::uint64_t skipped = 0;
    std::cout << "variant k r j N degrees conn min_num bisect diameter symmetry status\n";
    for (rcr::Variant variant : spec.variants) {
        for (int k = spec.k.lo; k <= spec.k.hi; ++k) {
            for (int r = spec.r.lo; r <= spec.r.hi; ++r) {
                for (int j = spec.j.lo; j <= spec.j.hi; ++j) {
                    const rcr::NetworkParams p(variant, k, r, j);
                    std::cout << rcr::variant_name(variant) << " " << k << " " << r << " " << j
                              << " " << p.node_count();
                    if (p.node_count() > spec.node_cap) {
                        ++skipped;
                        std::cout << " - - - - - - skipped\n";
                        continue;
                    }
                    const auto g = rcr::Topology::build(p, spec.node_cap);
                    std::vector<std::string> cells;
                    bool point_ok = true;
                    auto record = [&](bool ok) {
                        if (!ok) point_ok = false;
                        return ok;
                    };

                    const auto deg = rcr::degree_distribution(g);
                    if (spec.degree) {
                        std::ostringstream cell;
                        cell << deg.histogram.begin()->first;
                        if (deg.histogram.size() > 1) cell << ".." << deg.histogram.rbegin()->first;
                        record(deg.conforms());
                        cells.push_back(cell.str());
                    } else {
                        cells.push_back("-");
                    }

                    const auto components = rcr::connected_components(g);
                    const bool observed_conn = components.size() == 1;
                    if (spec.connectivity) {
                        const bool predicted = rcr::predicted_connected(p);
                        const bool covered = rcr::coverage_check(p).covered;
                        record(predicted == observed_conn && covered == observed_conn);
                        // Non-uniform degree implies connected.
                        if (deg.histogram.size() > 1) record(observed_conn);
                        cells.push_back(observed_conn ? "yes" : "no");
                    } else {
                        cells.push_back("-");
                    }

                    const auto num = rcr::num_table(p);
                    cells.push_back(std::to_string(num.min()));

                    if (spec.bisection) {
                        const auto bound = rcr::bisection_upper_bound(p);
                        std::string cell = "<=" + std::to_string(bound);
                        if (spec.exact_bisection && g.node_count() <= spec.bisect_cap) {
                            const auto exact = rcr::exact_bisection(g, spec.bisect_cap);
                            record(exact <= bound);
                            cell = std::to_string(exact) + "/" + cell;
                        }
                        cells.push_back(cell);
                    } else {
                        cells.push_back("-");
                    }

                    if (spec.diameter) {
                        const auto observed = rcr::diameter(g);
                        const auto bound = rcr::diameter_bound(p);
                        record(observed.has_value() == bound.has_value());
                        if (observed && bound) record(std::uint64_t(*observed) <= *bound);
                        cells.push_back(observed ? std::to_string(*observed) + "<=" +
                                                       std::to_string(bound.value_or(0))
                                                 : "inf");
                    } else {
                        cells.push_back("-");
                    }

                    if (spec.symmetry && g.node_count() <= spec.symmetry_cap) {
                        const auto verdict = rcr::is_vertex_transitive(g, spec.symmetry_cap);
                        if (verdict.recentering_applicable)
                            record(verdict.vertex_transitive ==
                                   rcr::SymmetryVerdict::Transitive::Yes);
                        cells.push_back(
                            verdict.vertex_transitive == rcr::SymmetryVerdict::Transitive::Yes
                                ? "vt"
                                : "not-vt");
                    } else {
                        cells.push_back("-");
                    }

                    for (const auto& cell : cells) std::cout << " " << cell;
                    std::cout << " " << check(point_ok, violations) << "\n";
                }
            }
        }
    }
    std::cout << "skipped: " << skipped << "\n";
    std::cout << "violations: " << violations << "\n";
    return violations == 0 ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generator and analyzer for recursive-cube-of-rings topologies"};
    app.require_subcommand(1);

    std::string variant_str = "rcr";
    int k = 1, r = 1, j = 0;
    std::string format = "edges";
    std::string out_path;
    std::uint64_t node_cap = rcr::Topology::kDefaultNodeCap;
    bool want_exact = false;
    bool want_symmetry = false;
    std::uint32_t bisect_cap = 24;
    std::uint32_t symmetry_cap = 64;
    std::string from_text, to_text, cut_text;

    auto add_params = [&](CLI::App* cmd) {
        cmd->add_option("variant", variant_str, "rcr or rcr2")->required();
        cmd->add_option("k", k, "cube dimension (>= 1)")->required();
        cmd->add_option("r", r, "ring dimension (>= 1)")->required();
        cmd->add_option("j", j, "expansion level (>= 0)")->required();
        cmd->add_option("--node-cap", node_cap, "maximum node count the builder accepts");
    };

    auto* build = app.add_subcommand("build", "build a topology and export it");
    add_params(build);
    build->add_option("--format", format, "edges, dot, or json")
        ->check(CLI::IsMember({"edges", "dot", "json"}));
    build->add_option("-o,--output", out_path, "write to file instead of stdout");

    auto* analyze = app.add_subcommand("analyze", "run all analyses and print a JSON report");
    add_params(analyze);
    analyze->add_flag("--exact-bisection", want_exact, "run the exhaustive bisection oracle");
    analyze->add_option("--bisect-cap", bisect_cap, "node cap for exact bisection");
    analyze->add_flag("--symmetry", want_symmetry, "run the vertex-transitivity oracle");
    analyze->add_option("--symmetry-cap", symmetry_cap, "node cap for the symmetry search");
    analyze->add_option("-o,--output", out_path, "write to file instead of stdout");

    auto* examples = app.add_subcommand(
        "paper-examples", "replay the reference scenarios against their expected outputs");

    auto* distance = app.add_subcommand("distance", "shortest path between two coordinates");
    add_params(distance);
    distance->add_option("from", from_text, "source coordinate \"<bits;b>\"")->required();
    distance->add_option("to", to_text, "destination coordinate \"<bits;b>\"")->required();

    auto* bisect = app.add_subcommand("bisect", "bisection bound, exact oracle, cut checks");
    add_params(bisect);
    bisect->add_flag("--exact", want_exact, "run the exhaustive bisection oracle");
    bisect->add_option("--bisect-cap", bisect_cap, "node cap for exact bisection");
    bisect->add_option("--cut", cut_text, "space-separated u-v edges to verify as a cut");

    auto* sweep = app.add_subcommand("sweep", "verify the closed forms over a parameter grid");
    std::string sweep_variant = "both";
    std::string k_range = "1:5", r_range = "1:6", j_range = "0:6";
    SweepSpec spec;
    sweep->add_option("--variant", sweep_variant, "rcr, rcr2, or both")
        ->check(CLI::IsMember({"rcr", "rcr2", "both"}));
    sweep->add_option("--k", k_range, "k range lo:hi");
    sweep->add_option("--r", r_range, "r range lo:hi");
    sweep->add_option("--j", j_range, "j range lo:hi");
    sweep->add_option("--node-cap", spec.node_cap, "skip grid points above this node count");
    sweep->add_flag("--exact-bisection", spec.exact_bisection, "include the exact oracle");
    sweep->add_flag("--symmetry", spec.symmetry, "include the vertex-transitivity oracle");
    sweep->add_option("--bisect-cap", spec.bisect_cap, "node cap for exact bisection");
    sweep->add_option("--symmetry-cap", spec.symmetry_cap, "node cap for the symmetry search");
    sweep->add_flag("!--no-degree", spec.degree, "skip degree checks");
    sweep->add_flag("!--no-connectivity", spec.connectivity, "skip connectivity checks");
    sweep->add_flag("!--no-bisection", spec.bisection, "skip the bisection bound");
    sweep->add_flag("!--no-diameter", spec.diameter, "skip diameter checks");

    CLI11_PARSE(app, argc, argv);

    try {
        if (examples->parsed()) {
            return rcr::run_reference_scenarios(std::cout) ? kExitOk : kExitMismatch;
        }
        if (sweep->parsed()) {
            if (sweep_variant == "rcr")
                spec.variants = {rcr::Variant::Rcr};
            else if (sweep_variant == "rcr2")
                spec.variants = {rcr::Variant::RcrII};
            else
                spec.variants = {rcr::Variant::Rcr, rcr::Variant::RcrII};
            spec.k = parse_range(k_range);
            spec.r = parse_range(r_range);
            spec.j = parse_range(j_range);
            return run_sweep(spec);
        }
        const rcr::NetworkParams params(parse_variant(variant_str), k, r, j);
        if (build->parsed()) return run_build(params, format, node_cap, out_path);
        if (analyze->parsed()) {
            rcr::AnalysisOptions opt;
            opt.exact_bisection = want_exact;
            opt.bisect_cap = bisect_cap;
            opt.symmetry = want_symmetry;
            opt.symmetry_cap = symmetry_cap;
            return run_analyze(params, opt, node_cap, out_path);
        }
        if (distance->parsed()) return run_distance(params, from_text, to_text, node_cap);
        if (bisect->parsed()) return run_bisect(params, want_exact, bisect_cap, cut_text, node_cap);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
