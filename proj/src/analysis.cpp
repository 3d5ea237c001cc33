#include "rcr/analysis.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace rcr {

int NumTable::min() const {
    return *std::min_element(count.begin(), count.end());
}

NumTable num_table(const NetworkParams& p) {
    NumTable table;
    table.count.assign(std::size_t(p.bit_width()), 0);
    for (int b = 0; b < p.r; ++b)
        for (int t : cube_bit_indices(p, b)) table.count[std::size_t(t)] += 1;
    return table;
}

DegreePrediction predicted_degree(const NetworkParams& p) {
    if (p.variant == Variant::RcrII) {
        const int d = std::min(p.k + p.r - 1, p.k + 2);
        return {d, d, false};
    }
    if (p.r <= 2) {
        const int d = p.k + p.r - 1;
        return {d, d, false};
    }
    if (p.k <= p.j + 1 || p.j == 0) return {p.k + 2, p.k + 2, false};
    return {(p.k + 1) / 2 + 2, p.k + 2, true};
}

DegreeReport degree_distribution(const Topology& g) {
    DegreeReport rep;
    rep.predicted = predicted_degree(g.params());
    for (NodeId u = 0; u < g.node_count(); ++u)
        rep.histogram[int(g.neighbors(u).size())] += 1;
    return rep;
}

bool DegreeReport::conforms() const {
    if (histogram.begin()->first < predicted.lo || histogram.rbegin()->first > predicted.hi)
        return false;
    if (predicted.uniform() && histogram.size() != 1) return false;
    if (predicted.forced_nonuniform && histogram.size() < 2) return false;
    return true;
}

bool predicted_connected(const NetworkParams& p) {
    const long long reach = (long long)(p.r - 1) * p.k;
    if (p.variant == Variant::RcrII) return reach >= p.j;
    return p.r <= 2 ? reach >= p.j : reach >= p.j + 1;
}

Coverage coverage_check(const NetworkParams& p) {
    const NumTable table = num_table(p);
    Coverage cov{true, {}};
    for (int t = 0; t < p.bit_width(); ++t)
        if (table.count[std::size_t(t)] == 0) cov.missing.push_back(t);
    cov.covered = cov.missing.empty();
    return cov;
}

namespace {

std::vector<std::uint32_t> component_sizes(const Topology& g,
                                           const std::set<std::uint64_t>* removed,
                                           std::vector<int>* label_out = nullptr) {
    const NodeId n = g.node_count();
    std::vector<int> label(n, -1);
    std::vector<std::uint32_t> sizes;
    std::deque<NodeId> queue;
    for (NodeId s = 0; s < n; ++s) {
        if (label[s] >= 0) continue;
        const int id = int(sizes.size());
        sizes.push_back(0);
        label[s] = id;
        queue.push_back(s);
        while (!queue.empty()) {
            const NodeId u = queue.front();
            queue.pop_front();
            sizes[std::size_t(id)] += 1;
            for (NodeId v : g.neighbors(u)) {
                if (label[v] >= 0) continue;
                if (removed) {
                    const auto key = std::uint64_t(std::min(u, v)) << 32 | std::max(u, v);
                    if (removed->count(key)) continue;
                }
                label[v] = id;
                queue.push_back(v);
            }
        }
    }
    if (label_out) *label_out = std::move(label);
    return sizes;
}

}  // namespace

std::vector<std::uint32_t> connected_components(const Topology& g) {
    auto sizes = component_sizes(g, nullptr);
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    return sizes;
}

std::uint64_t bisection_upper_bound(const NetworkParams& p) {
    const std::uint64_t per_index = p.node_count() / (2 * std::uint64_t(p.r));
    return std::uint64_t(num_table(p).min()) * per_index;
}

namespace {

struct BisectionSearch {
    const Topology& g;
    std::uint32_t half;
    std::uint32_t best;
    std::vector<std::int8_t> side;  // -1 unassigned, 0/1 assigned

    void run(NodeId next, std::uint32_t count_a, std::uint32_t count_b, std::uint32_t crossing) {
        if (crossing >= best) return;
        if (next == g.node_count()) {
            best = crossing;
            return;
        }
        const std::uint32_t remaining = g.node_count() - next;
        for (std::int8_t s : {std::int8_t(0), std::int8_t(1)}) {
            const std::uint32_t a = count_a + (s == 0);
            const std::uint32_t b = count_b + (s == 1);
            if (a > half || b > half) continue;
            if (a + (remaining - 1) < half || b + (remaining - 1) < half) continue;
            std::uint32_t added = 0;
            for (NodeId v : g.neighbors(next))
                if (v < next && side[v] != s) ++added;
            side[next] = s;
            run(next + 1, a, b, crossing + added);
            side[next] = -1;
        }
    }
};

}  // namespace

std::uint32_t exact_bisection(const Topology& g, std::uint32_t node_cap) {
    const NodeId n = g.node_count();
    if (n > node_cap)
        throw std::length_error("exact bisection capped at " + std::to_string(node_cap) +
                                " nodes (" + std::to_string(n) + " requested); use verify_cut");
    if (n % 2 != 0) throw std::invalid_argument("node count must be even");
    BisectionSearch search{g, n / 2, std::uint32_t(g.edge_count()) + 1, {}};
    search.side.assign(n, -1);
    search.side[0] = 0;  // fixing node 0 halves the space
    search.run(1, 1, 0, 0);
    return search.best;
}

CutReport verify_cut(const Topology& g, const std::vector<std::pair<NodeId, NodeId>>& cut) {
    std::set<std::uint64_t> removed;
    for (auto [u, v] : cut) {
        if (u >= g.node_count() || v >= g.node_count() || !g.has_edge(u, v))
            throw std::invalid_argument("cut contains an edge not in the graph: " +
                                        std::to_string(u) + "-" + std::to_string(v));
        removed.insert(std::uint64_t(std::min(u, v)) << 32 | std::max(u, v));
    }
    const auto sizes = component_sizes(g, &removed);
    const std::uint32_t n = g.node_count();

    // Exact subset-sum over component sizes: which side totals are reachable?
    std::vector<bool> reachable(n + 1, false);
    reachable[0] = true;
    for (std::uint32_t s : sizes)
        for (std::uint32_t sum = n; sum + 1 > s; --sum)
            if (reachable[sum - s]) reachable[sum] = true;

    if (n % 2 == 0 && reachable[n / 2]) return {true, n / 2, n / 2};
    std::uint32_t closest = 0;
    for (std::uint32_t sum = 0; sum <= n / 2; ++sum)
        if (reachable[sum]) closest = sum;
    return {false, closest, n - closest};
}

namespace {

// BFS distances from one source; -1 marks unreachable.
std::vector<int> bfs_distances(const Topology& g, NodeId from, std::vector<NodeId>* parent) {
    std::vector<int> dist(g.node_count(), -1);
    if (parent) parent->assign(g.node_count(), NodeId(-1));
    std::deque<NodeId> queue{from};
    dist[from] = 0;
    while (!queue.empty()) {
        const NodeId u = queue.front();
        queue.pop_front();
        for (NodeId v : g.neighbors(u)) {
            if (dist[v] >= 0) continue;
            dist[v] = dist[u] + 1;
            if (parent) (*parent)[v] = u;
            queue.push_back(v);
        }
    }
    return dist;
}

}  // namespace

std::optional<int> distance(const Topology& g, NodeId from, NodeId to) {
    if (from >= g.node_count() || to >= g.node_count())
        throw std::invalid_argument("node id out of range");
    const int d = bfs_distances(g, from, nullptr)[to];
    return d < 0 ? std::nullopt : std::optional<int>(d);
}

std::optional<std::vector<NodeId>> shortest_path(const Topology& g, NodeId from, NodeId to) {
    if (from >= g.node_count() || to >= g.node_count())
        throw std::invalid_argument("node id out of range");
    std::vector<NodeId> parent;
    if (bfs_distances(g, from, &parent)[to] < 0) return std::nullopt;
    std::vector<NodeId> path{to};
    while (path.back() != from) path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

std::optional<int> diameter(const Topology& g) {
    int max_ecc = 0;
    for (NodeId s = 0; s < g.node_count(); ++s) {
        const auto dist = bfs_distances(g, s, nullptr);
        for (int d : dist) {
            if (d < 0) return std::nullopt;
            max_ecc = std::max(max_ecc, d);
        }
    }
    return max_ecc;
}

std::optional<std::uint64_t> diameter_bound(const NetworkParams& p) {
    if (num_table(p).min() == 0) return std::nullopt;
    const std::uint64_t base = std::uint64_t(p.bit_width()) + p.r + p.r / 2;
    return p.r <= 3 ? base - 1 : base - 2;
}

AnalysisReport analyze(const Topology& g, const AnalysisOptions& opt) {
    const NetworkParams& p = g.params();
    AnalysisReport rep{.params = p,
                       .nodes = g.node_count(),
                       .ring_edges = g.ring_edge_count(),
                       .cube_edges = g.cube_edge_count(),
                       .degree = degree_distribution(g),
                       .components = connected_components(g),
                       .predicted_conn = predicted_connected(p),
                       .observed_conn = false,
                       .num = num_table(p),
                       .bisection_bound = bisection_upper_bound(p),
                       .symmetry = {}};
    rep.observed_conn = rep.components.size() == 1;
    if (rep.predicted_conn != rep.observed_conn)
        throw std::logic_error("predicted and observed connectivity disagree for " +
                               variant_name(p.variant) + "(" + std::to_string(p.k) + "," +
                               std::to_string(p.r) + "," + std::to_string(p.j) + ")");
    rep.exact_bisection_requested = opt.exact_bisection;
    if (opt.exact_bisection && g.node_count() <= opt.bisect_cap)
        rep.exact_bisection_value = exact_bisection(g, opt.bisect_cap);
    rep.diameter_observed = diameter(g);
    rep.diameter_bnd = diameter_bound(p);
    rep.symmetry_checked = opt.symmetry;
    if (opt.symmetry)
        rep.symmetry = is_vertex_transitive(g, opt.symmetry_cap);
    else
        rep.symmetry.recentering_applicable = recentering_applicable(p);
    return rep;
}

nlohmann::ordered_json to_json(const AnalysisReport& rep) {
    using json = nlohmann::ordered_json;
    json doc;
    doc["params"] = {{"variant", variant_name(rep.params.variant)},
                     {"k", rep.params.k},
                     {"r", rep.params.r},
                     {"j", rep.params.j}};
    doc["nodes"] = rep.nodes;
    doc["edges"] = {{"ring", rep.ring_edges}, {"cube", rep.cube_edges}};
    json hist = json::object();
    for (auto [deg, n] : rep.degree.histogram) hist[std::to_string(deg)] = n;
    doc["degree_histogram"] = std::move(hist);
    if (rep.degree.predicted.uniform())
        doc["predicted_degree"] = {{"uniform", rep.degree.predicted.lo}};
    else
        doc["predicted_degree"] = {{"min", rep.degree.predicted.lo},
                                   {"max", rep.degree.predicted.hi}};
    doc["components"] = rep.components;
    doc["connected"] = {{"predicted", rep.predicted_conn}, {"observed", rep.observed_conn}};
    doc["num_table"] = rep.num.count;
    json bisect = {{"upper_bound", rep.bisection_bound}};
    if (rep.exact_bisection_requested) {
        if (rep.exact_bisection_value)
            bisect["exact"] = *rep.exact_bisection_value;
        else
            bisect["exact"] = "skipped: size";
    }
    doc["bisection"] = std::move(bisect);
    json diam;
    diam["observed"] = rep.diameter_observed ? json(*rep.diameter_observed) : json("infinite");
    diam["bound"] = rep.diameter_bnd ? json(*rep.diameter_bnd) : json("infinite");
    doc["diameter"] = std::move(diam);
    json sym;
    sym["checked"] = rep.symmetry_checked;
    if (rep.symmetry_checked) {
        switch (rep.symmetry.vertex_transitive) {
            case SymmetryVerdict::Transitive::Yes: sym["vertex_transitive"] = true; break;
            case SymmetryVerdict::Transitive::No: sym["vertex_transitive"] = false; break;
            case SymmetryVerdict::Transitive::Undetermined:
                sym["vertex_transitive"] = "not determined (size cap)";
                break;
        }
        if (rep.symmetry.witness)
            sym["witness"] = {rep.symmetry.witness->first, rep.symmetry.witness->second};
    }
    sym["theorem9_applicable"] = rep.symmetry.recentering_applicable;
    doc["symmetry"] = std::move(sym);
    return doc;
}

}  // namespace rcr
