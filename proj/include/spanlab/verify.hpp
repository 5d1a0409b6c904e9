#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "spanlab/exact.hpp"
#include "spanlab/util.hpp"

namespace spanlab {

// Exact shortest-path verification engine. Works on a plain adjacency list so
// every construction module can feed it after compacting its node ids.

constexpr std::int64_t kUnreachable = -1;

struct AdjGraph {
    explicit AdjGraph(std::int64_t n = 0) : nb(static_cast<std::size_t>(n)) {}

    std::int64_t num_nodes() const { return static_cast<std::int64_t>(nb.size()); }

    void add_edge(std::int64_t u, std::int64_t v) {
        nb[static_cast<std::size_t>(u)].push_back(v);
        nb[static_cast<std::size_t>(v)].push_back(u);
    }

    std::vector<std::vector<std::int64_t>> nb;
};

// Weighted counterpart (positive integer lengths), for emulator distances.
struct WeightedAdjGraph {
    explicit WeightedAdjGraph(std::int64_t n = 0) : nb(static_cast<std::size_t>(n)) {}

    std::int64_t num_nodes() const { return static_cast<std::int64_t>(nb.size()); }

    void add_edge(std::int64_t u, std::int64_t v, std::int64_t w) {
        if (w < 1) throw std::invalid_argument("edge weights must be >= 1");
        nb[static_cast<std::size_t>(u)].push_back({v, w});
        nb[static_cast<std::size_t>(v)].push_back({u, w});
    }

    struct Arc {
        std::int64_t to;
        std::int64_t weight;
    };
    std::vector<std::vector<Arc>> nb;
};

// Per-source distances plus exact shortest-path multiplicities.
// dist == kUnreachable  <=>  count == 0.
struct DistanceProfile {
    std::int64_t source = 0;
    std::vector<std::int64_t> dist;
    std::vector<BigInt> count;
};

inline DistanceProfile bfs_profile(const AdjGraph& g, std::int64_t source) {
    DistanceProfile p;
    p.source = source;
    const std::size_t n = static_cast<std::size_t>(g.num_nodes());
    p.dist.assign(n, kUnreachable);
    p.count.assign(n, BigInt(0));
    p.dist[static_cast<std::size_t>(source)] = 0;
    p.count[static_cast<std::size_t>(source)] = 1;
    std::vector<std::int64_t> queue{source};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::int64_t u = queue[head];
        const std::int64_t du = p.dist[static_cast<std::size_t>(u)];
        for (std::int64_t v : g.nb[static_cast<std::size_t>(u)]) {
            std::int64_t& dv = p.dist[static_cast<std::size_t>(v)];
            if (dv == kUnreachable) {
                dv = du + 1;
                queue.push_back(v);
            }
            if (dv == du + 1) p.count[static_cast<std::size_t>(v)] += p.count[static_cast<std::size_t>(u)];
        }
    }
    return p;
}

// Dijkstra with the same multiplicity DP over the shortest-path DAG.
inline DistanceProfile dijkstra_profile(const WeightedAdjGraph& g, std::int64_t source) {
    DistanceProfile p;
    p.source = source;
    const std::size_t n = static_cast<std::size_t>(g.num_nodes());
    p.dist.assign(n, kUnreachable);
    p.count.assign(n, BigInt(0));
    using Item = std::pair<std::int64_t, std::int64_t>;  // (dist, node)
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    p.dist[static_cast<std::size_t>(source)] = 0;
    pq.push({0, source});
    std::vector<char> settled(n, 0);
    std::vector<std::int64_t> order;
    order.reserve(n);
    while (!pq.empty()) {
        auto [d, u] = pq.top();
        pq.pop();
        if (settled[static_cast<std::size_t>(u)]) continue;
        settled[static_cast<std::size_t>(u)] = 1;
        order.push_back(u);
        for (const auto& arc : g.nb[static_cast<std::size_t>(u)]) {
            std::int64_t& dv = p.dist[static_cast<std::size_t>(arc.to)];
            const std::int64_t cand = d + arc.weight;
            if (dv == kUnreachable || cand < dv) {
                dv = cand;
                pq.push({cand, arc.to});
            }
        }
    }
    p.count[static_cast<std::size_t>(source)] = 1;
    for (std::int64_t u : order) {
        if (u == source) continue;
        BigInt acc = 0;
        for (const auto& arc : g.nb[static_cast<std::size_t>(u)]) {
            if (p.dist[static_cast<std::size_t>(arc.to)] != kUnreachable &&
                p.dist[static_cast<std::size_t>(arc.to)] + arc.weight ==
                    p.dist[static_cast<std::size_t>(u)])
                acc += p.count[static_cast<std::size_t>(arc.to)];
        }
        p.count[static_cast<std::size_t>(u)] = acc;
    }
    return p;
}

namespace detail {

// Enumerate shortest paths from source to t in lexicographic node order,
// stopping at the first one that differs from `avoid`. Runs on the shortest
// path DAG, so at most two paths are ever materialized.
inline bool next_shortest_path(const AdjGraph& g, const DistanceProfile& p, std::int64_t t,
                               const std::vector<std::int64_t>& avoid,
                               std::vector<std::int64_t>& out) {
    std::vector<std::int64_t> stack{p.source};
    bool found = false;
    std::function<void(std::int64_t)> walk = [&](std::int64_t u) {
        if (found) return;
        if (u == t) {
            if (stack != avoid) {
                out = stack;
                found = true;
            }
            return;
        }
        std::vector<std::int64_t> nexts;
        for (std::int64_t v : g.nb[static_cast<std::size_t>(u)])
            if (p.dist[static_cast<std::size_t>(v)] == p.dist[static_cast<std::size_t>(u)] + 1 &&
                p.dist[static_cast<std::size_t>(v)] <= p.dist[static_cast<std::size_t>(t)])
                nexts.push_back(v);
        std::sort(nexts.begin(), nexts.end());
        nexts.erase(std::unique(nexts.begin(), nexts.end()), nexts.end());
        for (std::int64_t v : nexts) {
            stack.push_back(v);
            walk(v);
            stack.pop_back();
            if (found) return;
        }
    };
    walk(p.source);
    return found;
}

}  // namespace detail

struct UspResult {
    bool ok = false;
    std::int64_t path_len = 0;
    std::int64_t dist = kUnreachable;
    BigInt count = 0;
    std::vector<std::int64_t> witness;  // on failure: a shortest path distinct from the input

    std::string reason() const {
        if (ok) return "unique shortest path";
        if (dist != path_len) return "path longer than true distance";
        return "shortest path not unique";
    }
};

// Pass iff dist(s, t) equals the path's length and the multiplicity is 1.
inline UspResult check_usp(const AdjGraph& g, const std::vector<std::int64_t>& path) {
    if (path.size() < 2) throw std::invalid_argument("check_usp: path needs >= 2 nodes");
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        const auto& nbrs = g.nb[static_cast<std::size_t>(path[i])];
        if (std::find(nbrs.begin(), nbrs.end(), path[i + 1]) == nbrs.end())
            throw std::invalid_argument("check_usp: consecutive path nodes are not adjacent");
    }
    UspResult res;
    res.path_len = static_cast<std::int64_t>(path.size()) - 1;
    const DistanceProfile p = bfs_profile(g, path.front());
    const std::int64_t t = path.back();
    res.dist = p.dist[static_cast<std::size_t>(t)];
    res.count = p.count[static_cast<std::size_t>(t)];
    res.ok = res.dist == res.path_len && res.count == 1;
    if (!res.ok) detail::next_shortest_path(g, p, t, path, res.witness);
    return res;
}

// Pairwise critical-path intersection check: any two distinct paths may share
// at most `node_limit` nodes, and when they share exactly two, those two nodes
// must be consecutive on both paths (a shared edge).
struct IntersectionReport {
    struct Violation {
        std::size_t path_a = 0;
        std::size_t path_b = 0;
        std::vector<std::int64_t> shared_nodes;
        bool adjacency_failed = false;
    };
    std::int64_t pairs_checked = 0;
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
};

inline IntersectionReport check_pairwise_intersections(
    const std::vector<std::vector<std::int64_t>>& paths, std::int64_t node_limit = 2) {
    IntersectionReport report;
    // Only pairs that share at least one node need a full comparison.
    std::unordered_map<std::int64_t, std::vector<std::uint32_t>> at_node;
    for (std::size_t i = 0; i < paths.size(); ++i)
        for (std::int64_t v : paths[i]) at_node[v].push_back(static_cast<std::uint32_t>(i));
    std::set<std::pair<std::uint32_t, std::uint32_t>> candidates;
    for (auto& [node, ids] : at_node) {
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        for (std::size_t i = 0; i < ids.size(); ++i)
            for (std::size_t j = i + 1; j < ids.size(); ++j) candidates.insert({ids[i], ids[j]});
    }

    auto position_index = [](const std::vector<std::int64_t>& path) {
        std::unordered_map<std::int64_t, std::size_t> pos;
        for (std::size_t i = 0; i < path.size(); ++i) pos[path[i]] = i;
        return pos;
    };

    for (const auto& [ia, ib] : candidates) {
        const auto& pa = paths[ia];
        const auto& pb = paths[ib];
        const auto pos_b = position_index(pb);
        std::vector<std::int64_t> shared;
        for (std::int64_t v : pa)
            if (pos_b.count(v)) shared.push_back(v);
        ++report.pairs_checked;
        if (static_cast<std::int64_t>(shared.size()) > node_limit) {
            report.violations.push_back({ia, ib, shared, false});
            continue;
        }
        if (shared.size() == 2) {
            const auto pos_a = position_index(pa);
            const auto adjacent_on = [&](const std::unordered_map<std::int64_t, std::size_t>& pos) {
                const std::size_t x = pos.at(shared[0]);
                const std::size_t y = pos.at(shared[1]);
                return (x > y ? x - y : y - x) == 1;
            };
            if (!adjacent_on(pos_a) || !adjacent_on(pos_b))
                report.violations.push_back({ia, ib, shared, true});
        }
    }
    return report;
}

// Every listed clique edge may appear in at most one path's list.
struct DisjointnessReport {
    struct Duplicate {
        std::int64_t edge_id = 0;
        std::vector<std::size_t> paths;
    };
    std::vector<Duplicate> duplicates;

    bool ok() const { return duplicates.empty(); }
};

inline DisjointnessReport check_clique_edge_disjoint(
    const std::vector<std::vector<std::int64_t>>& clique_edges_per_path) {
    DisjointnessReport report;
    std::unordered_map<std::int64_t, std::vector<std::size_t>> owners;
    for (std::size_t i = 0; i < clique_edges_per_path.size(); ++i)
        for (std::int64_t e : clique_edges_per_path[i]) owners[e].push_back(i);
    for (auto& [edge, paths] : owners)
        if (paths.size() > 1) report.duplicates.push_back({edge, paths});
    std::sort(report.duplicates.begin(), report.duplicates.end(),
              [](const auto& a, const auto& b) { return a.edge_id < b.edge_id; });
    return report;
}

// Every edge id in [0, num_edges) must be covered by at least one path.
struct CoverageReport {
    std::int64_t num_edges = 0;
    std::vector<std::int64_t> uncovered;

    bool ok() const { return uncovered.empty(); }
};

inline CoverageReport check_edge_coverage(std::int64_t num_edges,
                                          const std::vector<std::vector<std::int64_t>>& edges_per_path) {
    CoverageReport report;
    report.num_edges = num_edges;
    std::vector<char> seen(static_cast<std::size_t>(num_edges), 0);
    for (const auto& list : edges_per_path)
        for (std::int64_t e : list) seen[static_cast<std::size_t>(e)] = 1;
    for (std::int64_t e = 0; e < num_edges; ++e)
        if (!seen[static_cast<std::size_t>(e)]) report.uncovered.push_back(e);
    return report;
}

}  // namespace spanlab
