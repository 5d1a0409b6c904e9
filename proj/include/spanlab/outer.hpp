#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "spanlab/convex.hpp"
#include "spanlab/vec3.hpp"
#include "spanlab/verify.hpp"

namespace spanlab {

// Unlayered alternation-product outer graph G_O(a, r) over two grid copies
// [a] x [a] x [ar], plus its striped variant G_O(a, r, c). Edges run between
// the L and R copies along the family vectors; critical paths alternate a
// fixed (w1, w2) pair from a start zone until they leave the grid.

enum class Side : std::uint8_t { L = 0, R = 1 };

struct OuterEdge {
    std::int64_t l_node = 0;  // node id on the L side
    std::int64_t r_node = 0;  // node id on the R side
    Vec3 vec;                 // generating vector
    bool from_w1 = true;      // true: oriented L->R by a W1 step, false: R->L by W2
};

struct OuterPath {
    Vec3 start;          // start point s (an L-side grid point in the start zone)
    Vec3 w1;
    Vec3 w2;
    std::int64_t stripe = 0;  // stripe index chi in striped mode, 0 otherwise
    std::int64_t len = 0;     // edge count (= 2i)
};

struct OuterStats {
    std::int64_t v_pre = 0;        // 2 a^3 r, both grids, before pruning
    std::int64_t e_pre = 0;        // edges before pruning
    std::int64_t e_post = 0;       // edges on >= 1 critical path
    std::int64_t num_paths = 0;
    std::int64_t isolated_nodes = 0;  // grid nodes incident to no surviving edge
    std::int64_t max_edge_multiplicity = 0;
    std::map<std::int64_t, std::int64_t> multiplicity_histogram;  // multiplicity -> #edges
};

struct OuterGraph {
    std::int64_t a = 0;
    std::int64_t r = 0;
    std::optional<std::int64_t> c;
    VectorFamily family;
    std::int64_t start_zone_height = 0;  // max(1, floor(r^2 / 8))

    std::vector<OuterEdge> edges;         // post-pruning, sorted by (l_node, r_node)
    std::vector<OuterPath> paths;
    std::vector<std::int64_t> edge_multiplicity;  // parallel to edges

    // Compact view for BFS: only nodes incident to surviving edges.
    std::vector<std::int64_t> active_nodes;           // sorted original ids
    std::unordered_map<std::int64_t, std::int64_t> node_index;  // original id -> compact
    AdjGraph adj;

    std::int64_t grid_span() const { return a * a * (a * r); }

    bool in_grid(Vec3 v) const {
        return 1 <= v.x && v.x <= a && 1 <= v.y && v.y <= a && 1 <= v.z && v.z <= a * r;
    }

    bool in_start_zone(Vec3 v) const {
        return 1 <= v.x && v.x <= a && 1 <= v.y && v.y <= a && 1 <= v.z &&
               v.z <= start_zone_height;
    }

    std::int64_t node_id(Side side, Vec3 v) const {
        const std::int64_t base = side == Side::R ? grid_span() : 0;
        return base + ((v.x - 1) * a + (v.y - 1)) * (a * r) + (v.z - 1);
    }

    Side node_side(std::int64_t id) const { return id < grid_span() ? Side::L : Side::R; }

    Vec3 node_coord(std::int64_t id) const {
        std::int64_t rest = id % grid_span();
        const std::int64_t z = rest % (a * r);
        rest /= a * r;
        return {rest / a + 1, rest % a + 1, z + 1};
    }

    // Node id sequence of a critical path: s_L, (s+w1)_R, (s+w1+w2)_L, ...
    std::vector<std::int64_t> path_nodes(const OuterPath& p) const {
        std::vector<std::int64_t> out;
        out.reserve(static_cast<std::size_t>(p.len) + 1);
        Vec3 cur = p.start;
        out.push_back(node_id(Side::L, cur));
        for (std::int64_t step = 0; step < p.len; ++step) {
            const bool w1_step = step % 2 == 0;
            cur = cur + (w1_step ? p.w1 : p.w2);
            out.push_back(node_id(w1_step ? Side::R : Side::L, cur));
        }
        return out;
    }

    // Edge ids (indices into `edges`) along a critical path, in order.
    std::vector<std::int64_t> path_edges(const OuterPath& p) const {
        std::vector<std::int64_t> out;
        out.reserve(static_cast<std::size_t>(p.len));
        Vec3 cur = p.start;
        for (std::int64_t step = 0; step < p.len; ++step) {
            const bool w1_step = step % 2 == 0;
            const Vec3 next = cur + (w1_step ? p.w1 : p.w2);
            const std::int64_t l = node_id(Side::L, w1_step ? cur : next);
            const std::int64_t rr = node_id(Side::R, w1_step ? next : cur);
            out.push_back(edge_index.at((l << 1) ^ rr));
            cur = next;
        }
        return out;
    }

    std::unordered_map<std::int64_t, std::int64_t> edge_index;  // key(l, r) -> edge idx

    static std::int64_t edge_key(std::int64_t l, std::int64_t r) { return (l << 1) ^ r; }

    OuterStats stats;
};

namespace detail {

inline void build_paths_and_prune(OuterGraph& g) {
    // Enumerate generating triples in lexicographic order: start zone point,
    // then w1, then w2 (striped mode: same-stripe pairs only).
    struct PendingEdge {
        std::int64_t l, r;
        Vec3 vec;
        bool from_w1;
    };
    std::map<std::pair<std::int64_t, std::int64_t>, std::pair<Vec3, bool>> used_edges;
    std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> multiplicity;

    const std::int64_t threshold = (g.a + 4 * g.r - 1) / (4 * g.r);  // ceil(a / 4r)

    for (std::int64_t sx = 1; sx <= g.a; ++sx)
        for (std::int64_t sy = 1; sy <= g.a; ++sy)
            for (std::int64_t sz = 1; sz <= g.start_zone_height; ++sz) {
                const Vec3 s{sx, sy, sz};
                for (const Vec3& w1 : g.family.w1)
                    for (const Vec3& w2 : g.family.w2) {
                        if (g.family.striped() &&
                            g.family.stripe_of.at(w1) != g.family.stripe_of.at(w2))
                            continue;
                        if (g.in_start_zone(s + w1)) continue;
                        // Extend maximally: largest i with s + i(w1 + w2) in the grid.
                        std::int64_t i = 0;
                        while (g.in_grid(s + (i + 1) * (w1 + w2))) ++i;
                        const std::int64_t len = 2 * i;
                        if (len < threshold || len == 0) continue;
                        OuterPath p;
                        p.start = s;
                        p.w1 = w1;
                        p.w2 = w2;
                        p.stripe = g.family.striped() ? g.family.stripe_of.at(w1) : 0;
                        p.len = len;
                        g.paths.push_back(p);
                        Vec3 cur = s;
                        for (std::int64_t step = 0; step < len; ++step) {
                            const bool w1_step = step % 2 == 0;
                            const Vec3 next = cur + (w1_step ? w1 : w2);
                            const std::int64_t l = g.node_id(Side::L, w1_step ? cur : next);
                            const std::int64_t rr = g.node_id(Side::R, w1_step ? next : cur);
                            used_edges[{l, rr}] = {w1_step ? w1 : w2, w1_step};
                            ++multiplicity[{l, rr}];
                            cur = next;
                        }
                    }
            }

    if (g.paths.empty()) {
        std::ostringstream msg;
        msg << "outer graph (a=" << g.a << ", r=" << g.r << ") has no critical paths;"
            << " increase a or shrink r";
        throw std::invalid_argument(msg.str());
    }

    g.edges.reserve(used_edges.size());
    for (const auto& [key, val] : used_edges) {
        g.edges.push_back({key.first, key.second, val.first, val.second});
        g.edge_multiplicity.push_back(multiplicity.at(key));
        g.edge_index[OuterGraph::edge_key(key.first, key.second)] =
            static_cast<std::int64_t>(g.edges.size()) - 1;
    }
}

inline void build_adjacency(OuterGraph& g) {
    for (const OuterEdge& e : g.edges) {
        g.active_nodes.push_back(e.l_node);
        g.active_nodes.push_back(e.r_node);
    }
    std::sort(g.active_nodes.begin(), g.active_nodes.end());
    g.active_nodes.erase(std::unique(g.active_nodes.begin(), g.active_nodes.end()),
                         g.active_nodes.end());
    for (std::size_t i = 0; i < g.active_nodes.size(); ++i)
        g.node_index[g.active_nodes[i]] = static_cast<std::int64_t>(i);
    g.adj = AdjGraph(static_cast<std::int64_t>(g.active_nodes.size()));
    for (const OuterEdge& e : g.edges)
        g.adj.add_edge(g.node_index.at(e.l_node), g.node_index.at(e.r_node));
}

inline void fill_stats(OuterGraph& g) {
    OuterStats& st = g.stats;
    st.v_pre = 2 * g.a * g.a * g.a * g.r;
    st.e_pre = 0;
    for (const Vec3& w : g.family.w1)
        st.e_pre += std::max<std::int64_t>(0, g.a - w.x) * g.a *
                    std::max<std::int64_t>(0, g.a * g.r - w.z);
    for (const Vec3& w : g.family.w2)
        st.e_pre += g.a * std::max<std::int64_t>(0, g.a - w.y) *
                    std::max<std::int64_t>(0, g.a * g.r - w.z);
    st.e_post = static_cast<std::int64_t>(g.edges.size());
    st.num_paths = static_cast<std::int64_t>(g.paths.size());
    st.isolated_nodes = st.v_pre - static_cast<std::int64_t>(g.active_nodes.size());
    for (std::int64_t m : g.edge_multiplicity) {
        ++st.multiplicity_histogram[m];
        st.max_edge_multiplicity = std::max(st.max_edge_multiplicity, m);
    }
}

inline OuterGraph build_from_family(std::int64_t a, std::int64_t r, VectorFamily family) {
    if (a < 1) throw std::invalid_argument("outer graph needs a >= 1");
    OuterGraph g;
    g.a = a;
    g.r = r;
    g.c = family.c;
    g.family = std::move(family);
    g.start_zone_height = std::max<std::int64_t>(1, r * r / 8);
    build_paths_and_prune(g);
    build_adjacency(g);
    fill_stats(g);
    return g;
}

}  // namespace detail

inline OuterGraph build_outer(std::int64_t a, std::int64_t r) {
    return detail::build_from_family(a, r, gen_w(r));
}

inline OuterGraph build_outer_striped(std::int64_t a, std::int64_t r, std::int64_t c,
                                      StripeProfile profile = {}) {
    return detail::build_from_family(a, r, gen_striped_families(r, c, profile));
}

inline const OuterStats& outer_stats(const OuterGraph& g) { return g.stats; }

// Compact (BFS-ready) node sequence of a critical path.
inline std::vector<std::int64_t> compact_path(const OuterGraph& g, const OuterPath& p) {
    std::vector<std::int64_t> nodes = g.path_nodes(p);
    for (std::int64_t& v : nodes) v = g.node_index.at(v);
    return nodes;
}

}  // namespace spanlab
