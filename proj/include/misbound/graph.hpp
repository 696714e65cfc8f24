#pragma once

/// \file graph.hpp
/// \brief Simple undirected graphs of small order and the structural queries the
/// counting and certification code is built on.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vertex_set.hpp"

namespace misbound {

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph on vertices 0..order-1.
///
/// Adjacency lists are kept sorted. For order <= 64 a word mask per vertex is
/// stored alongside, which is what the hot paths (enumeration, canonical
/// labeling, brute force) operate on.
class Graph {
public:
    Graph() = default;

    int order() const { return static_cast<int>(adj_.size()); }
    std::size_t edge_count() const { return edge_count_; }
    bool empty() const { return adj_.empty(); }

    std::span<const int> neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    bool adjacent(int u, int v) const {
        if (!masks_.empty()) return (masks_[u] >> v) & 1U;
        return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
    }

    /// Word masks of the open neighborhoods; empty when order > 64.
    std::span<const std::uint64_t> masks() const { return masks_; }
    bool has_masks() const { return adj_.empty() || !masks_.empty(); }

    /// All edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(edge_count_);
        for (int u = 0; u < order(); ++u) {
            for (int v : adj_[u]) {
                if (u < v) out.emplace_back(u, v);
            }
        }
        return out;
    }

    bool operator==(const Graph& o) const { return adj_ == o.adj_; }

    friend Graph make_graph(int order, std::span<const Edge> edges);

private:
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint64_t> masks_;
    std::size_t edge_count_ = 0;
};

/// Builds a graph from an edge list. Duplicate edges collapse; self-loops and
/// out-of-range endpoints are rejected.
inline Graph make_graph(int order, std::span<const Edge> edges) {
    if (order < 0) throw std::invalid_argument("graph order must be non-negative");
    Graph g;
    g.adj_.assign(static_cast<std::size_t>(order), {});
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= order || v >= order) {
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") has an endpoint outside [0," + std::to_string(order) + ")");
        }
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& list : g.adj_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        g.edge_count_ += list.size();
    }
    g.edge_count_ /= 2;
    if (order <= word_set_capacity) {
        g.masks_.assign(static_cast<std::size_t>(order), 0);
        for (int u = 0; u < order; ++u) {
            for (int v : g.adj_[u]) g.masks_[u] |= std::uint64_t{1} << v;
        }
    }
    return g;
}

inline Graph make_graph(int order, std::initializer_list<Edge> edges) {
    return make_graph(order, std::span<const Edge>(edges.begin(), edges.size()));
}

inline Graph make_graph(int order, const std::vector<Edge>& edges) {
    return make_graph(order, std::span<const Edge>(edges));
}

inline Graph edgeless_graph(int order) { return make_graph(order, std::vector<Edge>{}); }

/// Applies `label[v]` as the new index of vertex v. `label` must be a permutation.
inline Graph relabel(const Graph& g, std::span<const int> label) {
    std::vector<Edge> out;
    out.reserve(g.edge_count());
    for (auto [u, v] : g.edges()) out.emplace_back(label[u], label[v]);
    return make_graph(g.order(), out);
}

/// Disjoint union; vertices of `b` are shifted by `a.order()`.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
    auto edges = a.edges();
    for (auto [u, v] : b.edges()) edges.emplace_back(u + a.order(), v + a.order());
    return make_graph(a.order() + b.order(), edges);
}

/// Induced subgraph on `keep` (ascending), relabeled 0..|keep|-1 in that order.
inline Graph induced_subgraph(const Graph& g, std::span<const int> keep) {
    std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<int>(i);
    std::vector<Edge> out;
    for (int u : keep) {
        for (int v : g.neighbors(u)) {
            if (index[v] >= 0 && u < v) out.emplace_back(index[u], index[v]);
        }
    }
    return make_graph(static_cast<int>(keep.size()), out);
}

/// G - S with order-preserving compaction of the surviving vertices.
inline Graph delete_vertices(const Graph& g, std::span<const int> removed) {
    std::vector<char> gone(static_cast<std::size_t>(g.order()), 0);
    for (int v : removed) {
        if (v < 0 || v >= g.order()) throw std::invalid_argument("vertex out of range in deletion set");
        gone[v] = 1;
    }
    std::vector<int> keep;
    for (int v = 0; v < g.order(); ++v) {
        if (!gone[v]) keep.push_back(v);
    }
    return induced_subgraph(g, keep);
}

inline Graph delete_vertices(const Graph& g, std::initializer_list<int> removed) {
    return delete_vertices(g, std::span<const int>(removed.begin(), removed.size()));
}

/// Closed neighborhood N[v], ascending.
inline std::vector<int> closed_neighborhood(const Graph& g, int v) {
    std::vector<int> out(g.neighbors(v).begin(), g.neighbors(v).end());
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
}

/// Component index for every vertex; components are numbered by smallest member.
inline std::vector<int> component_labels(const Graph& g, int* count = nullptr) {
    std::vector<int> label(static_cast<std::size_t>(g.order()), -1);
    int next = 0;
    std::vector<int> stack;
    for (int s = 0; s < g.order(); ++s) {
        if (label[s] >= 0) continue;
        label[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : g.neighbors(u)) {
                if (label[v] < 0) {
                    label[v] = next;
                    stack.push_back(v);
                }
            }
        }
        ++next;
    }
    if (count) *count = next;
    return label;
}

struct Component {
    Graph graph;
    /// to_parent[i] is the parent index of component vertex i.
    std::vector<int> to_parent;
};

/// Connected components in order of their smallest vertex.
inline std::vector<Component> components(const Graph& g) {
    int count = 0;
    auto label = component_labels(g, &count);
    std::vector<std::vector<int>> members(static_cast<std::size_t>(count));
    for (int v = 0; v < g.order(); ++v) members[label[v]].push_back(v);
    std::vector<Component> out;
    out.reserve(members.size());
    for (auto& m : members) {
        Graph sub = induced_subgraph(g, m);
        out.push_back(Component{std::move(sub), std::move(m)});
    }
    return out;
}

inline bool is_connected(const Graph& g) {
    int count = 0;
    component_labels(g, &count);
    return count == 1;
}

enum class GraphKind { tree, forest, unicyclic, other };
enum class CycleParity { none, even, odd };

inline const char* to_string(GraphKind k) {
    switch (k) {
        case GraphKind::tree: return "tree";
        case GraphKind::forest: return "forest";
        case GraphKind::unicyclic: return "unicyclic";
        case GraphKind::other: return "other";
    }
    return "other";
}

inline const char* to_string(CycleParity p) {
    switch (p) {
        case CycleParity::even: return "even";
        case CycleParity::odd: return "odd";
        case CycleParity::none: return "none";
    }
    return "none";
}

struct Classification {
    GraphKind kind = GraphKind::forest;
    /// The unique cycle as a closed walk (last vertex adjacent to first); empty
    /// unless kind is unicyclic.
    std::vector<int> cycle;
    CycleParity cycle_parity = CycleParity::none;
    int component_count = 0;
};

/// Vertices left after repeatedly stripping degree <= 1 vertices (the 2-core).
inline std::vector<int> two_core(const Graph& g) {
    std::vector<int> deg(static_cast<std::size_t>(g.order()));
    std::vector<char> removed(static_cast<std::size_t>(g.order()), 0);
    std::vector<int> queue;
    for (int v = 0; v < g.order(); ++v) {
        deg[v] = g.degree(v);
        if (deg[v] <= 1) queue.push_back(v);
    }
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        if (removed[v]) continue;
        removed[v] = 1;
        for (int w : g.neighbors(v)) {
            if (!removed[w] && --deg[w] <= 1) queue.push_back(w);
        }
    }
    std::vector<int> core;
    for (int v = 0; v < g.order(); ++v) {
        if (!removed[v]) core.push_back(v);
    }
    return core;
}

inline Classification classify(const Graph& g) {
    Classification c;
    component_labels(g, &c.component_count);
    const auto n = static_cast<std::size_t>(g.order());
    const auto m = g.edge_count();
    if (n == 0) return c;
    const bool connected = c.component_count == 1;
    if (connected && m + 1 == n) {
        c.kind = GraphKind::tree;
    } else if (connected && m == n) {
        c.kind = GraphKind::unicyclic;
        auto core = two_core(g);
        std::vector<char> on_core(n, 0);
        for (int v : core) on_core[v] = 1;
        // Walk the core starting at its smallest vertex toward its smaller core neighbor.
        int prev = -1;
        int cur = core.front();
        do {
            c.cycle.push_back(cur);
            int next = -1;
            for (int w : g.neighbors(cur)) {
                if (on_core[w] && w != prev) {
                    next = w;
                    break;
                }
            }
            prev = cur;
            cur = next;
        } while (cur != core.front());
        c.cycle_parity = c.cycle.size() % 2 == 0 ? CycleParity::even : CycleParity::odd;
    } else if (m + static_cast<std::size_t>(c.component_count) == n) {
        c.kind = GraphKind::forest;
    } else {
        c.kind = GraphKind::other;
    }
    return c;
}

inline bool is_forest(const Graph& g) {
    auto k = classify(g).kind;
    return k == GraphKind::tree || k == GraphKind::forest;
}

/// Breadth-first distance from every vertex to the nearest vertex of `sources`;
/// -1 for vertices that cannot reach any source.
inline std::vector<int> distance_to_set(const Graph& g, std::span<const int> sources) {
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    std::queue<int> q;
    for (int s : sources) {
        dist[s] = 0;
        q.push(s);
    }
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.neighbors(u)) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
        }
    }
    return dist;
}

/// A vertex y next to at least one leaf, together with all of its leaf neighbors.
struct SupportReduction {
    int support = -1;
    std::vector<int> leaves;
    int leaf_count() const { return static_cast<int>(leaves.size()); }
};

/// Picks a support vertex and its leaf set, or nothing when no vertex has degree 1.
///
/// A single-edge component has no degree-2 vertex; its higher-indexed endpoint
/// acts as the support. In a unicyclic graph the support farthest from the
/// cycle is chosen, otherwise the lowest-indexed one.
inline std::optional<SupportReduction> find_support_reduction(const Graph& g) {
    const int n = g.order();
    auto is_leaf = [&](int v) { return g.degree(v) == 1; };
    std::vector<int> candidates;
    for (int y = 0; y < n; ++y) {
        bool has_leaf = false;
        if (g.degree(y) >= 2) {
            for (int w : g.neighbors(y)) has_leaf = has_leaf || is_leaf(w);
        } else if (g.degree(y) == 1) {
            int w = g.neighbors(y)[0];
            has_leaf = is_leaf(w) && w < y;
        }
        if (has_leaf) candidates.push_back(y);
    }
    if (candidates.empty()) return std::nullopt;

    int chosen = candidates.front();
    auto cls = classify(g);
    if (cls.kind == GraphKind::unicyclic) {
        auto dist = distance_to_set(g, cls.cycle);
        for (int y : candidates) {
            if (dist[y] > dist[chosen]) chosen = y;
        }
    }
    SupportReduction r;
    r.support = chosen;
    for (int w : g.neighbors(chosen)) {
        if (is_leaf(w)) r.leaves.push_back(w);
    }
    return r;
}

}  // namespace misbound
