#pragma once

/// \file miscount.hpp
/// \brief Exact counting and enumeration of maximal independent sets.
///
/// Three independent routes are provided:
///  - `mis_count_bruteforce`: scan every subset (the oracle),
///  - `for_each_mis` / `mis_enumerate`: pivoted Bron-Kerbosch on the complement,
///  - `mis_count`: structural recursion (leaf/support reduction, component
///    products, the cycle recurrence), falling back to enumeration.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "bounds.hpp"
#include "canonical.hpp"
#include "graph.hpp"
#include "vertex_set.hpp"

namespace misbound {

using VertexSet = std::vector<int>;

inline constexpr int bruteforce_order_limit = 25;
inline constexpr int forest_memo_order_limit = 16;

inline bool is_independent(const Graph& g, const VertexSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (g.adjacent(s[i], s[j])) return false;
        }
    }
    return true;
}

/// Independent, and every vertex outside the set has a neighbor inside it.
inline bool is_maximal_independent(const Graph& g, const VertexSet& s) {
    if (!is_independent(g, s)) return false;
    std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
    for (int v : s) in[v] = 1;
    for (int v = 0; v < g.order(); ++v) {
        if (in[v]) continue;
        bool dominated = false;
        for (int w : g.neighbors(v)) dominated = dominated || in[w];
        if (!dominated) return false;
    }
    return true;
}

// ---- brute force ------------------------------------------------------------

/// Counts maximal independent sets by checking all 2^n subsets.
inline BigCount mis_count_bruteforce(const Graph& g, int guard = bruteforce_order_limit) {
    const int n = g.order();
    if (n > guard) {
        throw std::out_of_range("brute-force counting is limited to order " + std::to_string(guard) + ", got " +
                                std::to_string(n));
    }
    auto adj = g.masks();
    const std::uint64_t all = n == 0 ? 0 : (std::uint64_t{1} << n) - 1;
    std::uint64_t count = 0;
    for (std::uint64_t s = 0;; ++s) {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            const bool in = (s >> v) & 1U;
            if (in) {
                ok = (adj[v] & s) == 0;
            } else {
                ok = (adj[v] & s) != 0;
            }
        }
        if (ok) ++count;
        if (s == all) break;
    }
    return count;
}

/// Largest maximal-set cardinality seen by the subset scan.
inline int independence_number_bruteforce(const Graph& g, int guard = bruteforce_order_limit) {
    const int n = g.order();
    if (n > guard) throw std::out_of_range("brute-force independence number is limited to order " + std::to_string(guard));
    auto adj = g.masks();
    const std::uint64_t all = n == 0 ? 0 : (std::uint64_t{1} << n) - 1;
    int best = 0;
    for (std::uint64_t s = 0;; ++s) {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            if ((s >> v) & 1U) ok = (adj[v] & s) == 0;
        }
        if (ok) best = std::max(best, std::popcount(s));
        if (s == all) break;
    }
    return best;
}

// ---- enumeration ------------------------------------------------------------

namespace detail {

// Maximal independent sets of G are the maximal cliques of its complement.
// Candidates compatible with v are P \ N[v]; the pivot u maximizes that set,
// and only vertices of N[u] ∩ P are branched on (every maximal set meets N[u]).
template <class Set, class Visit>
void bron_kerbosch_complement(const std::vector<Set>& closed, Set& chosen, Set candidates, Set excluded,
                              Visit& visit) {
    if (candidates.none()) {
        if (excluded.none()) visit(chosen);
        return;
    }
    int pivot = -1;
    int pivot_score = -1;
    auto consider = [&](int u) {
        int score = (candidates - closed[u]).count();
        if (score > pivot_score) {
            pivot_score = score;
            pivot = u;
        }
    };
    candidates.for_each(consider);
    excluded.for_each(consider);

    Set branch = candidates & closed[pivot];
    branch.for_each([&](int v) {
        chosen.insert(v);
        bron_kerbosch_complement(closed, chosen, candidates - closed[v], excluded - closed[v], visit);
        chosen.erase(v);
        candidates.erase(v);
        excluded.insert(v);
    });
}

template <class Set, class Visit>
void for_each_mis_impl(const Graph& g, Visit&& visit) {
    const int n = g.order();
    std::vector<Set> closed(static_cast<std::size_t>(n), Set::empty(n));
    for (int v = 0; v < n; ++v) {
        closed[v].insert(v);
        for (int w : g.neighbors(v)) closed[v].insert(w);
    }
    Set chosen = Set::empty(n);
    bron_kerbosch_complement(closed, chosen, Set::full(n), Set::empty(n), visit);
}

}  // namespace detail

/// Calls `visit(const VertexSet&)` once per maximal independent set, in search order.
template <class Visit>
void for_each_mis(const Graph& g, Visit&& visit) {
    if (g.order() <= word_set_capacity) {
        detail::for_each_mis_impl<WordSet>(g, [&](const WordSet& s) { visit(members(s)); });
    } else {
        detail::for_each_mis_impl<WideSet>(g, [&](const WideSet& s) { visit(members(s)); });
    }
}

/// Number of maximal independent sets found by the enumerator.
inline BigCount mis_count_enumerated(const Graph& g) {
    std::uint64_t count = 0;
    if (g.order() <= word_set_capacity) {
        detail::for_each_mis_impl<WordSet>(g, [&](const WordSet&) { ++count; });
    } else {
        detail::for_each_mis_impl<WideSet>(g, [&](const WideSet&) { ++count; });
    }
    return count;
}

/// All maximal independent sets, each a sorted member list, in lexicographic order.
inline std::vector<VertexSet> mis_enumerate(const Graph& g) {
    std::vector<VertexSet> out;
    for_each_mis(g, [&](const VertexSet& s) { out.push_back(s); });
    std::sort(out.begin(), out.end());
    return out;
}

// ---- structural fast paths --------------------------------------------------

/// mis(C_n): 3, 2, 5 for n = 3, 4, 5 and mis(C_{n-2}) + mis(C_{n-3}) beyond.
inline BigCount mis_count_cycle(int n) {
    if (n < 3) throw std::domain_error("a cycle needs at least 3 vertices, got " + std::to_string(n));
    std::vector<BigCount> c{0, 0, 0, 3, 2, 5};
    for (int k = 6; k <= n; ++k) c.push_back(c[k - 2] + c[k - 3]);
    return c[n];
}

namespace detail {

using ForestMemo = std::unordered_map<std::string, BigCount>;

inline ForestMemo& forest_memo() {
    thread_local ForestMemo memo;
    if (memo.size() > (std::size_t{1} << 20)) memo.clear();
    return memo;
}

inline std::vector<int> reduction_deletions(const SupportReduction& r, bool include_neighbors, const Graph& g) {
    std::vector<int> out;
    if (include_neighbors) {
        out = closed_neighborhood(g, r.support);
    } else {
        out = r.leaves;
        out.push_back(r.support);
    }
    return out;
}

inline BigCount forest_count(const Graph& g);

inline BigCount tree_count(const Graph& t) {
    const int n = t.order();
    if (n <= 1) return 1;
    if (n == 2) return 2;
    std::string key;
    if (n <= forest_memo_order_limit) {
        key = canonical_form(t, forest_memo_order_limit);
        auto& memo = forest_memo();
        if (auto it = memo.find(key); it != memo.end()) return it->second;
    }
    auto r = find_support_reduction(t);
    BigCount result = forest_count(delete_vertices(t, reduction_deletions(*r, false, t))) +
                      forest_count(delete_vertices(t, reduction_deletions(*r, true, t)));
    if (!key.empty()) forest_memo().emplace(std::move(key), result);
    return result;
}

inline BigCount forest_count(const Graph& g) {
    if (g.order() == 0) return 1;
    if (is_connected(g)) return tree_count(g);
    BigCount product = 1;
    for (const auto& c : components(g)) product *= tree_count(c.graph);
    return product;
}

}  // namespace detail

/// mis(F) for a forest: product over components of the support-vertex recursion
/// mis(T) = mis(T - Q - y) + mis(T - N[y]).
inline BigCount mis_count_forest(const Graph& g) {
    if (!is_forest(g)) throw std::invalid_argument("mis_count_forest: input is not a forest");
    return detail::forest_count(g);
}

inline BigCount mis_count(const Graph& g);

namespace detail {

inline BigCount connected_count(const Graph& g) {
    auto cls = classify(g);
    switch (cls.kind) {
        case GraphKind::tree:
        case GraphKind::forest:
            return tree_count(g);
        case GraphKind::unicyclic: {
            if (static_cast<int>(cls.cycle.size()) == g.order()) return mis_count_cycle(g.order());
            auto r = find_support_reduction(g);
            return mis_count(delete_vertices(g, reduction_deletions(*r, false, g))) +
                   mis_count(delete_vertices(g, reduction_deletions(*r, true, g)));
        }
        case GraphKind::other:
            break;
    }
    return mis_count_enumerated(g);
}

}  // namespace detail

/// mis(G), dispatching per component to the cheapest exact method.
inline BigCount mis_count(const Graph& g) {
    if (g.order() == 0) return 1;
    if (is_connected(g)) return detail::connected_count(g);
    BigCount product = 1;
    for (const auto& c : components(g)) product *= detail::connected_count(c.graph);
    return product;
}

// ---- independence number ----------------------------------------------------

namespace detail {

inline int forest_independence_number(const Graph& g) {
    const int n = g.order();
    std::vector<int> with(static_cast<std::size_t>(n), 1), without(static_cast<std::size_t>(n), 0);
    std::vector<int> parent(static_cast<std::size_t>(n), -1), order;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    order.reserve(static_cast<std::size_t>(n));
    int total = 0;
    for (int root = 0; root < n; ++root) {
        if (seen[root]) continue;
        order.clear();
        std::vector<int> stack{root};
        seen[root] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            order.push_back(u);
            for (int w : g.neighbors(u)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    parent[w] = u;
                    stack.push_back(w);
                }
            }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            int u = *it;
            if (int p = parent[u]; p >= 0) {
                with[p] += without[u];
                without[p] += std::max(with[u], without[u]);
            }
        }
        total += std::max(with[root], without[root]);
    }
    return total;
}

}  // namespace detail

/// alpha(G): rooted include/exclude recursion on forests, otherwise the largest
/// maximal independent set produced by the enumerator.
inline int independence_number(const Graph& g) {
    if (is_forest(g)) return detail::forest_independence_number(g);
    int best = 0;
    for_each_mis(g, [&](const VertexSet& s) { best = std::max(best, static_cast<int>(s.size())); });
    return best;
}

}  // namespace misbound
