#pragma once

/// \file canonical.hpp
/// \brief Canonical labeling by colour refinement and individualisation search.
///
/// The search tree individualises vertices of the first non-singleton cell of an
/// isomorphism-invariant refinement. Leaves are compared by their relabeled
/// adjacency rows and the largest one wins. Two leaves with equal rows yield an
/// automorphism; children of a node that are related by a known automorphism
/// fixing the node's prefix are skipped. Transpositions of twin vertices are
/// seeded as automorphisms up front, which keeps graphs with large leaf bundles
/// (stars, caterpillars) cheap.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"
#include "graph6.hpp"

namespace misbound {

inline constexpr int default_isomorphism_limit = 20;

namespace detail {

class Canonizer {
public:
    explicit Canonizer(const Graph& g) : n_(g.order()), adj_(g.masks().begin(), g.masks().end()) {
        seed_twin_automorphisms();
    }

    /// label[v] = canonical position of v.
    std::vector<int> run() {
        if (n_ == 0) return {};
        std::vector<int> color(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) color[v] = std::popcount(adj_[v]);
        int k = normalize(color);
        std::vector<int> prefix;
        search(std::move(color), k, prefix);
        return best_label_;
    }

private:
    static int normalize(std::vector<int>& color) {
        std::vector<int> values = color;
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        for (int& c : color) c = static_cast<int>(std::lower_bound(values.begin(), values.end(), c) - values.begin());
        return static_cast<int>(values.size());
    }

    // Splits cells by the number of neighbours each vertex has in every cell
    // until stable. Cell order is derived only from signatures, so the result
    // commutes with relabeling.
    int refine(std::vector<int>& color, int k) const {
        std::vector<std::uint64_t> cell_mask;
        std::vector<int> sig;
        std::vector<int> order(static_cast<std::size_t>(n_));
        std::vector<int> next(static_cast<std::size_t>(n_));
        while (k < n_) {
            cell_mask.assign(static_cast<std::size_t>(k), 0);
            for (int v = 0; v < n_; ++v) cell_mask[color[v]] |= std::uint64_t{1} << v;
            const int width = k + 1;
            sig.assign(static_cast<std::size_t>(n_ * width), 0);
            for (int v = 0; v < n_; ++v) {
                int* row = &sig[static_cast<std::size_t>(v * width)];
                row[0] = color[v];
                for (int c = 0; c < k; ++c) row[c + 1] = std::popcount(adj_[v] & cell_mask[c]);
            }
            auto less = [&](int a, int b) {
                const int* ra = &sig[static_cast<std::size_t>(a * width)];
                const int* rb = &sig[static_cast<std::size_t>(b * width)];
                return std::lexicographical_compare(ra, ra + width, rb, rb + width);
            };
            std::iota(order.begin(), order.end(), 0);
            std::sort(order.begin(), order.end(), less);
            int fresh = 0;
            for (int i = 0; i < n_; ++i) {
                if (i > 0 && less(order[i - 1], order[i])) ++fresh;
                next[order[i]] = fresh;
            }
            ++fresh;
            if (fresh == k) break;
            color.swap(next);
            k = fresh;
        }
        return k;
    }

    void search(std::vector<int> color, int k, std::vector<int>& prefix) {
        k = refine(color, k);
        if (k == n_) {
            visit_leaf(color);
            return;
        }
        std::vector<int> size(static_cast<std::size_t>(k), 0);
        for (int c : color) ++size[c];
        int target = 0;
        while (size[target] == 1) ++target;

        std::vector<int> explored;
        for (int v = 0; v < n_; ++v) {
            if (color[v] != target) continue;
            if (!explored.empty() && equivalent_to_explored(v, explored, prefix)) continue;
            explored.push_back(v);
            std::vector<int> child(color);
            for (int u = 0; u < n_; ++u) {
                if (color[u] > target || (color[u] == target && u != v)) ++child[u];
            }
            prefix.push_back(v);
            search(std::move(child), k + 1, prefix);
            prefix.pop_back();
        }
    }

    void visit_leaf(const std::vector<int>& label) {
        std::vector<std::uint64_t> rows(static_cast<std::size_t>(n_), 0);
        for (int v = 0; v < n_; ++v) {
            std::uint64_t row = 0;
            for (std::uint64_t x = adj_[v]; x; x &= x - 1) row |= std::uint64_t{1} << label[std::countr_zero(x)];
            rows[label[v]] = row;
        }
        if (best_rows_.empty() || rows > best_rows_) {
            best_rows_ = std::move(rows);
            best_label_ = label;
            return;
        }
        if (rows == best_rows_) {
            std::vector<int> inverse(static_cast<std::size_t>(n_));
            for (int v = 0; v < n_; ++v) inverse[best_label_[v]] = v;
            std::vector<int> gamma(static_cast<std::size_t>(n_));
            for (int v = 0; v < n_; ++v) gamma[v] = inverse[label[v]];
            automorphisms_.push_back(std::move(gamma));
        }
    }

    bool equivalent_to_explored(int v, const std::vector<int>& explored, const std::vector<int>& prefix) const {
        std::vector<int> parent(static_cast<std::size_t>(n_));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& gamma : automorphisms_) {
            bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int p) { return gamma[p] == p; });
            if (!fixes) continue;
            for (int x = 0; x < n_; ++x) {
                int a = find(x), b = find(gamma[x]);
                if (a != b) parent[a] = b;
            }
        }
        int root = find(v);
        return std::any_of(explored.begin(), explored.end(), [&](int u) { return find(u) == root; });
    }

    void seed_twin_automorphisms() {
        for (int u = 0; u < n_; ++u) {
            for (int v = u + 1; v < n_; ++v) {
                std::uint64_t bu = std::uint64_t{1} << u, bv = std::uint64_t{1} << v;
                if ((adj_[u] & ~bv) == (adj_[v] & ~bu)) {
                    std::vector<int> t(static_cast<std::size_t>(n_));
                    std::iota(t.begin(), t.end(), 0);
                    std::swap(t[u], t[v]);
                    automorphisms_.push_back(std::move(t));
                    break;
                }
            }
        }
    }

    int n_;
    std::vector<std::uint64_t> adj_;
    std::vector<std::uint64_t> best_rows_;
    std::vector<int> best_label_;
    std::vector<std::vector<int>> automorphisms_;
};

}  // namespace detail

/// label[v] is the canonical index of vertex v; relabel(g, label) is the same
/// graph for every member of an isomorphism class.
inline std::vector<int> canonical_labeling(const Graph& g, int limit = default_isomorphism_limit) {
    if (limit > word_set_capacity) limit = word_set_capacity;
    if (g.order() > limit) {
        throw std::out_of_range("canonical form requested for order " + std::to_string(g.order()) +
                                " above the isomorphism limit " + std::to_string(limit));
    }
    return detail::Canonizer(g).run();
}

/// Canonical encoding: graph6 of the canonically relabeled graph. Equal for two
/// graphs exactly when they are isomorphic.
inline std::string canonical_form(const Graph& g, int limit = default_isomorphism_limit) {
    auto label = canonical_labeling(g, limit);
    return write_graph6(relabel(g, label));
}

inline bool isomorphic(const Graph& a, const Graph& b, int limit = default_isomorphism_limit) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a, limit) == canonical_form(b, limit);
}

}  // namespace misbound
