#pragma once

/// \file enumerate.hpp
/// \brief Isomorph-free generation of free trees, unicyclic graphs and forests.
///
/// Rooted trees are canonical level sequences (Beyer-Hedetniemi successor);
/// free trees come from the Wright-Richmond-Odlyzko-McKay successor on
/// center-rooted level sequences; unicyclic graphs are cycles decorated with
/// rooted trees, kept when the decoration sequence is the least under the
/// cycle's rotations and reflections; forests are non-increasing multisets of
/// free trees. All streams are pull-based and deterministic.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "graph.hpp"
#include "miscount.hpp"

namespace misbound {

struct GenerationLimits {
    int tree = 18;
    int unicyclic = 14;
    int forest = 16;

    int for_class(GraphClass c) const {
        switch (c) {
            case GraphClass::tree: return tree;
            case GraphClass::unicyclic: return unicyclic;
            case GraphClass::forest: return forest;
        }
        return tree;
    }
};

inline void check_generation_order(GraphClass cls, int n, bool unsafe_large = false,
                                   const GenerationLimits& limits = {}) {
    const int lo = cls == GraphClass::unicyclic ? 3 : 1;
    if (n < lo) {
        throw std::out_of_range(std::string(to_string(cls)) + " generation needs order >= " + std::to_string(lo));
    }
    if (!unsafe_large && n > limits.for_class(cls)) {
        throw std::out_of_range(std::string(to_string(cls)) + " generation is limited to order " +
                                std::to_string(limits.for_class(cls)) + " (override with unsafe_large)");
    }
}

// ---- level sequences ----------------------------------------------------------

/// Depths of a rooted tree's vertices in preorder, root first at depth 0.
using LevelSequence = std::vector<int>;

/// Successor in the canonical (lexicographically decreasing) order of rooted
/// level sequences; `p` overrides the position being advanced.
inline std::optional<LevelSequence> next_rooted_tree(const LevelSequence& seq, std::optional<std::size_t> p = {}) {
    std::size_t pos;
    if (p) {
        pos = *p;
    } else {
        pos = seq.size() - 1;
        while (pos > 0 && seq[pos] == 1) --pos;
    }
    if (pos == 0) return std::nullopt;
    std::size_t q = pos - 1;
    while (seq[q] != seq[pos] - 1) --q;
    LevelSequence out = seq;
    for (std::size_t i = pos; i < out.size(); ++i) out[i] = out[i - pos + q];
    return out;
}

/// Every rooted tree on `size` vertices, from the path down to the star.
inline std::vector<LevelSequence> rooted_trees(int size) {
    std::vector<LevelSequence> out;
    if (size < 1) return out;
    LevelSequence seq(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) seq[i] = i;
    std::optional<LevelSequence> cur = seq;
    while (cur) {
        out.push_back(*cur);
        cur = next_rooted_tree(*cur);
    }
    return out;
}

/// Appends the edges of a level sequence with vertex i mapped to `label[i]`.
inline void append_level_edges(const LevelSequence& levels, const std::vector<int>& label, std::vector<Edge>& edges) {
    std::vector<std::size_t> stack;
    for (std::size_t i = 0; i < levels.size(); ++i) {
        while (!stack.empty() && levels[stack.back()] >= levels[i]) stack.pop_back();
        if (!stack.empty()) edges.emplace_back(label[stack.back()], label[i]);
        stack.push_back(i);
    }
}

inline Graph tree_from_levels(const LevelSequence& levels) {
    std::vector<int> label(levels.size());
    for (std::size_t i = 0; i < levels.size(); ++i) label[i] = static_cast<int>(i);
    std::vector<Edge> edges;
    append_level_edges(levels, label, edges);
    return make_graph(static_cast<int>(levels.size()), edges);
}

namespace detail {

struct SplitTree {
    LevelSequence left;   // first principal subtree, depths shifted up by one
    LevelSequence rest;   // root together with the remaining subtrees
};

inline SplitTree split_tree(const LevelSequence& layout) {
    std::size_t m = layout.size();
    bool one_found = false;
    for (std::size_t i = 0; i < layout.size(); ++i) {
        if (layout[i] == 1) {
            if (one_found) {
                m = i;
                break;
            }
            one_found = true;
        }
    }
    SplitTree s;
    for (std::size_t i = 1; i < m; ++i) s.left.push_back(layout[i] - 1);
    s.rest.push_back(0);
    for (std::size_t i = m; i < layout.size(); ++i) s.rest.push_back(layout[i]);
    return s;
}

inline int height(const LevelSequence& s) { return s.empty() ? 0 : *std::max_element(s.begin(), s.end()); }

/// Advances a center-rooted candidate to the next valid free-tree layout.
inline std::optional<LevelSequence> next_free_tree(const LevelSequence& candidate) {
    auto [left, rest] = split_tree(candidate);
    const int left_height = height(left);
    const int rest_height = height(rest);
    bool valid = rest_height >= left_height;
    if (valid && rest_height == left_height) {
        if (left.size() > rest.size()) {
            valid = false;
        } else if (left.size() == rest.size() && left > rest) {
            valid = false;
        }
    }
    if (valid) return candidate;

    const std::size_t p = left.size();
    auto next = next_rooted_tree(candidate, p);
    if (!next) return std::nullopt;
    if (candidate[p] > 2) {
        const int new_left_height = height(split_tree(*next).left);
        const auto len = static_cast<std::size_t>(new_left_height + 1);
        for (std::size_t i = 0; i < len; ++i) (*next)[next->size() - len + i] = static_cast<int>(i) + 1;
    }
    return next;
}

}  // namespace detail

// ---- free trees ---------------------------------------------------------------

/// One tree per isomorphism class of free trees on n vertices.
class FreeTreeStream {
public:
    explicit FreeTreeStream(int n, bool unsafe_large = false) : n_(n) {
        check_generation_order(GraphClass::tree, n, unsafe_large);
        if (n >= 2) {
            // Path rooted at its center.
            LevelSequence layout;
            for (int i = 0; i <= n / 2; ++i) layout.push_back(i);
            for (int i = 1; i < (n + 1) / 2; ++i) layout.push_back(i);
            layout_ = std::move(layout);
        }
    }

    std::optional<Graph> next() {
        if (n_ == 1) {
            if (done_single_) return std::nullopt;
            done_single_ = true;
            return edgeless_graph(1);
        }
        if (!layout_) return std::nullopt;
        layout_ = detail::next_free_tree(*layout_);
        if (!layout_) return std::nullopt;
        Graph g = tree_from_levels(*layout_);
        layout_ = next_rooted_tree(*layout_);
        return g;
    }

private:
    int n_;
    std::optional<LevelSequence> layout_;
    bool done_single_ = false;
};

inline std::vector<Graph> free_trees(int n, bool unsafe_large = false) {
    std::vector<Graph> out;
    FreeTreeStream s(n, unsafe_large);
    while (auto g = s.next()) out.push_back(std::move(*g));
    return out;
}

// ---- unicyclic graphs ----------------------------------------------------------

/// A decoration sequence is kept when it is no larger than any rotation of
/// itself or of its reversal.
inline bool is_least_necklace(const std::vector<int>& keys) {
    const std::size_t c = keys.size();
    for (int dir = 0; dir < 2; ++dir) {
        for (std::size_t shift = 0; shift < c; ++shift) {
            if (dir == 0 && shift == 0) continue;
            for (std::size_t i = 0; i < c; ++i) {
                const std::size_t j = dir == 0 ? (shift + i) % c : (shift + c - i) % c;
                if (keys[j] != keys[i]) {
                    if (keys[j] < keys[i]) return false;
                    break;
                }
            }
        }
    }
    return true;
}

/// One graph per isomorphism class of connected graphs on n vertices with
/// exactly one cycle; optionally restricted to one cycle length.
class UnicyclicStream {
public:
    explicit UnicyclicStream(int n, std::optional<int> cycle_length = {}, bool unsafe_large = false) : n_(n) {
        check_generation_order(GraphClass::unicyclic, n, unsafe_large);
        c_ = cycle_length.value_or(3);
        c_last_ = cycle_length.value_or(n);
        if (c_ < 3 || c_last_ > n) throw std::out_of_range("cycle length must lie in [3, n]");
        const int max_tree = n - 2;
        rooted_.resize(static_cast<std::size_t>(max_tree + 1));
        base_.assign(static_cast<std::size_t>(max_tree + 2), 0);
        for (int s = 1; s <= max_tree; ++s) {
            rooted_[s] = rooted_trees(s);
            base_[s + 1] = base_[s] + static_cast<int>(rooted_[s].size());
        }
    }

    std::optional<Graph> next() {
        while (buffer_.empty()) {
            if (!advance_chunk()) return std::nullopt;
        }
        Graph g = std::move(buffer_.front());
        buffer_.pop_front();
        return g;
    }

private:
    int key(int size, int idx) const { return base_[size] + idx; }

    // Chunks are (cycle length, first decoration); the first decoration of a
    // kept sequence is its minimum.
    bool advance_chunk() {
        while (c_ <= c_last_) {
            const int max_first = n_ - c_ + 1;
            if (first_size_ <= max_first) {
                const int s = first_size_, idx = first_idx_;
                if (++first_idx_ == static_cast<int>(rooted_[s].size())) {
                    first_idx_ = 0;
                    ++first_size_;
                }
                fill_chunk(s, idx);
                return true;
            }
            ++c_;
            first_size_ = 1;
            first_idx_ = 0;
        }
        return false;
    }

    void fill_chunk(int s0, int idx0) {
        sizes_.assign(static_cast<std::size_t>(c_), 0);
        indices_.assign(static_cast<std::size_t>(c_), 0);
        keys_.assign(static_cast<std::size_t>(c_), 0);
        sizes_[0] = s0;
        indices_[0] = idx0;
        keys_[0] = key(s0, idx0);
        extend(1, n_ - c_ - (s0 - 1));
    }

    // `spare` counts vertices still to be placed beyond one root per position.
    void extend(int pos, int spare) {
        if (pos == c_) {
            if (spare == 0 && is_least_necklace(keys_)) buffer_.push_back(build());
            return;
        }
        for (int extra = 0; extra <= spare; ++extra) {
            const int s = extra + 1;
            for (int idx = 0; idx < static_cast<int>(rooted_[s].size()); ++idx) {
                const int k = key(s, idx);
                if (k < keys_[0]) continue;
                sizes_[pos] = s;
                indices_[pos] = idx;
                keys_[pos] = k;
                extend(pos + 1, spare - extra);
            }
        }
    }

    Graph build() const {
        std::vector<Edge> edges;
        for (int i = 0; i < c_; ++i) edges.emplace_back(i, (i + 1) % c_);
        int next_label = c_;
        for (int i = 0; i < c_; ++i) {
            const auto& levels = rooted_[sizes_[i]][indices_[i]];
            std::vector<int> label(levels.size());
            label[0] = i;
            for (std::size_t j = 1; j < levels.size(); ++j) label[j] = next_label++;
            append_level_edges(levels, label, edges);
        }
        return make_graph(n_, edges);
    }

    int n_;
    int c_ = 3;
    int c_last_ = 3;
    int first_size_ = 1;
    int first_idx_ = 0;
    std::vector<std::vector<LevelSequence>> rooted_;
    std::vector<int> base_;
    std::vector<int> sizes_, indices_, keys_;
    std::deque<Graph> buffer_;
};

// ---- forests ------------------------------------------------------------------

/// One graph per isomorphism class of forests on n vertices, as non-increasing
/// sequences of free trees. `largest` restricts the order of the largest tree.
class ForestStream {
public:
    explicit ForestStream(int n, std::optional<int> largest = {}, bool unsafe_large = false) : n_(n) {
        check_generation_order(GraphClass::forest, n, unsafe_large);
        trees_.resize(static_cast<std::size_t>(n + 1));
        base_.assign(static_cast<std::size_t>(n + 2), 0);
        for (int k = 1; k <= n; ++k) {
            trees_[k] = free_trees(k, true);
            base_[k + 1] = base_[k] + static_cast<int>(trees_[k].size());
        }
        first_order_ = largest.value_or(n);
        last_order_ = largest.value_or(1);
        if (first_order_ < 1 || first_order_ > n) throw std::out_of_range("largest tree order must lie in [1, n]");
    }

    std::optional<Graph> next() {
        while (buffer_.empty()) {
            if (!advance_chunk()) return std::nullopt;
        }
        Graph g = std::move(buffer_.front());
        buffer_.pop_front();
        return g;
    }

private:
    int key(int order, int idx) const { return base_[order] + idx; }

    // Chunks are the first (largest) tree, largest order first.
    bool advance_chunk() {
        while (first_order_ >= last_order_) {
            const int k = first_order_;
            if (first_idx_ < static_cast<int>(trees_[k].size())) {
                parts_.assign(1, {k, first_idx_});
                extend(n_ - k, key(k, first_idx_));
                ++first_idx_;
                return true;
            }
            --first_order_;
            first_idx_ = 0;
        }
        return false;
    }

    void extend(int remaining, int max_key) {
        if (remaining == 0) {
            buffer_.push_back(build());
            return;
        }
        for (int k = std::min(remaining, parts_.front().first); k >= 1; --k) {
            for (int idx = 0; idx < static_cast<int>(trees_[k].size()); ++idx) {
                const int kk = key(k, idx);
                if (kk > max_key) break;
                parts_.emplace_back(k, idx);
                extend(remaining - k, kk);
                parts_.pop_back();
            }
        }
    }

    Graph build() const {
        Graph g = edgeless_graph(0);
        for (auto [k, idx] : parts_) g = disjoint_union(g, trees_[k][idx]);
        return g;
    }

    int n_;
    int first_order_ = 1;
    int last_order_ = 1;
    int first_idx_ = 0;
    std::vector<std::vector<Graph>> trees_;
    std::vector<int> base_;
    std::vector<std::pair<int, int>> parts_;
    std::deque<Graph> buffer_;
};

// ---- tasks ----------------------------------------------------------------------

struct GenerationTask {
    GraphClass cls = GraphClass::tree;
    int order = 1;
    std::optional<int> cycle_length;
    std::optional<int> alpha;
    bool unsafe_large = false;
};

/// Streams every graph of the task (after the alpha filter, if any) into `visit`.
template <class Visit>
void for_each_graph(const GenerationTask& task, Visit&& visit) {
    if (task.cycle_length && task.cls != GraphClass::unicyclic) {
        throw std::invalid_argument("a cycle-length filter only applies to unicyclic generation");
    }
    auto emit = [&](const Graph& g) {
        if (!task.alpha || independence_number(g) == *task.alpha) visit(g);
    };
    switch (task.cls) {
        case GraphClass::tree: {
            FreeTreeStream s(task.order, task.unsafe_large);
            while (auto g = s.next()) emit(*g);
            break;
        }
        case GraphClass::unicyclic: {
            UnicyclicStream s(task.order, task.cycle_length, task.unsafe_large);
            while (auto g = s.next()) emit(*g);
            break;
        }
        case GraphClass::forest: {
            ForestStream s(task.order, {}, task.unsafe_large);
            while (auto g = s.next()) emit(*g);
            break;
        }
    }
}

inline std::uint64_t count_stream(const GenerationTask& task) {
    std::uint64_t count = 0;
    for_each_graph(task, [&](const Graph&) { ++count; });
    return count;
}

}  // namespace misbound
