#pragma once

/// \file extremal.hpp
/// \brief Graphs attaining the minimum-mis bounds, with fixed vertex labelings.
///
/// Labeling convention for the caterpillar-shaped families: cycle (if any),
/// then the spine, then one pendant per spine vertex, then the leaf bundle.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bounds.hpp"
#include "graph.hpp"
#include "miscount.hpp"

namespace misbound {

enum class Family { T, H, L, star, cycle, triangle_star };

inline const char* to_string(Family f) {
    switch (f) {
        case Family::T: return "T";
        case Family::H: return "H";
        case Family::L: return "L";
        case Family::star: return "star";
        case Family::cycle: return "cycle";
        case Family::triangle_star: return "triangle-star";
    }
    return "T";
}

inline Family parse_family(std::string_view s) {
    if (s == "T") return Family::T;
    if (s == "H") return Family::H;
    if (s == "L") return Family::L;
    if (s == "star") return Family::star;
    if (s == "cycle") return Family::cycle;
    if (s == "triangle-star" || s == "triangle_star") return Family::triangle_star;
    throw std::invalid_argument("unknown family '" + std::string(s) + "'");
}

struct ExtremalSpec {
    Family family = Family::T;
    int n = 0;
    /// Only read for T and H.
    int alpha = 0;
};

class infeasible_family : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

namespace detail {

[[noreturn]] inline void reject(std::string_view family, int n, int alpha = -1) {
    std::string msg = "infeasible parameters for ";
    msg += family;
    msg += ": n=" + std::to_string(n);
    if (alpha >= 0) msg += ", alpha=" + std::to_string(alpha);
    throw infeasible_family(msg);
}

}  // namespace detail

/// Vertex roles of T(n, alpha) under the fixed labeling.
struct TLayout {
    int spine = 0;  ///< n - alpha - 1 spine vertices, labels 0..spine-1 (0 is the far end y)
    int hub = 0;    ///< label `spine`
    int bundle = 0; ///< 2 alpha - n + 1 leaves on the hub
    int pendant(int i) const { return spine + 1 + i; }
};

inline TLayout t_layout(int n, int alpha) { return TLayout{n - alpha - 1, n - alpha - 1, 2 * alpha - n + 1}; }

/// Caterpillar tree: a spine of n-alpha-1 vertices each with one pendant leaf,
/// ending at a hub that carries 2alpha-n+1 leaves. alpha = n-1 gives the star.
inline Graph build_T(int n, int alpha) {
    if (n < 2 || alpha < ceil_half(n) || alpha > n - 1) detail::reject("T", n, alpha);
    const auto lay = t_layout(n, alpha);
    std::vector<Edge> edges;
    for (int i = 0; i < lay.spine; ++i) {
        edges.emplace_back(i, i + 1);
        edges.emplace_back(i, lay.pendant(i));
    }
    for (int j = 0; j < lay.bundle; ++j) edges.emplace_back(lay.hub, 2 * lay.spine + 1 + j);
    return make_graph(n, edges);
}

/// Vertex roles of H(n, alpha): cycle 0..3 (0 attaches to the hub), hub 4,
/// spine 5..4+spine (last one is the far end y), pendants, then the bundle.
struct HLayout {
    int spine = 0;
    int bundle = 0;
    static constexpr int hub = 4;
    int spine_vertex(int i) const { return 5 + i; }
    int pendant(int i) const { return 5 + spine + i; }
};

inline HLayout h_layout(int n, int alpha) { return HLayout{n - alpha - 3, 2 * alpha - n + 1}; }

/// Unicyclic graph on a 4-cycle: one cycle vertex joined to a hub carrying
/// 2alpha-n+1 leaves, and from the hub a spine of n-alpha-3 vertices each with
/// one pendant leaf.
inline Graph build_H(int n, int alpha) {
    if (n < 6 || alpha < ceil_half(n) || alpha >= n - 2) detail::reject("H", n, alpha);
    const auto lay = h_layout(n, alpha);
    std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, HLayout::hub}};
    int prev = HLayout::hub;
    for (int i = 0; i < lay.spine; ++i) {
        edges.emplace_back(prev, lay.spine_vertex(i));
        edges.emplace_back(lay.spine_vertex(i), lay.pendant(i));
        prev = lay.spine_vertex(i);
    }
    for (int j = 0; j < lay.bundle; ++j) edges.emplace_back(HLayout::hub, 5 + 2 * lay.spine + j);
    return make_graph(n, edges);
}

/// Vertex roles of L(n): cycle 0..6 (0 carries the spine), spine 7.., pendants.
struct LLayout {
    int spine = 0;
    int spine_vertex(int i) const { return 7 + i; }
    int pendant(int i) const { return 7 + spine + i; }
};

inline LLayout l_layout(int n) { return LLayout{(n - 7) / 2}; }

/// A 7-cycle with a spine of (n-7)/2 vertices, each carrying one pendant leaf,
/// hanging from one cycle vertex.
inline Graph build_L(int n) {
    if (n < 7 || n % 2 == 0) detail::reject("L", n);
    const auto lay = l_layout(n);
    std::vector<Edge> edges;
    for (int i = 0; i < 7; ++i) edges.emplace_back(i, (i + 1) % 7);
    int prev = 0;
    for (int i = 0; i < lay.spine; ++i) {
        edges.emplace_back(prev, lay.spine_vertex(i));
        edges.emplace_back(lay.spine_vertex(i), lay.pendant(i));
        prev = lay.spine_vertex(i);
    }
    return make_graph(n, edges);
}

/// Triangle 0-1-2 with vertex 0 joined to n-3 further leaves.
inline Graph build_triangle_star(int n) {
    if (n < 3) detail::reject("triangle-star", n);
    std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 0}};
    for (int v = 3; v < n; ++v) edges.emplace_back(0, v);
    return make_graph(n, edges);
}

/// K_{1,n-1} with center 0.
inline Graph build_star(int n) {
    if (n < 1) detail::reject("star", n);
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
    return make_graph(n, edges);
}

/// C_n as 0-1-...-(n-1)-0.
inline Graph build_cycle(int n) {
    if (n < 3) detail::reject("cycle", n);
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return make_graph(n, edges);
}

inline Graph build(const ExtremalSpec& s) {
    switch (s.family) {
        case Family::T: return build_T(s.n, s.alpha);
        case Family::H: return build_H(s.n, s.alpha);
        case Family::L: return build_L(s.n);
        case Family::star: return build_star(s.n);
        case Family::cycle: return build_cycle(s.n);
        case Family::triangle_star: return build_triangle_star(s.n);
    }
    throw std::invalid_argument("unknown family");
}

/// Independence number implied by the family parameters.
inline int family_alpha(const ExtremalSpec& s) {
    switch (s.family) {
        case Family::T:
        case Family::H: return s.alpha;
        case Family::L: return s.n / 2;
        case Family::star: return s.n == 1 ? 1 : s.n - 1;
        case Family::cycle: return s.n / 2;
        case Family::triangle_star: return s.n == 3 ? 1 : s.n - 2;
    }
    return 0;
}

/// The mis value each family is built to attain.
inline BigCount predicted_mis(const ExtremalSpec& s) {
    build(s);  // validates parameters
    switch (s.family) {
        case Family::T: return g_seq(static_cast<unsigned>(s.n - s.alpha));
        case Family::H: return h_seq(static_cast<unsigned>(s.n - s.alpha));
        case Family::L: return ell_seq(static_cast<unsigned>((s.n + 1) / 2));
        case Family::star: return s.n == 1 ? 1 : 2;
        case Family::cycle: return mis_count_cycle(s.n);
        case Family::triangle_star: return 3;
    }
    return 0;
}

}  // namespace misbound
