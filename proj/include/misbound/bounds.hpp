#pragma once

/// \file bounds.hpp
/// \brief Fibonacci-type sequences and the minimum-mis lower bounds for trees,
/// forests and unicyclic graphs of given order and independence number, plus
/// exhaustive/sampled checks of the product inequalities behind them.
///
/// Everything is exact: values are `BigCount` (arbitrary precision).

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

namespace misbound {

using BigCount = boost::multiprecision::cpp_int;

inline std::string to_string(const BigCount& x) { return x.str(); }

// ---- sequences ------------------------------------------------------------

/// f(0)=0, f(1)=1, f(n)=f(n-1)+f(n-2).
inline BigCount fib(unsigned n) {
    BigCount a = 0, b = 1;
    for (unsigned i = 0; i < n; ++i) {
        BigCount t = a + b;
        a = std::move(b);
        b = std::move(t);
    }
    return a;
}

/// f(n+2): the tree/forest bound as a function of n - alpha.
inline BigCount g_seq(unsigned n) { return fib(n + 2); }

/// 2 f(n).
inline BigCount h_seq(unsigned n) { return 2 * fib(n); }

/// f(n+2) - f(n-3), defined for n >= 3.
inline BigCount ell_seq(unsigned n) {
    if (n < 3) throw std::domain_error("ell(n) is defined for n >= 3, got " + std::to_string(n));
    return fib(n + 2) - fib(n - 3);
}

// ---- bound queries --------------------------------------------------------

enum class GraphClass { tree, forest, unicyclic };

inline const char* to_string(GraphClass c) {
    switch (c) {
        case GraphClass::tree: return "tree";
        case GraphClass::forest: return "forest";
        case GraphClass::unicyclic: return "unicyclic";
    }
    return "tree";
}

inline GraphClass parse_graph_class(std::string_view s) {
    if (s == "tree") return GraphClass::tree;
    if (s == "forest") return GraphClass::forest;
    if (s == "unicyclic") return GraphClass::unicyclic;
    throw std::invalid_argument("unknown graph class '" + std::string(s) + "'");
}

struct BoundQuery {
    GraphClass cls = GraphClass::tree;
    int n = 0;
    int alpha = 0;

    int gap() const { return n - alpha; }
};

inline int ceil_half(int n) { return (n + 1) / 2; }
inline int floor_half(int n) { return n / 2; }

/// Whether some graph of the class realizes (n, alpha).
inline bool is_feasible(const BoundQuery& q) {
    switch (q.cls) {
        case GraphClass::tree:
            if (q.n == 1) return q.alpha == 1;
            return q.n >= 2 && ceil_half(q.n) <= q.alpha && q.alpha <= q.n - 1;
        case GraphClass::forest:
            return q.n >= 0 && q.alpha <= q.n && q.gap() >= 0 && q.gap() <= floor_half(q.n);
        case GraphClass::unicyclic:
            return q.n >= 3 && floor_half(q.n) <= q.alpha && q.alpha <= q.n - 2;
    }
    return false;
}

class infeasible_query : public std::domain_error {
public:
    explicit infeasible_query(const BoundQuery& q)
        : std::domain_error(std::string("no ") + to_string(q.cls) + " has order " + std::to_string(q.n) +
                            " and independence number " + std::to_string(q.alpha)) {}
};

/// g(n - alpha) for trees and forests.
inline BigCount tree_bound(const BoundQuery& q) {
    if (q.cls == GraphClass::unicyclic || !is_feasible(q)) throw infeasible_query(q);
    return g_seq(static_cast<unsigned>(q.gap()));
}

/// Which branch of the unicyclic bound applies.
enum class UnicyclicCase {
    four_cycle,    ///< n = 4, alpha = 2
    near_star,     ///< alpha = n - 2, n != 4
    odd_half,      ///< n >= 5 odd, alpha = floor(n/2)
    general_gap,   ///< n >= 5, ceil(n/2) <= alpha < n - 2
};

inline UnicyclicCase unicyclic_case(const BoundQuery& q) {
    if (q.cls != GraphClass::unicyclic || !is_feasible(q)) throw infeasible_query(q);
    const int n = q.n, a = q.alpha;
    if (n == 4 && a == 2) return UnicyclicCase::four_cycle;
    if (a == n - 2) return UnicyclicCase::near_star;
    if (n >= 5 && n % 2 == 1 && a == floor_half(n)) return UnicyclicCase::odd_half;
    if (n >= 5 && ceil_half(n) <= a && a < n - 2) return UnicyclicCase::general_gap;
    throw infeasible_query(q);
}

/// t(n, alpha): 2, 3, ell(n - alpha) or h(n - alpha) depending on the case.
inline BigCount unicyclic_bound(const BoundQuery& q) {
    const auto gap = static_cast<unsigned>(q.gap());
    switch (unicyclic_case(q)) {
        case UnicyclicCase::four_cycle: return 2;
        case UnicyclicCase::near_star: return 3;
        case UnicyclicCase::odd_half: return ell_seq(gap);
        case UnicyclicCase::general_gap: return h_seq(gap);
    }
    throw infeasible_query(q);
}

inline BigCount theorem_bound(const BoundQuery& q) {
    return q.cls == GraphClass::unicyclic ? unicyclic_bound(q) : tree_bound(q);
}

// ---- majorization -----------------------------------------------------------

struct Pair {
    BigCount first;
    BigCount second;
};

/// (a,b) majorizes (c,d) iff a >= c and a+b >= c+d.
inline bool majorizes(const Pair& a, const Pair& b) {
    return a.first >= b.first && a.first + a.second >= b.first + b.second;
}

// ---- lemma sweeps -----------------------------------------------------------

struct LemmaReport {
    std::string lemma;
    std::uint64_t tuples_checked = 0;
    std::vector<std::string> violations;
};

inline void to_json(nlohmann::json& j, const LemmaReport& r) {
    j = nlohmann::json{{"lemma", r.lemma}, {"tuples_checked", r.tuples_checked}, {"violations", r.violations}};
}

inline void from_json(const nlohmann::json& j, LemmaReport& r) {
    j.at("lemma").get_to(r.lemma);
    j.at("tuples_checked").get_to(r.tuples_checked);
    j.at("violations").get_to(r.violations);
}

struct SweepOptions {
    std::uint64_t majorization_samples = 100000;
    std::uint64_t seed = 20240531;
};

namespace detail {

inline std::string tuple_text(std::initializer_list<long long> xs) {
    std::string s = "(";
    bool first = true;
    for (auto x : xs) {
        if (!first) s += ",";
        s += std::to_string(x);
        first = false;
    }
    return s + ")";
}

}  // namespace detail

/// Checks the product inequalities over every argument pair with n1 + n2 <= limit
/// (respecting each inequality's lower bound on n1), the convolution identity
/// g(n1)g(n2) + g(n1-1)g(n2-1) = g(n1+n2+1) for n1, n2 >= 1, and the
/// majorization product rule on seeded random tuples satisfying its hypotheses.
/// Reports are sorted by lemma name.
inline std::vector<LemmaReport> sweep_sequence_lemmas(int limit, const SweepOptions& opts = {}) {
    if (limit < 5) throw std::invalid_argument("sweep limit must be at least 5");
    const auto top = static_cast<std::size_t>(limit + 2);
    std::vector<BigCount> g(top), h(top), ell(top), pow2(top);
    for (std::size_t i = 0; i < top; ++i) {
        g[i] = g_seq(static_cast<unsigned>(i));
        h[i] = h_seq(static_cast<unsigned>(i));
        pow2[i] = BigCount(1) << i;
        if (i >= 3) ell[i] = ell_seq(static_cast<unsigned>(i));
    }

    std::vector<LemmaReport> out;
    auto product_sweep = [&](std::string name, int n1_min, const std::vector<BigCount>& left,
                             const std::vector<BigCount>& right, const std::vector<BigCount>& whole) {
        LemmaReport r{std::move(name), 0, {}};
        for (int n1 = n1_min; n1 <= limit; ++n1) {
            for (int n2 = 0; n1 + n2 <= limit; ++n2) {
                ++r.tuples_checked;
                if (left[n1] * right[n2] < whole[n1 + n2]) r.violations.push_back(detail::tuple_text({n1, n2}));
            }
        }
        out.push_back(std::move(r));
    };
    product_sweep("lemma1.1", 0, g, g, g);
    product_sweep("lemma5", 2, h, g, h);
    product_sweep("lemma6", 3, ell, g, ell);
    product_sweep("lemma10", 3, ell, pow2, ell);

    {
        LemmaReport r{"lemma1.2", 0, {}};
        for (int n1 = 1; n1 <= limit; ++n1) {
            for (int n2 = 1; n1 + n2 + 1 < static_cast<int>(top) && n1 + n2 <= limit; ++n2) {
                ++r.tuples_checked;
                if (g[n1] * g[n2] + g[n1 - 1] * g[n2 - 1] != g[n1 + n2 + 1]) {
                    r.violations.push_back(detail::tuple_text({n1, n2}));
                }
            }
        }
        out.push_back(std::move(r));
    }

    {
        LemmaReport r{"lemma2", 0, {}};
        std::mt19937_64 rng(opts.seed);
        auto draw = [&](std::uint64_t lo, std::uint64_t span) {
            return lo + std::uniform_int_distribution<std::uint64_t>(0, span)(rng);
        };
        // A majorizing pair over (c, d) with c >= d; magnitudes range over 2^0..2^40.
        auto sample_side = [&](std::uint64_t& a, std::uint64_t& b, std::uint64_t& c, std::uint64_t& d) {
            const std::uint64_t span = std::uint64_t{1} << std::uniform_int_distribution<int>(0, 40)(rng);
            d = draw(0, span);
            c = draw(d, span);
            a = draw(c, span);
            const std::uint64_t need = c + d > a ? c + d - a : 0;
            b = draw(need, span);
        };
        for (std::uint64_t i = 0; i < opts.majorization_samples; ++i) {
            std::uint64_t a, b, c, d, e, f, gg, hh;
            sample_side(a, b, c, d);
            sample_side(e, f, gg, hh);
            ++r.tuples_checked;
            Pair lhs{BigCount(a) * e, BigCount(b) * f};
            Pair rhs{BigCount(c) * gg, BigCount(d) * hh};
            if (!majorizes(lhs, rhs)) {
                r.violations.push_back(detail::tuple_text({static_cast<long long>(a), static_cast<long long>(b),
                                                           static_cast<long long>(c), static_cast<long long>(d),
                                                           static_cast<long long>(e), static_cast<long long>(f),
                                                           static_cast<long long>(gg), static_cast<long long>(hh)}));
            }
        }
        out.push_back(std::move(r));
    }

    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.lemma < y.lemma; });
    return out;
}

inline std::uint64_t total_violations(const std::vector<LemmaReport>& reports) {
    std::uint64_t v = 0;
    for (const auto& r : reports) v += r.violations.size();
    return v;
}

}  // namespace misbound
