#pragma once

/// \file verify.hpp
/// \brief Exhaustive certification of the minimum-mis bounds over every
/// isomorphism class of trees, forests and unicyclic graphs up to a given order.
///
/// Work is split into partitions (order, plus cycle length or largest tree for
/// the bigger classes). Each partition is scanned by one worker into local
/// buckets keyed by alpha; the buckets are merged in partition order, so the
/// records do not depend on scheduling.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

#include "bounds.hpp"
#include "canonical.hpp"
#include "enumerate.hpp"
#include "graph6.hpp"
#include "miscount.hpp"

namespace misbound {

enum class Status { holds_sharp, holds_not_sharp, violated };

inline const char* to_string(Status s) {
    switch (s) {
        case Status::holds_sharp: return "holds_sharp";
        case Status::holds_not_sharp: return "holds_not_sharp";
        case Status::violated: return "violated";
    }
    return "violated";
}

inline Status parse_status(std::string_view s) {
    if (s == "holds_sharp") return Status::holds_sharp;
    if (s == "holds_not_sharp") return Status::holds_not_sharp;
    if (s == "violated") return Status::violated;
    throw std::invalid_argument("unknown status '" + std::string(s) + "'");
}

struct VerificationRecord {
    GraphClass cls = GraphClass::tree;
    int n = 0;
    int alpha = 0;
    BigCount bound;
    BigCount min_mis;
    std::uint64_t minimizer_count = 0;
    /// Least canonical graph6 string among the minimizers.
    std::string witness;
    std::uint64_t graphs_scanned = 0;
    Status status = Status::violated;

    bool operator==(const VerificationRecord&) const = default;
};

inline Status status_for(const BigCount& bound, const BigCount& min_mis) {
    if (min_mis < bound) return Status::violated;
    return min_mis == bound ? Status::holds_sharp : Status::holds_not_sharp;
}

struct VerifyOptions {
    /// Worker threads; 0 means hardware concurrency.
    int jobs = 0;
    bool unsafe_large = false;
    /// Keep the canonical graph6 of every minimizer, not only the least one.
    bool all_witnesses = false;
};

struct VerifyResult {
    std::vector<VerificationRecord> records;
    /// Parallel to `records` when all_witnesses was requested; sorted.
    std::vector<std::vector<std::string>> minimizers;

    std::uint64_t violations() const {
        return static_cast<std::uint64_t>(std::count_if(records.begin(), records.end(), [](const auto& r) {
            return r.status == Status::violated;
        }));
    }
};

namespace detail {

struct Bucket {
    std::optional<BigCount> min_mis;
    std::uint64_t minimizer_count = 0;
    std::string witness;
    std::vector<std::string> minimizers;
    std::uint64_t scanned = 0;

    void offer(const BigCount& mis, const Graph& g, bool keep_all) {
        ++scanned;
        if (min_mis && mis > *min_mis) return;
        std::string canon = canonical_form(g, word_set_capacity);
        if (!min_mis || mis < *min_mis) {
            min_mis = mis;
            minimizer_count = 0;
            witness = canon;
            minimizers.clear();
        }
        ++minimizer_count;
        if (canon < witness) witness = canon;
        if (keep_all) minimizers.push_back(std::move(canon));
    }

    void merge(Bucket&& o) {
        scanned += o.scanned;
        if (!o.min_mis) return;
        if (!min_mis || *o.min_mis < *min_mis) {
            min_mis = std::move(o.min_mis);
            minimizer_count = o.minimizer_count;
            witness = std::move(o.witness);
            minimizers = std::move(o.minimizers);
            return;
        }
        if (*o.min_mis == *min_mis) {
            minimizer_count += o.minimizer_count;
            if (o.witness < witness) witness = std::move(o.witness);
            minimizers.insert(minimizers.end(), o.minimizers.begin(), o.minimizers.end());
        }
    }
};

struct Partition {
    int n = 0;
    std::optional<int> selector;  // cycle length or largest tree order
};

inline std::vector<Partition> partitions_for(GraphClass cls, int n_max) {
    std::vector<Partition> out;
    const int lo = cls == GraphClass::unicyclic ? 3 : 1;
    for (int n = lo; n <= n_max; ++n) {
        switch (cls) {
            case GraphClass::tree: out.push_back({n, {}}); break;
            case GraphClass::unicyclic:
                for (int c = 3; c <= n; ++c) out.push_back({n, c});
                break;
            case GraphClass::forest:
                for (int k = n; k >= 1; --k) out.push_back({n, k});
                break;
        }
    }
    return out;
}

template <class Visit>
void scan_partition(GraphClass cls, const Partition& p, bool unsafe_large, Visit&& visit) {
    switch (cls) {
        case GraphClass::tree: {
            FreeTreeStream s(p.n, unsafe_large);
            while (auto g = s.next()) visit(*g);
            break;
        }
        case GraphClass::unicyclic: {
            UnicyclicStream s(p.n, p.selector, unsafe_large);
            while (auto g = s.next()) visit(*g);
            break;
        }
        case GraphClass::forest: {
            ForestStream s(p.n, p.selector, unsafe_large);
            while (auto g = s.next()) visit(*g);
            break;
        }
    }
}

/// Runs `work(i)` for i in [0, count) on up to `jobs` threads.
template <class Work>
void parallel_for(std::size_t count, int jobs, Work&& work) {
    unsigned threads = jobs > 0 ? static_cast<unsigned>(jobs) : std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) work(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = next++; i < count; i = next++) work(i);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace detail

/// Scans every graph of the class with order <= n_max and returns one record
/// per realized (n, alpha), sorted by (n, alpha).
inline VerifyResult verify_class(GraphClass cls, int n_max, const VerifyOptions& opts = {}) {
    const int lo = cls == GraphClass::unicyclic ? 3 : 1;
    if (n_max < lo) throw std::out_of_range("max order below the smallest graph of the class");
    check_generation_order(cls, n_max, opts.unsafe_large);

    const auto parts = detail::partitions_for(cls, n_max);
    std::vector<std::map<int, detail::Bucket>> local(parts.size());
    detail::parallel_for(parts.size(), opts.jobs, [&](std::size_t i) {
        auto& buckets = local[i];
        detail::scan_partition(cls, parts[i], opts.unsafe_large, [&](const Graph& g) {
            const int alpha = independence_number(g);
            buckets[alpha].offer(mis_count(g), g, opts.all_witnesses);
        });
    });

    std::map<std::pair<int, int>, detail::Bucket> merged;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (auto& [alpha, b] : local[i]) merged[{parts[i].n, alpha}].merge(std::move(b));
    }

    VerifyResult result;
    for (auto& [key, b] : merged) {
        VerificationRecord r;
        r.cls = cls;
        r.n = key.first;
        r.alpha = key.second;
        r.bound = theorem_bound(BoundQuery{cls, r.n, r.alpha});
        r.min_mis = *b.min_mis;
        r.minimizer_count = b.minimizer_count;
        r.witness = b.witness;
        r.graphs_scanned = b.scanned;
        r.status = status_for(r.bound, r.min_mis);
        result.records.push_back(std::move(r));
        if (opts.all_witnesses) {
            std::sort(b.minimizers.begin(), b.minimizers.end());
            result.minimizers.push_back(std::move(b.minimizers));
        }
    }
    return result;
}

inline std::vector<VerificationRecord> verify_tree_theorem(int n_max, const VerifyOptions& opts = {}) {
    if (n_max < 2) throw std::out_of_range("tree verification needs max order >= 2");
    return verify_class(GraphClass::tree, n_max, opts).records;
}

inline std::vector<VerificationRecord> verify_unicyclic_theorem(int n_max, const VerifyOptions& opts = {}) {
    return verify_class(GraphClass::unicyclic, n_max, opts).records;
}

inline std::vector<VerificationRecord> verify_forest_corollary(int n_max, const VerifyOptions& opts = {}) {
    return verify_class(GraphClass::forest, n_max, opts).records;
}

// ---- even-cycle independence -----------------------------------------------------

struct Claim1Report {
    struct Row {
        int n = 0;
        std::uint64_t even_cycle_graphs = 0;
        int min_alpha = 0;
    };
    std::vector<Row> rows;
    /// graph6 of every even-cycle unicyclic graph with alpha < ceil(n/2).
    std::vector<std::string> violations;
};

/// Every unicyclic graph whose cycle is even should have alpha >= ceil(n/2).
inline Claim1Report verify_claim1(int n_max, const VerifyOptions& opts = {}) {
    if (n_max < 4) throw std::out_of_range("even-cycle check needs max order >= 4");
    check_generation_order(GraphClass::unicyclic, n_max, opts.unsafe_large);
    std::vector<detail::Partition> parts;
    for (int n = 4; n <= n_max; ++n) {
        for (int c = 4; c <= n; c += 2) parts.push_back({n, c});
    }
    struct Local {
        std::uint64_t graphs = 0;
        int min_alpha = 1 << 30;
        std::vector<std::string> bad;
    };
    std::vector<Local> local(parts.size());
    detail::parallel_for(parts.size(), opts.jobs, [&](std::size_t i) {
        const int n = parts[i].n;
        detail::scan_partition(GraphClass::unicyclic, parts[i], opts.unsafe_large, [&](const Graph& g) {
            const int a = independence_number(g);
            ++local[i].graphs;
            local[i].min_alpha = std::min(local[i].min_alpha, a);
            if (a < ceil_half(n)) local[i].bad.push_back(write_graph6(g));
        });
    });
    Claim1Report report;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (report.rows.empty() || report.rows.back().n != parts[i].n) report.rows.push_back({parts[i].n, 0, 1 << 30});
        auto& row = report.rows.back();
        row.even_cycle_graphs += local[i].graphs;
        row.min_alpha = std::min(row.min_alpha, local[i].min_alpha);
        report.violations.insert(report.violations.end(), local[i].bad.begin(), local[i].bad.end());
    }
    return report;
}

// ---- cycle lower bound -----------------------------------------------------------

struct CycleBoundReport {
    struct Row {
        int n = 0;
        BigCount mis;
        BigCount bound;  ///< ell(floor((n+1)/2))
        bool equality = false;
    };
    std::vector<Row> rows;
    std::vector<int> violations;

    std::vector<int> equality_orders() const {
        std::vector<int> out;
        for (const auto& r : rows) {
            if (r.equality) out.push_back(r.n);
        }
        return out;
    }
};

/// mis(C_n) >= ell(floor((n+1)/2)) for 5 <= n <= n_max.
inline CycleBoundReport verify_cycle_bound(int n_max) {
    if (n_max < 5) throw std::out_of_range("cycle bound check needs max order >= 5");
    CycleBoundReport report;
    for (int n = 5; n <= n_max; ++n) {
        CycleBoundReport::Row row;
        row.n = n;
        row.mis = mis_count_cycle(n);
        row.bound = ell_seq(static_cast<unsigned>((n + 1) / 2));
        row.equality = row.mis == row.bound;
        if (row.mis < row.bound) report.violations.push_back(n);
        report.rows.push_back(std::move(row));
    }
    return report;
}

// ---- certificates ----------------------------------------------------------------

enum class CertificateFormat { csv, json };

inline void sort_records(std::vector<VerificationRecord>& records) {
    std::sort(records.begin(), records.end(), [](const auto& a, const auto& b) {
        return std::tuple(std::string_view(to_string(a.cls)), a.n, a.alpha) <
               std::tuple(std::string_view(to_string(b.cls)), b.n, b.alpha);
    });
}

inline constexpr const char* certificate_csv_header =
    "class,n,alpha,bound,min_mis,minimizer_count,witness_graph6,graphs_scanned,status";

// graph6 uses printable characters 63..126, none of which need CSV quoting.
inline std::string export_csv(std::vector<VerificationRecord> records) {
    sort_records(records);
    std::string out = certificate_csv_header;
    out += '\n';
    for (const auto& r : records) {
        out += std::string(to_string(r.cls)) + ',' + std::to_string(r.n) + ',' + std::to_string(r.alpha) + ',' +
               to_string(r.bound) + ',' + to_string(r.min_mis) + ',' + std::to_string(r.minimizer_count) + ',' +
               r.witness + ',' + std::to_string(r.graphs_scanned) + ',' + to_string(r.status) + '\n';
    }
    return out;
}

inline nlohmann::ordered_json to_json_value(const VerificationRecord& r) {
    return nlohmann::ordered_json{{"class", to_string(r.cls)},
                                  {"n", r.n},
                                  {"alpha", r.alpha},
                                  {"bound", to_string(r.bound)},
                                  {"min_mis", to_string(r.min_mis)},
                                  {"minimizer_count", r.minimizer_count},
                                  {"witness_graph6", r.witness},
                                  {"graphs_scanned", r.graphs_scanned},
                                  {"status", to_string(r.status)}};
}

inline std::string export_json(std::vector<VerificationRecord> records) {
    sort_records(records);
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : records) arr.push_back(to_json_value(r));
    return arr.dump(2) + "\n";
}

inline std::vector<VerificationRecord> records_from_json(std::string_view text) {
    auto arr = nlohmann::json::parse(text);
    std::vector<VerificationRecord> out;
    for (const auto& j : arr) {
        VerificationRecord r;
        r.cls = parse_graph_class(j.at("class").get<std::string>());
        r.n = j.at("n").get<int>();
        r.alpha = j.at("alpha").get<int>();
        r.bound = BigCount(j.at("bound").get<std::string>());
        r.min_mis = BigCount(j.at("min_mis").get<std::string>());
        r.minimizer_count = j.at("minimizer_count").get<std::uint64_t>();
        r.witness = j.at("witness_graph6").get<std::string>();
        r.graphs_scanned = j.at("graphs_scanned").get<std::uint64_t>();
        r.status = parse_status(j.at("status").get<std::string>());
        out.push_back(std::move(r));
    }
    return out;
}

inline std::string export_certificates(const std::vector<VerificationRecord>& records, CertificateFormat format) {
    return format == CertificateFormat::csv ? export_csv(records) : export_json(records);
}

/// Format from the file extension: ".json" is JSON, anything else CSV.
inline CertificateFormat format_for_path(std::string_view path) {
    return path.size() >= 5 && path.substr(path.size() - 5) == ".json" ? CertificateFormat::json
                                                                        : CertificateFormat::csv;
}

inline void write_certificates(const std::vector<VerificationRecord>& records, const std::string& path,
                               std::optional<CertificateFormat> format = {}) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write certificate file '" + path + "'");
    out << export_certificates(records, format.value_or(format_for_path(path)));
    if (!out) throw std::runtime_error("failed writing certificate file '" + path + "'");
}

}  // namespace misbound
