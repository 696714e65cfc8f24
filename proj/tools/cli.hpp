#pragma once

// Command-line front end: count, alpha, classify, bound, construct, enumerate,
// verify, lemmas, convert. Exit codes: 0 success, 1 a checked bound was
// violated, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <misbound/misbound.hpp>

namespace misbound::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_violation = 1;
inline constexpr int exit_usage = 2;

class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string trim(std::string s) {
    auto not_space = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    return s;
}

struct InputSource {
    std::vector<std::string> inline_graphs;
    std::string file;

    void attach(CLI::App* cmd) {
        auto* pos = cmd->add_option("graph6", inline_graphs, "graph6 strings (default: read stdin)");
        auto* f = cmd->add_option("-f,--file", file, "read newline-delimited graph6 from a file");
        pos->excludes(f);
    }

    std::string read_all(std::istream& in) const {
        if (!file.empty()) {
            std::ifstream fin(file, std::ios::binary);
            if (!fin) throw usage_error("cannot open input file '" + file + "'");
            return {std::istreambuf_iterator<char>(fin), std::istreambuf_iterator<char>()};
        }
        return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    }

    /// graph6 lines; blank lines and lines starting with '#' are skipped.
    std::vector<std::string> lines(std::istream& in) const {
        std::vector<std::string> out;
        if (!inline_graphs.empty()) {
            for (const auto& g : inline_graphs) out.push_back(trim(g));
            return out;
        }
        std::istringstream text(read_all(in));
        std::string line;
        while (std::getline(text, line)) {
            line = trim(line);
            if (line.empty() || line.front() == '#') continue;
            out.push_back(line);
        }
        return out;
    }
};

inline std::string join(const std::vector<int>& xs, char sep) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(xs[i]);
    }
    return s;
}

inline std::string describe(const Graph& g) {
    auto c = classify(g);
    std::string s = std::string("kind=") + to_string(c.kind) + " components=" + std::to_string(c.component_count);
    if (c.kind == GraphKind::unicyclic) {
        s += " cycle=" + join(c.cycle, ',') + " parity=" + to_string(c.cycle_parity);
    }
    return s;
}

inline void print_records(std::ostream& out, const std::vector<VerificationRecord>& records) {
    out << "class n alpha bound min_mis minimizers scanned status witness\n";
    for (const auto& r : records) {
        out << to_string(r.cls) << ' ' << r.n << ' ' << r.alpha << ' ' << to_string(r.bound) << ' '
            << to_string(r.min_mis) << ' ' << r.minimizer_count << ' ' << r.graphs_scanned << ' '
            << to_string(r.status) << ' ' << r.witness << '\n';
    }
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact maximal-independent-set counting and minimum-mis bound certification", "misbound"};
    app.require_subcommand(1);

    // count / alpha / classify
    detail::InputSource count_in, alpha_in, classify_in, convert_in;
    bool oracle = false;
    auto* count = app.add_subcommand("count", "print mis(G) for each input graph");
    count_in.attach(count);
    count->add_flag("--oracle", oracle, "force the brute-force subset scan (order <= 25)");
    auto* alpha = app.add_subcommand("alpha", "print the independence number of each input graph");
    alpha_in.attach(alpha);
    auto* cls_cmd = app.add_subcommand("classify", "print kind, components and cycle of each input graph");
    classify_in.attach(cls_cmd);

    // bound
    std::string bound_class;
    int bound_n = 0, bound_a = 0;
    auto* bound = app.add_subcommand("bound", "print the minimum-mis bound for (class, n, alpha)");
    bound->add_option("--class", bound_class, "tree | forest | unicyclic")
        ->required()
        ->check(CLI::IsMember({"tree", "forest", "unicyclic"}));
    bound->add_option("-n", bound_n, "order")->required();
    bound->add_option("-a,--alpha", bound_a, "independence number")->required();

    // construct
    std::string family;
    int cons_n = 0;
    std::optional<int> cons_a;
    bool as_dot = false;
    auto* construct = app.add_subcommand("construct", "build an extremal graph and print it with its predicted mis");
    construct->add_option("--family", family, "T | H | L | star | cycle | triangle-star")
        ->required()
        ->check(CLI::IsMember({"T", "H", "L", "star", "cycle", "triangle-star"}));
    construct->add_option("-n", cons_n, "order")->required();
    construct->add_option("-a,--alpha", cons_a, "independence number (T and H)");
    construct->add_flag("--dot", as_dot, "emit DOT instead of graph6");

    // enumerate
    std::string enum_class;
    int enum_n = 0;
    std::optional<int> enum_cycle, enum_alpha;
    bool enum_unsafe = false;
    auto* enumerate = app.add_subcommand("enumerate", "stream one graph6 line per isomorphism class");
    enumerate->add_option("--class", enum_class, "tree | forest | unicyclic")
        ->required()
        ->check(CLI::IsMember({"tree", "forest", "unicyclic"}));
    enumerate->add_option("-n", enum_n, "order")->required();
    enumerate->add_option("--cycle-length", enum_cycle, "only unicyclic graphs with this cycle length");
    enumerate->add_option("--alpha", enum_alpha, "only graphs with this independence number");
    enumerate->add_flag("--unsafe-large", enum_unsafe, "allow orders above the default limits");

    // verify
    std::string verify_class_name, out_path, witnesses_path;
    int max_n = 0, jobs = 0;
    bool verify_unsafe = false;
    auto* verify = app.add_subcommand("verify", "certify the bound over every graph of the class up to --max-n");
    verify->add_option("--class", verify_class_name, "tree | forest | unicyclic")
        ->required()
        ->check(CLI::IsMember({"tree", "forest", "unicyclic"}));
    verify->add_option("--max-n", max_n, "largest order to scan")->required();
    verify->add_option("--jobs", jobs, "worker threads (default: all cores)")->check(CLI::NonNegativeNumber);
    verify->add_option("--out", out_path, "write certificates (.csv or .json)");
    verify->add_option("--all-witnesses", witnesses_path, "write every minimizer's graph6 to this file");
    verify->add_flag("--unsafe-large", verify_unsafe, "allow orders above the default limits");

    // lemmas
    int limit = 60;
    bool lemmas_json = false;
    std::uint64_t samples = SweepOptions{}.majorization_samples;
    std::uint64_t seed = SweepOptions{}.seed;
    auto* lemmas = app.add_subcommand("lemmas", "check the sequence inequalities with exact arithmetic");
    lemmas->add_option("--limit", limit, "largest argument sum")->check(CLI::Range(5, 100000));
    lemmas->add_option("--samples", samples, "random tuples for the majorization rule");
    lemmas->add_option("--seed", seed, "random seed for the majorization samples");
    lemmas->add_flag("--json", lemmas_json, "emit the report as JSON");

    // convert
    std::string to_format;
    auto* convert = app.add_subcommand("convert", "translate graph6 to DOT or DOT to graph6");
    convert_in.attach(convert);
    convert->add_option("--to", to_format, "dot | graph6 (default: the other format)")
        ->check(CLI::IsMember({"dot", "graph6"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_usage;
    }

    try {
        if (*count || *alpha || *cls_cmd) {
            const auto& src = *count ? count_in : *alpha ? alpha_in : classify_in;
            for (const auto& line : src.lines(in)) {
                Graph g = parse_graph6(line);
                if (*count) {
                    out << to_string(oracle ? mis_count_bruteforce(g) : mis_count(g)) << '\n';
                } else if (*alpha) {
                    out << independence_number(g) << '\n';
                } else {
                    out << detail::describe(g) << '\n';
                }
            }
            return exit_ok;
        }

        if (*bound) {
            BoundQuery q{parse_graph_class(bound_class), bound_n, bound_a};
            out << to_string(theorem_bound(q)) << '\n';
            return exit_ok;
        }

        if (*construct) {
            ExtremalSpec spec{parse_family(family), cons_n, cons_a.value_or(0)};
            if ((spec.family == Family::T || spec.family == Family::H) && !cons_a) {
                throw usage_error("--alpha is required for family " + family);
            }
            Graph g = build(spec);
            const auto predicted = to_string(predicted_mis(spec));
            if (as_dot) {
                out << to_dot(g) << "// predicted mis: " << predicted << '\n';
            } else {
                out << write_graph6(g) << '\n' << "# predicted mis: " << predicted << '\n';
            }
            return exit_ok;
        }

        if (*enumerate) {
            GenerationTask task{parse_graph_class(enum_class), enum_n, enum_cycle, enum_alpha, enum_unsafe};
            for_each_graph(task, [&](const Graph& g) { out << write_graph6(g) << '\n'; });
            return exit_ok;
        }

        if (*verify) {
            VerifyOptions opts;
            opts.jobs = jobs;
            opts.unsafe_large = verify_unsafe;
            opts.all_witnesses = !witnesses_path.empty();
            auto result = verify_class(parse_graph_class(verify_class_name), max_n, opts);
            detail::print_records(out, result.records);
            const auto violations = result.violations();
            out << "records=" << result.records.size() << " violations=" << violations << '\n';
            if (!out_path.empty()) write_certificates(result.records, out_path);
            if (!witnesses_path.empty()) {
                std::ofstream w(witnesses_path, std::ios::binary);
                if (!w) throw std::runtime_error("cannot write witness file '" + witnesses_path + "'");
                for (std::size_t i = 0; i < result.records.size(); ++i) {
                    const auto& r = result.records[i];
                    for (const auto& g6 : result.minimizers[i]) {
                        w << to_string(r.cls) << ' ' << r.n << ' ' << r.alpha << ' ' << g6 << '\n';
                    }
                }
            }
            return violations == 0 ? exit_ok : exit_violation;
        }

        if (*lemmas) {
            auto reports = sweep_sequence_lemmas(limit, SweepOptions{samples, seed});
            if (lemmas_json) {
                out << nlohmann::json(reports).dump(2) << '\n';
            } else {
                for (const auto& r : reports) {
                    out << r.lemma << " tuples_checked=" << r.tuples_checked
                        << " violations=" << r.violations.size() << '\n';
                    for (const auto& v : r.violations) out << "  violation " << v << '\n';
                }
            }
            return total_violations(reports) == 0 ? exit_ok : exit_violation;
        }

        if (*convert) {
            std::string text;
            if (!convert_in.inline_graphs.empty()) {
                for (const auto& g : convert_in.inline_graphs) text += g + '\n';
            } else {
                text = convert_in.read_all(in);
            }
            const bool dot_input = text.find('{') != std::string::npos;
            const std::string target = to_format.empty() ? (dot_input ? "graph6" : "dot") : to_format;
            std::vector<Graph> graphs;
            if (dot_input) {
                graphs.push_back(parse_dot(text));
            } else {
                std::istringstream lines(text);
                std::string line;
                while (std::getline(lines, line)) {
                    line = detail::trim(line);
                    if (line.empty() || line.front() == '#') continue;
                    graphs.push_back(parse_graph6(line));
                }
            }
            for (const auto& g : graphs) out << (target == "dot" ? to_dot(g) : write_graph6(g) + '\n');
            return exit_ok;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

}  // namespace misbound::cli
