#pragma once

/// \file graph6.hpp
/// \brief graph6 reader/writer (McKay's format): a size prefix followed by the
/// upper triangle of the adjacency matrix in column order, six bits per
/// printable character offset by 63.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace misbound {

inline constexpr int graph6_max_order = 258047;

class graph6_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline std::string write_graph6(const Graph& g) {
    const int n = g.order();
    if (n > graph6_max_order) throw std::invalid_argument("graph too large for graph6");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

inline Graph parse_graph6(std::string_view text) {
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
    for (char ch : text) {
        if (ch < 63 || ch > 126) {
            throw graph6_error("graph6: character outside [63,126] (code " +
                               std::to_string(static_cast<int>(static_cast<unsigned char>(ch))) + ")");
        }
    }
    if (text.empty()) throw graph6_error("graph6: empty input");

    std::size_t pos = 0;
    long n = 0;
    if (text[0] != 126) {
        n = text[0] - 63;
        pos = 1;
    } else {
        if (text.size() < 4 || text[1] == 126) throw graph6_error("graph6: malformed length prefix");
        n = (static_cast<long>(text[1] - 63) << 12) | (static_cast<long>(text[2] - 63) << 6) |
            static_cast<long>(text[3] - 63);
        if (n <= 62) throw graph6_error("graph6: malformed length prefix");
        pos = 4;
    }
    const long bits = n * (n - 1) / 2;
    const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() - pos < body) throw graph6_error("graph6: truncated adjacency data");
    if (text.size() - pos > body) throw graph6_error("graph6: trailing characters after adjacency data");

    std::vector<Edge> edges;
    long k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            int chunk = text[pos + static_cast<std::size_t>(k / 6)] - 63;
            if ((chunk >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    if (bits % 6 != 0) {
        int last = text.back() - 63;
        int pad = static_cast<int>(6 - bits % 6);
        if ((last & ((1 << pad) - 1)) != 0) throw graph6_error("graph6: nonzero padding bits");
    }
    return make_graph(static_cast<int>(n), edges);
}

}  // namespace misbound
