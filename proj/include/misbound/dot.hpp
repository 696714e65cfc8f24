#pragma once

/// \file dot.hpp
/// \brief Graphviz output, plus a reader for the subset of DOT this library writes.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace misbound {

inline std::string to_dot(const Graph& g, std::string_view name = "G") {
    std::string out = "graph ";
    out += name;
    out += " {\n";
    for (int v = 0; v < g.order(); ++v) out += "  " + std::to_string(v) + ";\n";
    for (auto [u, v] : g.edges()) out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

/// Reads `graph NAME { v; u -- v; ... }` with integer vertex ids. Order is one
/// more than the largest id mentioned.
inline Graph parse_dot(std::string_view text) {
    auto open = text.find('{');
    auto close = text.rfind('}');
    if (open == std::string_view::npos || close == std::string_view::npos || close < open) {
        throw std::invalid_argument("dot: missing graph body");
    }
    auto head = text.substr(0, open);
    if (head.find("graph") == std::string_view::npos || head.find("digraph") != std::string_view::npos) {
        throw std::invalid_argument("dot: expected an undirected 'graph' block");
    }
    std::string body(text.substr(open + 1, close - open - 1));
    for (char& ch : body) {
        if (ch == '\n') ch = ';';
    }

    auto parse_id = [](std::string_view tok) {
        while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
        while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
        int v = -1;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || p != tok.data() + tok.size() || v < 0) {
            throw std::invalid_argument("dot: bad vertex id '" + std::string(tok) + "'");
        }
        return v;
    };

    int order = 0;
    std::vector<Edge> edges;
    std::istringstream stmts(body);
    std::string stmt;
    while (std::getline(stmts, stmt, ';')) {
        std::string_view s = stmt;
        if (auto c = s.find("//"); c != std::string_view::npos) s = s.substr(0, c);
        if (s.find_first_not_of(" \t\r") == std::string_view::npos) continue;
        if (auto dash = s.find("--"); dash != std::string_view::npos) {
            int u = parse_id(s.substr(0, dash));
            int v = parse_id(s.substr(dash + 2));
            edges.emplace_back(u, v);
            order = std::max({order, u + 1, v + 1});
        } else {
            order = std::max(order, parse_id(s) + 1);
        }
    }
    return make_graph(order, edges);
}

}  // namespace misbound
