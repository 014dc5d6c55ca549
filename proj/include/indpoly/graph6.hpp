// graph6 decoder/encoder (the 6-bit printable interchange format used by
// small-graph corpora) and a plain edge-list reader.
#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace indpoly {

namespace detail {

inline int g6_byte(char c, const char* where) {
    unsigned char u = static_cast<unsigned char>(c);
    if (u < 63 || u > 126)
        throw std::invalid_argument(std::string("graph6: non-printable byte in ") + where);
    return u - 63;
}

}  // namespace detail

// Decodes one graph6 line; the optional ">>graph6<<" header is tolerated.
inline Graph parse_graph6(std::string_view line) {
    constexpr std::string_view header = ">>graph6<<";
    if (line.substr(0, header.size()) == header) line.remove_prefix(header.size());
    if (line.empty()) throw std::invalid_argument("graph6: empty input");

    std::size_t pos = 0;
    long long n = 0;
    int first = detail::g6_byte(line[pos], "size field");
    if (first < 63) {
        n = first;
        ++pos;
    } else {  // first byte 126: 18-bit or 36-bit size
        ++pos;
        int width = 3;
        if (pos < line.size() && static_cast<unsigned char>(line[pos]) == 126) {
            ++pos;
            width = 6;
        }
        if (line.size() - pos < static_cast<std::size_t>(width))
            throw std::invalid_argument("graph6: truncated size field");
        n = 0;
        for (int i = 0; i < width; ++i) n = (n << 6) | detail::g6_byte(line[pos++], "size field");
    }
    if (n > 100000) throw std::invalid_argument("graph6: vertex count implausibly large");

    const long long bits = n * (n - 1) / 2;
    const long long bytes = (bits + 5) / 6;
    if (static_cast<long long>(line.size() - pos) < bytes)
        throw std::invalid_argument("graph6: truncated adjacency data");
    if (static_cast<long long>(line.size() - pos) > bytes)
        throw std::invalid_argument("graph6: trailing garbage after adjacency data");

    std::vector<Edge> edges;
    long long bit = 0;
    int cur = 0;
    for (Vertex col = 1; col < n; ++col) {
        for (Vertex row = 0; row < col; ++row, ++bit) {
            if (bit % 6 == 0) cur = detail::g6_byte(line[pos + bit / 6], "adjacency data");
            if (cur & (1 << (5 - bit % 6))) edges.emplace_back(row, col);
        }
    }
    if (bits % 6 != 0) {
        int pad = static_cast<int>(6 - bits % 6);
        if (cur & ((1 << pad) - 1))
            throw std::invalid_argument("graph6: nonzero padding bits");
    }
    return Graph::make(static_cast<int>(n), edges);
}

inline std::string encode_graph6(const Graph& g) {
    const long long n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(static_cast<char>(126));
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(126));
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    int cur = 0;
    int filled = 0;
    for (Vertex col = 1; col < n; ++col) {
        for (Vertex row = 0; row < col; ++row) {
            cur = (cur << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(cur + 63));
                cur = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((cur << (6 - filled)) + 63));
    return out;
}

// Reads "n <count>" then one "u v" pair per line; blank lines and
// '#' comments are skipped. Diagnostics carry line numbers.
inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<Edge> edges;

    auto fail = [&](const std::string& msg) {
        throw std::invalid_argument("edge list, line " + std::to_string(lineno) + ": " + msg);
    };

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == '#') continue;
        if (n < 0) {
            if (tok != "n") fail("expected header 'n <count>'");
            long long count = 0;
            if (!(ls >> count) || count < 0) fail("expected a nonnegative vertex count");
            if (count > 100000) fail("vertex count implausibly large");
            std::string extra;
            if (ls >> extra) fail("unexpected token '" + extra + "' after vertex count");
            n = static_cast<int>(count);
            continue;
        }
        long long u = 0, v = 0;
        std::istringstream pair_in(line);
        if (!(pair_in >> u >> v)) fail("expected an edge 'u v'");
        std::string extra;
        if (pair_in >> extra) fail("unexpected token '" + extra + "' after edge");
        if (u < 0 || u >= n || v < 0 || v >= n)
            fail("vertex " + std::to_string(u < 0 || u >= n ? u : v) + " out of range 0.." +
                 std::to_string(n - 1));
        if (u == v) fail("loop edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (n < 0) {
        lineno = 0;
        fail("missing header 'n <count>'");
    }
    return Graph::make(n, edges);
}

}  // namespace indpoly
