#include "dsrpm/graph6.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "dsrpm/errors.hpp"

namespace dsrpm {

namespace {

constexpr int kOffset = 63;

int six_bits(std::string_view text, std::size_t pos) {
    const int c = static_cast<unsigned char>(text[pos]);
    if (c < kOffset || c > kOffset + 63) throw ParseError("graph6 byte out of range", pos);
    return c - kOffset;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    constexpr std::string_view header = ">>graph6<<";
    std::size_t base = 0;
    if (text.starts_with(header)) base = header.size();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.size() <= base) throw ParseError("empty graph6 string", base);

    std::size_t pos = base;
    long n = 0;
    if (text[pos] == '~') {
        if (pos + 1 < text.size() && text[pos + 1] == '~')
            throw ParseError("graph6 order beyond the vertex cap", pos);
        if (pos + 4 > text.size()) throw ParseError("truncated graph6 order header", text.size());
        for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | six_bits(text, pos + i);
        pos += 4;
    } else {
        n = six_bits(text, pos);
        pos += 1;
    }
    if (n > kMaxVertices) throw ParseError("graph6 order " + std::to_string(n) + " exceeds the vertex cap", base);

    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (text.size() - pos != bytes)
        throw ParseError("graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                             std::to_string(bytes),
                         pos);

    Graph g(static_cast<int>(n));
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            const int chunk = six_bits(text, pos + bit / 6);
            if ((chunk >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    }
    // Padding bits must be zero.
    for (; bit < bytes * 6; ++bit)
        if ((six_bits(text, pos + bit / 6) >> (5 - bit % 6)) & 1)
            throw ParseError("nonzero graph6 padding", pos + bit / 6);
    return g;
}

std::string write_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(n + kOffset));
    } else {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kOffset));
    }
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kOffset));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kOffset));
    return out;
}

Graph parse_edge_list(std::istream& in) {
    std::vector<std::pair<int, int>> edges;
    int declared = -1;
    int max_label = -1;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "n") {
            if (!(ls >> declared) || declared < 0) throw ParseError("bad order declaration", line_no);
            continue;
        }
        int u = 0;
        int v = 0;
        try {
            std::size_t used = 0;
            u = std::stoi(first, &used);
            if (used != first.size()) throw ParseError("bad vertex label '" + first + "'", line_no);
        } catch (const std::logic_error&) {
            throw ParseError("bad vertex label '" + first + "'", line_no);
        }
        std::string rest;
        if (!(ls >> v) || (ls >> rest)) throw ParseError("expected exactly two labels", line_no);
        if (u < 0 || v < 0) throw ParseError("negative vertex label", line_no);
        if (u == v) throw ParseError("self-loop", line_no);
        edges.emplace_back(u, v);
        max_label = std::max({max_label, u, v});
    }
    const int n = declared >= 0 ? declared : max_label + 1;
    if (max_label >= n) throw ParseError("label beyond declared order", line_no);
    if (n > kMaxVertices) throw ParseError("edge list order exceeds the vertex cap", line_no);
    return Graph::from_edges(n, edges);
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.order() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace dsrpm
