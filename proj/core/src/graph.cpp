#include "dsrpm/graph.hpp"

#include <string>

#include "dsrpm/errors.hpp"

namespace dsrpm {

std::vector<int> VertexSet::members() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
}

Graph::Graph(int n) {
    if (n < 0) throw InvalidParameter("negative vertex count");
    if (n > kMaxVertices)
        throw CapacityError("order " + std::to_string(n) + " exceeds the cap of " +
                            std::to_string(kMaxVertices) + " vertices");
    rows_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

int Graph::edge_count() const {
    int twice = 0;
    for (auto r : rows_) twice += std::popcount(r);
    return twice / 2;
}

void Graph::add_edge(int u, int v) {
    const int n = order();
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw InvalidParameter("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    if (u == v) throw InvalidParameter("self-loop at vertex " + std::to_string(u));
    rows_[u] |= std::uint64_t{1} << v;
    rows_[v] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(int u, int v) {
    rows_[u] &= ~(std::uint64_t{1} << v);
    rows_[v] &= ~(std::uint64_t{1} << u);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < order(); ++u) {
        std::uint64_t higher = rows_[u] & ~((std::uint64_t{2} << u) - 1);
        for (; higher != 0; higher &= higher - 1) out.emplace_back(u, std::countr_zero(higher));
    }
    return out;
}

Graph Graph::without(VertexSet removed) const {
    std::vector<int> keep;
    std::vector<int> relabel(rows_.size(), -1);
    for (int v = 0; v < order(); ++v) {
        if (removed.contains(v)) continue;
        relabel[v] = static_cast<int>(keep.size());
        keep.push_back(v);
    }
    Graph out(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (has_edge(keep[i], keep[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

}  // namespace dsrpm
