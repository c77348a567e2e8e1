#pragma once

#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

namespace dsrpm {

/// Hard cap on the vertex count; adjacency rows are single 64-bit words.
inline constexpr int kMaxVertices = 64;

/// Subset of {0..n-1} stored as a bit mask.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t mask) : mask_(mask) {}

    static constexpr VertexSet range(int first, int count) {
        if (count <= 0) return VertexSet{};
        std::uint64_t bits = count >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << count) - 1);
        return VertexSet{bits << first};
    }

    constexpr std::uint64_t mask() const { return mask_; }
    constexpr int size() const { return std::popcount(mask_); }
    constexpr bool empty() const { return mask_ == 0; }
    constexpr bool contains(int v) const { return (mask_ >> v) & 1U; }

    constexpr void insert(int v) { mask_ |= std::uint64_t{1} << v; }
    constexpr void erase(int v) { mask_ &= ~(std::uint64_t{1} << v); }

    /// Sorted member list.
    std::vector<int> members() const;

    friend constexpr bool operator==(VertexSet, VertexSet) = default;

private:
    std::uint64_t mask_ = 0;
};

/// Simple undirected graph on vertices 0..n-1, one adjacency bit row per vertex.
///
/// Rows are kept symmetric and irreflexive by every mutator, so a Graph value
/// always satisfies the simple-graph invariants.
class Graph {
public:
    Graph() = default;
    /// Edgeless graph on `n` vertices. Throws CapacityError when n > kMaxVertices.
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return static_cast<int>(rows_.size()); }
    int edge_count() const;

    bool has_edge(int u, int v) const { return (rows_[u] >> v) & 1U; }
    std::uint64_t row(int v) const { return rows_[v]; }
    VertexSet neighbors(int v) const { return VertexSet{rows_[v]}; }
    int degree(int v) const { return std::popcount(rows_[v]); }
    VertexSet vertices() const { return VertexSet::range(0, order()); }

    /// Adds uv. Throws InvalidParameter for loops or out-of-range endpoints.
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    /// Edges (u, v) with u < v, in row-major order.
    std::vector<std::pair<int, int>> edges() const;

    /// Induced subgraph on V \ removed, relabelled in increasing vertex order.
    Graph without(VertexSet removed) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::uint64_t> rows_;
};

}  // namespace dsrpm
