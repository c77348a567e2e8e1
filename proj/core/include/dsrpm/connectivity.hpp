#pragma once

#include <vector>

#include "graph.hpp"

namespace dsrpm {

/// Connected components of G − removed, each as a vertex set in the original labels.
/// Ordered by smallest member.
std::vector<VertexSet> components(const Graph& g, VertexSet removed = {});

bool is_connected(const Graph& g, VertexSet removed = {});

/// o(G − S).
int odd_components(const Graph& g, VertexSet s);

/// i(G − S): vertices outside S whose whole neighbourhood lies in S.
int isolated_count(const Graph& g, VertexSet s);

/// True iff |V| > k and no set of fewer than k vertices disconnects G.
/// Decided by removing every vertex subset of size < k, so the cost is
/// exponential in k.
bool is_k_connected(const Graph& g, int k);

/// Largest k with is_k_connected(g, k) (0 for disconnected or single-vertex graphs).
int vertex_connectivity(const Graph& g);

}  // namespace dsrpm
