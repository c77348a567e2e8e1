#pragma once

#include <cstdint>

#include "graph.hpp"

namespace dsrpm {

enum class Isomorphism { isomorphic, not_isomorphic, indeterminate };

/// Orders up to this are always decided.
inline constexpr int kIsomorphismExactOrder = 12;

/// Structural equality test: degree-sequence prefilter, then
/// individualisation-refinement search over colour-compatible bijections.
/// For orders above kIsomorphismExactOrder the search runs under `node_budget`
/// and answers `indeterminate` when the budget runs out.
Isomorphism isomorphic(const Graph& g, const Graph& h, std::uint64_t node_budget = 200000);

}  // namespace dsrpm
