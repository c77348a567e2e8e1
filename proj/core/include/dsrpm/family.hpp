#pragma once

#include <vector>

#include "graph.hpp"

namespace dsrpm {

Graph complete_graph(int n);
/// n isolated vertices (nK1).
Graph empty_graph(int n);
/// `count` vertex-disjoint copies of g.
Graph copies(const Graph& g, int count);

/// G ∪ H; H's labels are shifted by |G|.
Graph disjoint_union(const Graph& g, const Graph& h);
/// G ∨ H: the disjoint union plus every edge between the two vertex ranges.
Graph join(const Graph& g, const Graph& h);

/// Cut size s together with the odd component orders n_1 <= ... <= n_q of G - S.
struct FamilySpec {
    int n = 0;
    int s = 0;
    std::vector<int> parts;

    int q() const { return static_cast<int>(parts.size()); }

    /// Throws InvalidParameter unless parts are odd, positive, nondecreasing and s + sum = n.
    void validate() const;
    /// Extra hypotheses for the join-ordering comparison:
    /// q >= s + 2, n_{s+1} >= 3 and n_q < n − 3q + s + 3.
    bool valid_for_ordering() const;
};

/// K_s ∨ (K_{n_1} ∪ ... ∪ K_{n_q}), vertices laid out [hub | part 1 | ... | part q].
Graph proof_family(const FamilySpec& spec);

/// K_k ∨ (kK1 ∪ K3 ∪ K_{n−2k−3}) with layout [hub | kK1 | K3 | K_{n−2k−3}].
/// Requires n even, k >= 1 and n >= 2k + 6.
Graph extremal_family(int n, int k);

/// K_s ∨ (sK1 ∪ K3 ∪ K_{n−2s−3}) for a cut of size s (n even, s >= 1, n >= 2s + 6).
/// extremal_family(n, k) is cut_family(n, k); the two names follow the roles in comparisons.
Graph cut_family(int n, int s);

/// The positional blocks [hub | kK1 | K3 | big] of cut_family / extremal_family.
std::vector<VertexSet> cut_family_partition(int n, int s);

/// K_s ∨ (sK1 ∪ (q−s−1)K3 ∪ K_{n−3q+s+3}): the minimal member of a join-ordering family.
FamilySpec ordering_baseline(int n, int s, int q);

/// K_{n/2−1} ∨ (n/2+1)K1, the small-order comparison graph (even n >= 4).
Graph small_order_extremal(int n);
/// K1 ∨ (K_{n−3} ∪ 2K1), the large-order comparison graph (even n >= 4).
Graph large_order_extremal(int n);

}  // namespace dsrpm
