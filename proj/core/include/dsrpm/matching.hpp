#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace dsrpm {

/// Set of pairwise independent edges, stored with u < v and in increasing order.
struct Matching {
    std::vector<std::pair<int, int>> edges;

    int size() const { return static_cast<int>(edges.size()); }
    /// True when every edge is in g and no vertex is covered twice.
    bool is_valid_in(const Graph& g) const;
};

/// Maximum-cardinality matching (Edmonds' blossom algorithm, O(n^3)).
Matching max_matching(const Graph& g);

/// ν(G) = |V|/2; false for odd order.
bool has_perfect_matching(const Graph& g);

/// Violating set for the odd-component condition: o(G − S) > |S|.
struct TutteCertificate {
    VertexSet s;
    int odd_comp_count = 0;

    /// Recomputes o(G − S) and checks it against the stored count and |S|.
    bool verifies(const Graph& g) const;
};

/// Orders up to this are searched over all 2^n vertex subsets.
inline constexpr int kExhaustiveSubsetOrder = 16;

enum class TutteVerdict {
    certificate,  ///< a violating S was found
    none,         ///< no violating S exists
    unknown,      ///< larger graph, no perfect matching, heuristic search exhausted
};

struct TutteSearch {
    TutteVerdict verdict = TutteVerdict::unknown;
    std::optional<TutteCertificate> certificate;
};

/// For n <= kExhaustiveSubsetOrder: scans every S by increasing |S|, ties by mask order, so the
/// returned certificate is minimal; this path never consults the matching algorithm.
/// Above that, blossom decides existence and a candidate-set heuristic looks for the witness.
TutteSearch tutte_certificate(const Graph& g);

/// max over all S of (o(G − S) − |S|), by exhaustive scan (n <= kExhaustiveSubsetOrder).
int max_tutte_deficiency(const Graph& g);

/// Edge weight in {0, 1/2, 1}, stored as the number of halves.
struct HalfWeight {
    int halves = 0;

    friend bool operator==(HalfWeight, HalfWeight) = default;
};

/// Rendered as "0", "1/2" or "1".
const char* to_string(HalfWeight w);

/// Half-integral fractional perfect matching.
struct FractionalWitness {
    std::vector<std::pair<int, int>> edges;  ///< all edges of the host graph, u < v
    std::vector<HalfWeight> weights;         ///< parallel to edges

    /// Exact check that every vertex's incident weights sum to 1 and every edge is in g.
    bool verifies(const Graph& g) const;
};

/// Violating set for the isolated-vertex condition: i(G − S) > |S|.
struct IsolatedViolation {
    VertexSet s;
    int isolated = 0;

    bool verifies(const Graph& g) const;
};

struct FractionalResult {
    std::optional<FractionalWitness> witness;
    std::optional<IsolatedViolation> violation;

    bool has_fractional_pm() const { return witness.has_value(); }
};

/// Decides fractional perfect matchings through the bipartite double cover
/// (u -> v' and v -> u' for every edge uv). A perfect matching x of the cover gives
/// h(uv) = (x(u->v') + x(v->u')) / 2; a Hall violator X gives S = N(X) \ X.
FractionalResult fractional_pm(const Graph& g);

bool has_fractional_pm(const Graph& g);
std::optional<FractionalWitness> fractional_pm_witness(const Graph& g);

/// First S (by size, then mask) with i(G − S) > |S|, scanning all subsets.
/// Requires n <= kExhaustiveSubsetOrder.
std::optional<IsolatedViolation> exhaustive_isolated_violation(const Graph& g);

}  // namespace dsrpm
