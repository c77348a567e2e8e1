#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>

#include "family.hpp"
#include "random_graphs.hpp"
#include "report.hpp"
#include "spectra.hpp"

namespace dsrpm {

struct HarnessOptions {
    int threads = 1;
    double tol = 1e-10;
    std::ostream* progress = nullptr;  ///< periodic progress lines for long scans
};

/// Where a connectivity-k probe sample lands.
enum class ProbeOutcome {
    invalid,      ///< not k-connected, odd order, no fractional PM, or has a PM
    greater,      ///< μ(G) certified above μ(G★)
    isomorphic,   ///< G ≅ G★ (the equality case)
    violation,    ///< μ(G) not certified above μ(G★) and G not shown isomorphic to G★
};

const char* to_string(ProbeOutcome outcome);

/// Validity checks, then the μ comparison against a precomputed estimate of G★.
ProbeOutcome classify_probe_sample(const Graph& g, int k, const Graph& star, const SpectralEstimate& star_mu,
                                   double tol = 1e-10);

/// One Tutte-shaped random template for order n and connectivity k: a cut S (|S| >= k),
/// q >= |S| + 2 odd components with at most |S| singletons, occasionally an even component,
/// random internal and attaching edges, labels shuffled. Not guaranteed valid.
Graph probe_template(int n, int k, Rng& rng);

/// Structural checks of G★ = K_k ∨ (kK1 ∪ K3 ∪ K_{n−2k−3}): exactly k-connected, fractional PM,
/// no PM with the hub as Tutte certificate (o = k + 2), μ equal to the B★ quartic root within 1e-6,
/// μ > n + k + 3 and W equal to its closed form. Requires n even and n >= 8k + 6.
SuiteReport verify_extremal_family(int n, int k, const HarnessOptions& opt = {});

/// Join-ordering chain: μ(proof_family(spec)) vs μ(K_s ∨ (sK1 ∪ K3 ∪ K_{n−2s−3})), strict unless
/// the parts are (1, ..., 1, 3, n − 2s − 3), in which case the two graphs must be isomorphic;
/// and, for s >= k + 1 and n >= 8k + 6, μ(G2) > μ(G★(n, k)).
SuiteReport verify_ordering_chain(const FamilySpec& spec, int k, const HarnessOptions& opt = {});

/// Restricts a labeled enumeration to masks [begin, end) of the 2^{n(n−1)/2} edge subsets.
struct MaskRange {
    std::uint64_t begin = 0;
    std::uint64_t end = 0;
};

/// Chunk `index` of `count` equal slices of the full mask range for order n.
MaskRange chunk_range(int n, int index, int count);

/// Small-order statement, all labeled graphs (n ∈ {4, 6, 8}):
/// μ(G) <= μ(K_{n/2−1} ∨ (n/2+1)K1) implies a perfect matching or G ≅ that graph.
/// Graphs with a perfect matching are skipped before any eigensolve.
SuiteReport exhaustive_theorem_1_1(int n, const HarnessOptions& opt = {},
                                   std::optional<MaskRange> range = std::nullopt);

/// Large-order statement sampled on `trials` random connected graphs (even n >= 10)
/// against K1 ∨ (K_{n−3} ∪ 2K1).
SuiteReport sampled_theorem_1_1(int n, std::uint64_t trials, std::uint64_t seed,
                                const HarnessOptions& opt = {});

/// Draws k-connected, even-order graphs with a fractional PM and no PM from Tutte-shaped
/// templates and checks μ(G) > μ(G★) or G ≅ G★. Samples failing the validity checks are
/// rejected and counted, never reported as violations.
SuiteReport probe_theorem_1_3(int n, int k, std::uint64_t trials, std::uint64_t seed,
                              const HarnessOptions& opt = {});

/// Edge insertion strictly lowers μ: every non-edge of `graphs` random connected graphs
/// (n ∈ [5, 14]) must compare Greater at tol 1e-9. Also checks μ >= 2W/n on the same corpus.
SuiteReport lemma_monotonicity_suite(std::uint64_t seed, int graphs = 200, const HarnessOptions& opt = {});

/// Join ordering on `specs` random FamilySpecs satisfying the ordering hypotheses.
SuiteReport lemma_ordering_suite(std::uint64_t seed, int specs = 100, const HarnessOptions& opt = {});

/// μ(K1 ∨ (K1 ∪ K3 ∪ K_{n−5})) > μ(K1 ∨ (K_{n−3} ∪ 2K1)) for even n in [lo, hi], with margins.
SuiteReport corollary_comparison_suite(int lo = 14, int hi = 40, const HarnessOptions& opt = {});

/// Exact equality of char_poly(quotient of D(K_s ∨ (sK1 ∪ K3 ∪ K_{n−2s−3}))) with the closed-form
/// quartic, for s in [1, max_s] and even n in [2s + 6, max_n].
SuiteReport quotient_coefficient_suite(int max_n = 60, int max_s = 6);

/// |μ(G★(n, k)) − largest root of f_{B★}| <= 1e-6 and the Wiener / μ > n + k + 3 chain, for
/// k in [1, max_k] and even n in [8k + 6, 8k + 26].
SuiteReport perron_quotient_suite(int max_k = 3, const HarnessOptions& opt = {});

/// The proof-chain identities and sign conditions on the (n, k, s) grid, plus the threshold
/// expansion h(8k+6) for k in [1, max_threshold_k].
SuiteReport proof_identity_suite(int max_threshold_k = 50);

/// All of the above lemma suites merged into one report.
SuiteReport lemma_suites(std::uint64_t seed, const HarnessOptions& opt = {});

/// Optional sweep below n = 8k + 6: probes the conclusion where the theorem makes no claim.
/// Exploratory only; violations here are findings, not failures of the library.
SuiteReport below_threshold_sweep(int k, std::uint64_t trials, std::uint64_t seed,
                                  const HarnessOptions& opt = {});

}  // namespace dsrpm
