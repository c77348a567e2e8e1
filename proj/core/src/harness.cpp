#include "dsrpm/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>
#include <string>
#include <thread>

#include "dsrpm/connectivity.hpp"
#include "dsrpm/errors.hpp"
#include "dsrpm/graph6.hpp"
#include "dsrpm/isomorphism.hpp"
#include "dsrpm/matching.hpp"
#include "dsrpm/proof_scalars.hpp"
#include "dsrpm/quotient.hpp"

namespace dsrpm {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void add_violation(SuiteReport& r, std::string predicate, const Graph& witness, Json detail = Json::object()) {
    r.violations.push_back(Violation{std::move(predicate), write_graph6(witness), std::move(detail)});
}

// Evaluates `check`; on failure records a violation for `witness`.
void expect(SuiteReport& r, bool check, const std::string& predicate, const Graph& witness,
            Json detail = Json::object()) {
    ++r.cases;
    if (!check) add_violation(r, predicate, witness, std::move(detail));
}

Json bracket_json(const SpectralEstimate& e) {
    return {{"value", format_value(e.value)}, {"lo", format_value(e.lo)}, {"hi", format_value(e.hi)}};
}

Json parts_json(const FamilySpec& spec) {
    return {{"n", spec.n}, {"s", spec.s}, {"parts", spec.parts}};
}

// Runs fn(chunk, begin, end) over `threads` contiguous slices of [0, total) and merges the
// per-chunk reports in chunk order, so the result does not depend on scheduling.
template <class Fn>
SuiteReport run_chunks(std::uint64_t total, int threads, Fn&& fn) {
    threads = std::max(1, threads);
    if (static_cast<std::uint64_t>(threads) > total) threads = static_cast<int>(std::max<std::uint64_t>(1, total));
    std::vector<SuiteReport> parts(static_cast<std::size_t>(threads));
    auto slice = [&](int c) {
        const std::uint64_t begin = total / threads * c + std::min<std::uint64_t>(c, total % threads);
        const std::uint64_t len = total / threads + (static_cast<std::uint64_t>(c) < total % threads ? 1 : 0);
        parts[c] = fn(c, begin, begin + len);
    };
    if (threads == 1) {
        slice(0);
    } else {
        std::vector<std::thread> pool;
        for (int c = 0; c < threads; ++c) pool.emplace_back(slice, c);
        for (auto& t : pool) t.join();
    }
    SuiteReport out = std::move(parts[0]);
    for (std::size_t c = 1; c < parts.size(); ++c) out.merge(parts[c]);
    return out;
}

std::int64_t stat_int(const SuiteReport& r, const char* key) {
    return r.stats.contains(key) ? r.stats[key].get<std::int64_t>() : 0;
}

void bump(SuiteReport& r, const char* key, std::int64_t by = 1) { r.stats[key] = stat_int(r, key) + by; }

}  // namespace

// ---------------------------------------------------------------------------------------------
// Extremal family and ordering chain

SuiteReport verify_extremal_family(int n, int k, const HarnessOptions& opt) {
    if (k < 1) throw InvalidParameter("k must be positive");
    if (n % 2 != 0) throw InvalidParameter("n must be even");
    if (n < 8 * k + 6) throw InvalidParameter("n must satisfy n >= 8k + 6");
    const auto start = Clock::now();
    SuiteReport r;
    r.suite = "theorem13-family";
    r.parameters = {{"n", n}, {"k", k}, {"tol", opt.tol}};

    const Graph g = extremal_family(n, k);
    const VertexSet hub = VertexSet::range(0, k);

    // (a) exactly k-connected
    expect(r, is_k_connected(g, k), "G* is k-connected", g);
    expect(r, !is_k_connected(g, k + 1), "G* is not (k+1)-connected", g);

    // (b) fractional perfect matching
    const FractionalResult frac = fractional_pm(g);
    expect(r, frac.witness && frac.witness->verifies(g), "G* has a verified half-integral fractional PM", g);
    if (n <= kExhaustiveSubsetOrder) {
        const auto viol = exhaustive_isolated_violation(g);
        expect(r, !viol.has_value(), "exhaustive i(G-S) <= |S| over all subsets", g);
        bump(r, "exhaustive_subsets_checked", std::int64_t{1} << n);
    }

    // (c) no perfect matching; the hub is a Tutte certificate with o = k + 2
    expect(r, !has_perfect_matching(g), "G* has no perfect matching", g);
    const int odd = odd_components(g, hub);
    expect(r, odd == k + 2, "o(G* - hub) = k + 2", g, {{"odd_components", odd}});
    expect(r, TutteCertificate{hub, odd}.verifies(g), "hub certificate verifies", g);
    const int nu = max_matching(g).size();
    expect(r, 2 * nu == n - 2, "matching number is (n - 2)/2", g, {{"matching_number", nu}});
    const TutteSearch search = tutte_certificate(g);
    expect(r, search.verdict == TutteVerdict::certificate && search.certificate->verifies(g),
           "Tutte search returns a verifying certificate", g);
    Json cert = Json::object();
    if (search.certificate)
        cert = {{"S", search.certificate->s.members()}, {"odd_components", search.certificate->odd_comp_count}};

    // (d) Perron root equals the quartic root
    const DistanceMatrix d = distance_matrix(g);
    const SpectralEstimate mu = distance_spectral_radius(d, opt.tol);
    const Rational lower = mu_lower_bound_wiener(d);
    const RootBracket root =
        largest_root(paper_poly_Bstar(n, k), lower, Rational{d.max_row_sum()}, Rational{1, 1000000000000LL});
    const long double diff = std::fabs(static_cast<long double>(mu.value) - root.value());
    expect(r, diff <= 1e-6L, "|mu(G*) - largest root of f_B*| <= 1e-6", g, {{"difference", format_value(diff)}});

    const ExactMatrix q = quotient_matrix(ExactMatrix::from(d), Partition{cut_family_partition(n, k)});
    expect(r, is_equitable(ExactMatrix::from(d), Partition{cut_family_partition(n, k)}), "positional partition is equitable", g);
    expect(r, char_poly(q) == paper_poly_Bstar(n, k), "char poly of the quotient equals f_B*", g);

    // (e) Wiener closed form and mu > n + k + 3
    const std::int64_t w = wiener_index(d);
    expect(r, Rational{w} == extremal_wiener_closed_form(n, k), "W(G*) matches its closed form", g, {{"wiener", w}});
    expect(r, root.lo > Rational{n + k + 3}, "largest root of f_B* exceeds n + k + 3", g);
    expect(r, mu.lo > static_cast<long double>(n + k + 3), "mu(G*) certified above n + k + 3", g);

    r.stats = {{"mu", bracket_json(mu)},
               {"quartic_root", {{"lo", format_value(to_long_double(root.lo))}, {"hi", format_value(to_long_double(root.hi))}}},
               {"wiener", w},
               {"wiener_bound", to_string(lower)},
               {"certificate", cert},
               {"hub", hub.members()}};
    r.seconds = seconds_since(start);
    return r;
}

SuiteReport verify_ordering_chain(const FamilySpec& spec, int k, const HarnessOptions& opt) {
    spec.validate();
    // The strict bound on n_q is dropped here so the equality shape (1, ..., 1, 3, n − 2s − 3) is admitted.
    if (spec.s < 1 || spec.q() < spec.s + 2 || spec.parts[static_cast<std::size_t>(spec.s)] < 3)
        throw InvalidParameter("family needs s >= 1, q >= s + 2 and n_{s+1} >= 3");
    if (k < 1 || spec.s < k) throw InvalidParameter("need 1 <= k <= s");
    if (spec.n % 2 != 0) throw InvalidParameter("n must be even");
    const auto start = Clock::now();
    SuiteReport r;
    r.suite = "ordering-chain";
    r.parameters = parts_json(spec);
    r.parameters["k"] = k;

    const Graph g1 = proof_family(spec);
    const Graph g2 = cut_family(spec.n, spec.s);
    const SpectralEstimate mu1 = distance_spectral_radius(g1, opt.tol);
    const SpectralEstimate mu2 = distance_spectral_radius(g2, opt.tol);
    const MuOrder first = compare_estimates(mu1, mu2);

    std::vector<int> base(static_cast<std::size_t>(spec.s), 1);
    base.push_back(3);
    base.push_back(spec.n - 2 * spec.s - 3);
    const bool equality_shape = spec.parts == base;
    if (equality_shape) {
        const Isomorphism iso = isomorphic(g1, g2);
        expect(r, first == MuOrder::indeterminate && iso == Isomorphism::isomorphic,
               "equality case: G1 isomorphic to G2, brackets overlap", g1);
        r.stats["equality_case"] = true;
    } else {
        expect(r, first == MuOrder::greater, "mu(G1) > mu(K_s v (sK1 u K3 u K_{n-2s-3}))", g1,
               {{"mu_G1", bracket_json(mu1)}, {"mu_G2", bracket_json(mu2)}});
        r.stats["equality_case"] = false;
    }
    r.stats["mu_G1"] = bracket_json(mu1);
    r.stats["mu_G2"] = bracket_json(mu2);
    r.stats["G1_vs_G2"] = to_string(first);

    if (spec.s >= k + 1) {
        if (spec.n >= 8 * k + 6) {
            const Graph star = extremal_family(spec.n, k);
            const SpectralEstimate mu_star = distance_spectral_radius(star, opt.tol);
            const MuOrder second = compare_estimates(mu2, mu_star);
            expect(r, second == MuOrder::greater, "s >= k + 1: mu(G2) > mu(G*)", g2,
                   {{"mu_G2", bracket_json(mu2)}, {"mu_star", bracket_json(mu_star)}});
            r.stats["mu_star"] = bracket_json(mu_star);
            r.stats["G2_vs_star"] = to_string(second);
        } else {
            r.stats["G2_vs_star"] = "skipped: n < 8k + 6";
        }
    }
    r.seconds = seconds_since(start);
    return r;
}

// ---------------------------------------------------------------------------------------------
// Small-order exhaustive scan

MaskRange chunk_range(int n, int index, int count) {
    if (n < 1 || n > 10) throw InvalidParameter("labeled enumeration supports 1 <= n <= 10");
    if (count < 1 || index < 0 || index >= count) throw InvalidParameter("chunk index must satisfy 0 <= i < m");
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    const std::uint64_t base = total / count;
    const std::uint64_t extra = total % count;
    const std::uint64_t begin = base * index + std::min<std::uint64_t>(index, extra);
    return {begin, begin + base + (static_cast<std::uint64_t>(index) < extra ? 1 : 0)};
}

namespace {

// Adjacency rows for edge mask bits laid out in graph6 order (j = 1.., i < j).
struct SmallGraph {
    int n;
    std::uint64_t rows[10];
};

SmallGraph small_from_mask(int n, std::uint64_t mask) {
    SmallGraph g{n, {}};
    int bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if ((mask >> bit) & 1U) {
                g.rows[i] |= std::uint64_t{1} << j;
                g.rows[j] |= std::uint64_t{1} << i;
            }
    return g;
}

bool small_connected(const SmallGraph& g) {
    const std::uint64_t all = (std::uint64_t{1} << g.n) - 1;
    std::uint64_t seen = 1;
    std::uint64_t frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t f = frontier; f; f &= f - 1) next |= g.rows[std::countr_zero(f)];
        next &= ~seen;
        seen |= next;
        frontier = next;
    }
    return seen == all;
}

bool small_has_pm(const SmallGraph& g, std::uint64_t avail) {
    if (avail == 0) return true;
    const int v = std::countr_zero(avail);
    const std::uint64_t rest = avail & ~(std::uint64_t{1} << v);
    for (std::uint64_t c = g.rows[v] & rest; c; c &= c - 1)
        if (small_has_pm(g, rest & ~(std::uint64_t{1} << std::countr_zero(c)))) return true;
    return false;
}

Graph to_graph(const SmallGraph& s) {
    Graph g(s.n);
    for (int u = 0; u < s.n; ++u)
        for (std::uint64_t r = s.rows[u]; r; r &= r - 1)
            if (std::countr_zero(r) > u) g.add_edge(u, std::countr_zero(r));
    return g;
}

// Shared comparison for the exhaustive and sampled PM scans: a PM-less connected g must sit strictly
// above the comparison graph or be isomorphic to it.
void check_pmless(SuiteReport& r, const Graph& g, const DistanceMatrix& d, const Graph& ext,
                  const SpectralEstimate& ext_mu, double tol) {
    const long double bound = static_cast<long double>(2 * wiener_index(d)) / d.order();
    const long double eps = std::numeric_limits<long double>::epsilon();
    if (bound > ext_mu.hi * (1 + 8 * eps)) {
        bump(r, "prefiltered_by_wiener_bound");
        return;
    }
    bump(r, "eigensolves");
    const SpectralEstimate mu = distance_spectral_radius(d, tol);
    if (compare_estimates(mu, ext_mu) == MuOrder::greater) return;
    const Isomorphism iso = isomorphic(g, ext);
    if (iso == Isomorphism::isomorphic) {
        bump(r, "equality_cases");
        return;
    }
    add_violation(r, "mu(G) <= mu(extremal) but G has no perfect matching and is not the extremal graph", g,
                  {{"mu", bracket_json(mu)}, {"mu_extremal", bracket_json(ext_mu)}, {"isomorphism", iso == Isomorphism::indeterminate ? "indeterminate" : "no"}});
}

}  // namespace

SuiteReport exhaustive_theorem_1_1(int n, const HarnessOptions& opt, std::optional<MaskRange> range) {
    if (n != 4 && n != 6 && n != 8) throw InvalidParameter("exhaustive variant needs n in {4, 6, 8}");
    const auto start = Clock::now();
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    const MaskRange full = range.value_or(MaskRange{0, total});
    if (full.begin > full.end || full.end > total) throw InvalidParameter("mask range outside the enumeration");

    const Graph ext = small_order_extremal(n);
    const SpectralEstimate ext_mu = distance_spectral_radius(ext, opt.tol);
    const std::uint64_t span = full.end - full.begin;

    SuiteReport r = run_chunks(span, opt.threads, [&](int chunk, std::uint64_t b, std::uint64_t e) {
        SuiteReport part;
        std::int64_t connected = 0;
        std::int64_t with_pm = 0;
        const std::uint64_t report_every = std::uint64_t{1} << 24;
        for (std::uint64_t idx = b; idx < e; ++idx) {
            const std::uint64_t mask = full.begin + idx;
            const SmallGraph sg = small_from_mask(n, mask);
            if (!small_connected(sg)) continue;
            ++connected;
            if (small_has_pm(sg, (std::uint64_t{1} << n) - 1)) {
                ++with_pm;
                continue;
            }
            const Graph g = to_graph(sg);
            check_pmless(part, g, distance_matrix(g), ext, ext_mu, opt.tol);
            if (opt.progress && chunk == 0 && (idx - b) % report_every == report_every - 1)
                *opt.progress << "theorem11 n=" << n << ": chunk 0 at " << (idx - b + 1) << "/" << (e - b) << std::endl;
        }
        part.cases = static_cast<std::uint64_t>(connected);
        part.stats["connected"] = connected;
        part.stats["with_perfect_matching"] = with_pm;
        part.stats["without_perfect_matching"] = connected - with_pm;
        return part;
    });
    r.suite = "theorem11";
    r.parameters = {{"n", n}, {"variant", "small"}, {"mask_begin", full.begin}, {"mask_end", full.end}, {"tol", opt.tol}};
    r.stats["labeled_graphs"] = span;
    r.stats["mu_extremal"] = bracket_json(ext_mu);
    r.stats["extremal"] = write_graph6(ext);
    r.seconds = seconds_since(start);
    return r;
}

SuiteReport sampled_theorem_1_1(int n, std::uint64_t trials, std::uint64_t seed, const HarnessOptions& opt) {
    if (n < 10 || n % 2 != 0 || n > kMaxVertices) throw InvalidParameter("sampled variant needs even n >= 10");
    const auto start = Clock::now();
    const Graph ext = large_order_extremal(n);
    const SpectralEstimate ext_mu = distance_spectral_radius(ext, opt.tol);
    SuiteReport r = run_chunks(trials, opt.threads, [&](int, std::uint64_t b, std::uint64_t e) {
        SuiteReport part;
        std::int64_t pmless = 0;
        for (std::uint64_t t = b; t < e; ++t) {
            Rng rng(derive_seed(seed, t));
            const Graph g = random_connected_graph(n, rng);
            ++part.cases;
            if (has_perfect_matching(g)) continue;
            ++pmless;
            check_pmless(part, g, distance_matrix(g), ext, ext_mu, opt.tol);
        }
        part.stats["without_perfect_matching"] = pmless;
        return part;
    });
    r.suite = "theorem11";
    r.parameters = {{"n", n}, {"variant", "large"}, {"trials", trials}, {"seed", seed}, {"tol", opt.tol}};
    r.stats["mu_extremal"] = bracket_json(ext_mu);
    r.stats["extremal"] = write_graph6(ext);
    r.seconds = seconds_since(start);
    return r;
}

// ---------------------------------------------------------------------------------------------
// Connectivity-k probes

const char* to_string(ProbeOutcome outcome) {
    switch (outcome) {
        case ProbeOutcome::invalid: return "invalid";
        case ProbeOutcome::greater: return "greater";
        case ProbeOutcome::isomorphic: return "isomorphic";
        case ProbeOutcome::violation: return "violation";
    }
    return "?";
}

ProbeOutcome classify_probe_sample(const Graph& g, int k, const Graph& star, const SpectralEstimate& star_mu,
                                   double tol) {
    if (g.order() % 2 != 0 || !is_k_connected(g, k) || !has_fractional_pm(g) || has_perfect_matching(g))
        return ProbeOutcome::invalid;
    const SpectralEstimate mu = distance_spectral_radius(g, tol);
    if (compare_estimates(mu, star_mu) == MuOrder::greater) return ProbeOutcome::greater;
    return isomorphic(g, star) == Isomorphism::isomorphic ? ProbeOutcome::isomorphic : ProbeOutcome::violation;
}

Graph probe_template(int n, int k, Rng& rng) {
    if (n < 2 * k + 6) throw InvalidParameter("template needs n >= 2k + 6");
    for (;;) {
        const int s = uniform_int(rng, k, (n - 6) / 2);
        const int even_part = (uniform_real(rng, 0, 1) < 0.25) ? 2 * uniform_int(rng, 1, 2) : 0;
        const int budget = n - s - even_part;  // total order of the odd components
        // q odd parts with at most s singletons: need q ≡ budget (mod 2) and s + 3(q − s) <= budget.
        std::vector<int> qs;
        for (int q = s + 2; q <= budget; ++q)
            if ((q - budget) % 2 == 0 && std::min(q, s) + 3 * std::max(0, q - s) <= budget) qs.push_back(q);
        if (qs.empty()) continue;
        const int q = qs[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(qs.size()) - 1))];
        // ones + 3(q − ones) <= budget
        const int min_ones = std::max(0, (3 * q - budget + 1) / 2);
        const int max_ones = std::min(q, s);
        if (min_ones > max_ones) continue;
        const int ones = uniform_int(rng, min_ones, max_ones);
        const int big = q - ones;
        int spare = budget - ones - 3 * big;
        if (spare < 0 || spare % 2 != 0 || big == 0) continue;
        std::vector<int> parts(static_cast<std::size_t>(ones), 1);
        std::vector<int> larger(static_cast<std::size_t>(big), 3);
        while (spare > 0) {
            larger[static_cast<std::size_t>(uniform_int(rng, 0, big - 1))] += 2;
            spare -= 2;
        }
        parts.insert(parts.end(), larger.begin(), larger.end());
        if (even_part > 0) parts.push_back(even_part);

        const double p_cut = uniform_real(rng, 0, 1) < 0.3 ? 1.0 : uniform_real(rng, 0.3, 1.0);
        const double p_in = uniform_real(rng, 0, 1) < 0.3 ? 1.0 : uniform_real(rng, 0.3, 1.0);
        const double p_att = uniform_real(rng, 0, 1) < 0.3 ? 1.0 : uniform_real(rng, 0.3, 1.0);
        std::bernoulli_distribution cut_coin(p_cut);
        std::bernoulli_distribution in_coin(p_in);
        std::bernoulli_distribution att_coin(p_att);

        Graph g(n);
        for (int u = 0; u < s; ++u)
            for (int v = u + 1; v < s; ++v)
                if (cut_coin(rng)) g.add_edge(u, v);
        int offset = s;
        for (int part : parts) {
            // connected: random tree plus extra edges
            for (int v = 1; v < part; ++v) g.add_edge(offset + uniform_int(rng, 0, v - 1), offset + v);
            for (int u = 0; u < part; ++u)
                for (int v = u + 1; v < part; ++v)
                    if (in_coin(rng)) g.add_edge(offset + u, offset + v);
            // at least k distinct cut vertices reach the component
            std::vector<int> cut(static_cast<std::size_t>(s));
            std::iota(cut.begin(), cut.end(), 0);
            std::shuffle(cut.begin(), cut.end(), rng);
            for (int i = 0; i < std::min(k, s); ++i) g.add_edge(cut[i], offset + uniform_int(rng, 0, part - 1));
            for (int c = 0; c < s; ++c)
                for (int v = 0; v < part; ++v)
                    if (att_coin(rng)) g.add_edge(c, offset + v);
            offset += part;
        }

        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        Graph shuffled(n);
        for (auto [u, v] : g.edges()) shuffled.add_edge(perm[u], perm[v]);
        return shuffled;
    }
}

namespace {

SuiteReport probe_impl(const char* suite, int n, int k, std::uint64_t trials, std::uint64_t seed,
                       const HarnessOptions& opt) {
    const auto start = Clock::now();
    const Graph star = extremal_family(n, k);
    const SpectralEstimate star_mu = distance_spectral_radius(star, opt.tol);
    SuiteReport r = run_chunks(trials, opt.threads, [&](int, std::uint64_t b, std::uint64_t e) {
        SuiteReport part;
        std::int64_t accepted = 0;
        std::int64_t rejected = 0;
        std::int64_t equal = 0;
        for (std::uint64_t t = b; t < e; ++t) {
            Rng rng(derive_seed(seed, t));
            // Rejection sampling: redraw templates within the trial until one is valid.
            for (int attempt = 0;; ++attempt) {
                const Graph g = probe_template(n, k, rng);
                const ProbeOutcome outcome = classify_probe_sample(g, k, star, star_mu, opt.tol);
                if (outcome == ProbeOutcome::invalid) {
                    ++rejected;
                    if (attempt < 1000) continue;
                    break;
                }
                ++accepted;
                ++part.cases;
                if (outcome == ProbeOutcome::isomorphic) ++equal;
                if (outcome == ProbeOutcome::violation) {
                    const SpectralEstimate mu = distance_spectral_radius(g, opt.tol);
                    add_violation(part, "mu(G) <= mu(G*) for a valid sample not isomorphic to G*", g,
                                  {{"mu", bracket_json(mu)}, {"mu_star", bracket_json(star_mu)}});
                }
                break;
            }
        }
        part.stats["accepted"] = accepted;
        part.stats["rejected"] = rejected;
        part.stats["equality_cases"] = equal;
        return part;
    });
    r.suite = suite;
    r.parameters = {{"n", n}, {"k", k}, {"trials", trials}, {"seed", seed}, {"tol", opt.tol}};
    const auto acc = stat_int(r, "accepted");
    const auto rej = stat_int(r, "rejected");
    r.stats["acceptance_rate"] = acc + rej == 0 ? 0.0 : static_cast<double>(acc) / static_cast<double>(acc + rej);
    r.stats["mu_star"] = bracket_json(star_mu);
    r.seconds = seconds_since(start);
    return r;
}

}  // namespace

SuiteReport probe_theorem_1_3(int n, int k, std::uint64_t trials, std::uint64_t seed, const HarnessOptions& opt) {
    if (k < 1) throw InvalidParameter("k must be positive");
    if (n % 2 != 0) throw InvalidParameter("n must be even");
    if (n < 8 * k + 6) throw InvalidParameter("n must satisfy n >= 8k + 6");
    if (n > kMaxVertices) throw CapacityError("n exceeds the vertex cap");
    return probe_impl("probe13", n, k, trials, seed, opt);
}

SuiteReport below_threshold_sweep(int k, std::uint64_t trials, std::uint64_t seed, const HarnessOptions& opt) {
    if (k < 1) throw InvalidParameter("k must be positive");
    const auto start = Clock::now();
    SuiteReport r;
    r.suite = "probe13-sweep";
    r.parameters = {{"k", k}, {"trials_per_order", trials}, {"seed", seed}};
    Json per_order = Json::array();
    for (int n = 2 * k + 6; n < 8 * k + 6; n += 2) {
        SuiteReport one = probe_impl("probe13", n, k, trials, derive_seed(seed, static_cast<std::uint64_t>(n)), opt);
        per_order.push_back({{"n", n}, {"cases", one.cases}, {"violations", one.violations.size()}});
        r.cases += one.cases;
        r.violations.insert(r.violations.end(), one.violations.begin(), one.violations.end());
    }
    r.stats["per_order"] = per_order;
    r.stats["exploratory"] = true;
    r.seconds = seconds_since(start);
    return r;
}

// ---------------------------------------------------------------------------------------------
// Property suites

SuiteReport lemma_monotonicity_suite(std::uint64_t seed, int graphs, const HarnessOptions& opt) {
    const auto start = Clock::now();
    constexpr double kTol = 1e-9;
    SuiteReport r = run_chunks(static_cast<std::uint64_t>(graphs), opt.threads, [&](int, std::uint64_t b, std::uint64_t e) {
        SuiteReport part;
        std::int64_t insertions = 0;
        std::int64_t indeterminate = 0;
        std::int64_t bound_checks = 0;
        auto check_bound = [&](const Graph& g, const DistanceMatrix& d, const SpectralEstimate& mu) {
            ++bound_checks;
            const Rational lower = mu_lower_bound_wiener(d);
            const long double lower_ld = to_long_double(lower);
            expect(part, mu.hi >= lower_ld && mu.value >= lower_ld - kTol, "mu(G) >= 2W/n", g,
                   {{"mu", bracket_json(mu)}, {"bound", to_string(lower)}});
            if (d.min_row_sum() == d.max_row_sum())
                expect(part, std::fabs(static_cast<long double>(mu.value) - lower_ld) <= kTol,
                       "transmission-regular: mu(G) = 2W/n", g);
        };
        for (std::uint64_t i = b; i < e; ++i) {
            Rng rng(derive_seed(seed, i));
            const int n = uniform_int(rng, 5, 14);
            const Graph g = random_connected_graph(n, rng);
            const DistanceMatrix d = distance_matrix(g);
            const SpectralEstimate mu = distance_spectral_radius(d, kTol);
            check_bound(g, d, mu);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    if (g.has_edge(u, v)) continue;
                    Graph h = g;
                    h.add_edge(u, v);
                    const DistanceMatrix dh = distance_matrix(h);
                    const SpectralEstimate mh = distance_spectral_radius(dh, kTol);
                    check_bound(h, dh, mh);
                    ++insertions;
                    const MuOrder order = compare_estimates(mu, mh);
                    if (order == MuOrder::indeterminate) ++indeterminate;
                    expect(part, order == MuOrder::greater, "mu(G) > mu(G + uv)", g,
                           {{"u", u}, {"v", v}, {"order", to_string(order)}, {"mu", bracket_json(mu)}, {"mu_plus", bracket_json(mh)}});
                }
        }
        part.stats["edge_insertions"] = insertions;
        part.stats["indeterminate"] = indeterminate;
        part.stats["wiener_bound_checks"] = bound_checks;
        return part;
    });
    r.suite = "lemma-monotonicity";
    r.parameters = {{"seed", seed}, {"graphs", graphs}, {"tol", kTol}};
    r.seconds = seconds_since(start);
    return r;
}

namespace {

FamilySpec random_ordering_spec(Rng& rng) {
    for (;;) {
        FamilySpec spec;
        spec.s = uniform_int(rng, 1, 4);
        const int q = uniform_int(rng, spec.s + 2, spec.s + 5);
        const int ones = uniform_int(rng, 0, spec.s);
        for (int i = 0; i < q; ++i) spec.parts.push_back(i < ones ? 1 : 2 * uniform_int(rng, 1, 5) + 1);
        std::sort(spec.parts.begin(), spec.parts.end());
        spec.n = spec.s + std::accumulate(spec.parts.begin(), spec.parts.end(), 0);
        if (spec.n <= 48 && spec.valid_for_ordering()) return spec;
    }
}

}  // namespace

SuiteReport lemma_ordering_suite(std::uint64_t seed, int specs, const HarnessOptions& opt) {
    const auto start = Clock::now();
    SuiteReport r = run_chunks(static_cast<std::uint64_t>(specs), opt.threads, [&](int, std::uint64_t b, std::uint64_t e) {
        SuiteReport part;
        for (std::uint64_t i = b; i < e; ++i) {
            Rng rng(derive_seed(seed ^ 0x5EC0ULL, i));
            const FamilySpec spec = random_ordering_spec(rng);
            const FamilySpec base = ordering_baseline(spec.n, spec.s, spec.q());
            const Graph g = proof_family(spec);
            const SpectralEstimate mu = distance_spectral_radius(g, opt.tol);
            const SpectralEstimate mb = distance_spectral_radius(proof_family(base), opt.tol);
            expect(part, compare_estimates(mu, mb) == MuOrder::greater,
                   "mu(K_s v (K_n1 u ... u K_nq)) > mu(K_s v (sK1 u (q-s-1)K3 u K_{n-3q+s+3}))", g,
                   {{"spec", parts_json(spec)}, {"mu", bracket_json(mu)}, {"mu_baseline", bracket_json(mb)}});
        }
        return part;
    });
    r.suite = "lemma-ordering";
    r.parameters = {{"seed", seed}, {"specs", specs}, {"tol", opt.tol}};
    r.seconds = seconds_since(start);
    return r;
}

SuiteReport corollary_comparison_suite(int lo, int hi, const HarnessOptions& opt) {
    if (lo < 6 || lo % 2 != 0 || hi < lo || hi > kMaxVertices) throw InvalidParameter("need even 6 <= lo <= hi <= 64");
    const auto start = Clock::now();
    SuiteReport r;
    r.suite = "corollary14";
    r.parameters = {{"n_min", lo}, {"n_max", hi}, {"tol", opt.tol}};
    Json margins = Json::array();
    std::vector<long double> values;
    for (int n = lo; n <= hi; n += 2) {
        const Graph a = cut_family(n, 1);
        const Graph b = large_order_extremal(n);
        const SpectralEstimate ma = distance_spectral_radius(a, opt.tol);
        const SpectralEstimate mb = distance_spectral_radius(b, opt.tol);
        const MuOrder order = compare_estimates(ma, mb);
        expect(r, order == MuOrder::greater, "mu(K1 v (K1 u K3 u K_{n-5})) > mu(K1 v (K_{n-3} u 2K1))", a,
               {{"n", n}, {"order", to_string(order)}});
        const long double margin = ma.lo - mb.hi;
        values.push_back(margin);
        margins.push_back({{"n", n}, {"margin_lower_bound", format_value(margin)}});
    }
    std::string trend = "constant";
    if (values.size() >= 2) {
        const bool up = std::adjacent_find(values.begin(), values.end(), std::greater_equal<>()) == values.end();
        const bool down = std::adjacent_find(values.begin(), values.end(), std::less_equal<>()) == values.end();
        trend = up ? "increasing" : (down ? "decreasing" : "mixed");
    }
    r.stats["margins"] = margins;
    r.stats["margin_trend"] = trend;
    r.seconds = seconds_since(start);
    return r;
}

SuiteReport lemma_suites(std::uint64_t seed, const HarnessOptions& opt) {
    const auto start = Clock::now();
    SuiteReport r;
    r.suite = "lemmas";
    r.parameters = {{"seed", seed}};
    Json per_suite = Json::array();
    for (SuiteReport part : {lemma_monotonicity_suite(seed, 200, opt), lemma_ordering_suite(seed, 100, opt),
                             corollary_comparison_suite(14, 40, opt)}) {
        per_suite.push_back(part.to_json(false));
        r.cases += part.cases;
        r.violations.insert(r.violations.end(), part.violations.begin(), part.violations.end());
    }
    r.stats["suites"] = per_suite;
    r.seconds = seconds_since(start);
    return r;
}

// ---------------------------------------------------------------------------------------------
// Quotient algebra suites

SuiteReport quotient_coefficient_suite(int max_n, int max_s) {
    if (max_n > kMaxVertices) throw CapacityError("max_n exceeds the vertex cap");
    const auto start = Clock::now();
    SuiteReport r;
    r.suite = "quotient-coefficients";
    r.parameters = {{"max_n", max_n}, {"max_s", max_s}};
    for (int s = 1; s <= max_s; ++s) {
        for (int n = 2 * s + 6; n <= max_n; n += 2) {
            const Graph g = cut_family(n, s);
            const ExactMatrix d = ExactMatrix::from(distance_matrix(g));
            const Partition pi{cut_family_partition(n, s)};
            expect(r, is_equitable(d, pi), "positional partition is equitable", g, {{"n", n}, {"s", s}});
            const ExactMatrix q = quotient_matrix(d, pi);
            expect(r, q == cut_family_quotient_literal(n, s), "quotient matrix equals B2 entrywise", g, {{"n", n}, {"s", s}});
            const ExactPolynomial cp = char_poly(q);
            const ExactPolynomial closed = paper_poly_B2(n, s);
            expect(r, cp == closed, "char_poly(quotient) equals f_B2 exactly", g,
                   {{"n", n}, {"s", s}, {"computed", cp.to_string()}, {"closed_form", closed.to_string()}});
        }
    }
    r.seconds = seconds_since(start);
    return r;
}

SuiteReport perron_quotient_suite(int max_k, const HarnessOptions& opt) {
    const auto start = Clock::now();
    SuiteReport r;
    r.suite = "perron-quotient";
    r.parameters = {{"max_k", max_k}, {"tol", opt.tol}};
    Json rows = Json::array();
    for (int k = 1; k <= max_k; ++k) {
        for (int n = 8 * k + 6; n <= 8 * k + 26; n += 2) {
            const Graph g = extremal_family(n, k);
            const DistanceMatrix d = distance_matrix(g);
            const SpectralEstimate mu = distance_spectral_radius(d, opt.tol);
            const Rational lower = mu_lower_bound_wiener(d);
            const RootBracket root = largest_root(paper_poly_Bstar(n, k), lower, Rational{d.max_row_sum()},
                                                  Rational{1, 1000000000000LL});
            const long double diff = std::fabs(static_cast<long double>(mu.value) - root.value());
            expect(r, diff <= 1e-6L, "|mu(G*) - largest root of f_B*| <= 1e-6", g, {{"n", n}, {"k", k}, {"difference", format_value(diff)}});
            const std::int64_t w = wiener_index(d);
            expect(r, Rational{w} == extremal_wiener_closed_form(n, k), "W(G*) = (n^2 + (2k+5)n - 3k^2 - 13k - 18)/2", g,
                   {{"n", n}, {"k", k}, {"wiener", w}});
            expect(r, lower == Rational{2 * w, n}, "2W/n bound exact", g);
            expect(r, mu.lo > static_cast<long double>(n + k + 3) && root.lo > Rational{n + k + 3},
                   "mu(G*) > n + k + 3", g, {{"n", n}, {"k", k}});
            rows.push_back({{"n", n}, {"k", k}, {"mu", format_value(mu.value)}, {"root", format_value(root.value())},
                            {"difference", format_value(diff)}, {"wiener", w}});
        }
    }
    r.stats["rows"] = rows;
    r.seconds = seconds_since(start);
    return r;
}

SuiteReport proof_identity_suite(int max_threshold_k) {
    const auto start = Clock::now();
    SuiteReport r;
    r.suite = "proof-identities";
    r.parameters = {{"k", {1, 3}}, {"s_offset", {0, 3}}, {"n_offset", {0, 14}}, {"max_threshold_k", max_threshold_k}};
    const Rational tolerance{1, 1000000};
    const Rational fine{Integer{1}, Integer{1} << 140};
    auto abs_r = [](const Rational& x) { return x < 0 ? Rational{-x} : x; };

    for (int k = 1; k <= 3; ++k) {
        for (int n = 8 * k + 6; n <= 8 * k + 20; n += 2) {
            const Graph star = extremal_family(n, k);
            const DistanceMatrix d = distance_matrix(star);
            const RootBracket root =
                largest_root(paper_poly_Bstar(n, k), mu_lower_bound_wiener(d), Rational{d.max_row_sum()}, fine);
            const Rational mu = root.lo;
            const Json at = {{"n", n}, {"k", k}};

            // Wiener chain and mu > n + k + 3.
            expect(r, mu_lower_bound_wiener(d) == 2 * extremal_wiener_closed_form(n, k) / n, "2W/n closed form", star, at);
            expect(r, mu > Rational{n + k + 3}, "mu > n + k + 3", star, at);

            ProofScalars ps{n, k, k, mu};
            const Rational half_top{n - 6, 2};
            // Parabola vertex of phi lies beyond (n − 6)/2, evaluated at the bracket's lower end.
            expect(r, phi_vertex(ps) > half_top, "phi vertex exceeds (n - 6)/2", star, at);
            // phi increasing on integer s <= (n − 6)/2.
            for (long long s = k; s < (n - 6) / 2; ++s)
                expect(r, phi_at(ps, Rational{s + 1}) > phi_at(ps, Rational{s}), "phi strictly increasing", star, at);

            // phi at the top of the s range
            expect(r, abs_r(phi_at(ps, half_top) - g_eval(ps) / 2) <= tolerance, "phi((n-6)/2) = g(mu)/2", star, at);
            expect(r, g_eval(ps) < 0, "g(mu) < 0", star, at);

            for (int s = k; s <= k + 3; ++s) {
                ps.s = s;
                ps.validate();
                const Rational lhs = paper_poly_B2(n, s)(mu);
                const Rational rhs = Rational{s - k} * phi_eval(ps);
                Json at_s = at;
                at_s["s"] = s;
                // f_B2(mu) − f_B*(mu) = (s − k) phi(s), with f_B*(mu) = 0 at the root.
                expect(r, abs_r(lhs - rhs) <= tolerance, "f_B2(mu) = (s - k) phi(s)", star, at_s);
                expect(r, abs_r((paper_poly_B2(n, s) - paper_poly_Bstar(n, k))(mu) - rhs) == 0,
                       "f_B2 - f_B* = (s - k) phi(s) exactly", star, at_s);
                expect(r, phi_eval(ps) <= phi_at(ps, half_top), "phi(s) <= phi((n-6)/2)", star, at_s);
                if (s >= k + 1) expect(r, lhs < 0, "s >= k + 1: f_B2(mu) < 0", star, at_s);
            }

            // g at the shift point and the sign of g′.
            const Rational shift{n + k + 3};
            ProofScalars at_shift{n, k, k, shift};
            expect(r, g_eval(at_shift) == Rational{h_eval(n, k)}, "g(n+k+3) = h(n) exactly", star, at);
            expect(r, gprime_eval(at_shift) == Rational{gprime_at_shift_closed_form(n, k)},
                   "g'(n+k+3) = -4n^2 + (10k-18)n + 10k^2 + 72k - 50", star, at);
            expect(r, gprime_eval(at_shift) < 0, "g'(n+k+3) < 0", star, at);
            expect(r, Rational{n + 10 * k + 2, 6} < shift, "g' axis below n + k + 3", star, at);
            // g strictly decreasing on [n + k + 3, ∞): g′ < 0 on a mesh up to 4(n + k + 3).
            Rational prev_g = g_eval(at_shift);
            for (int j = 1; j <= 64; ++j) {
                ProofScalars p2{n, k, k, shift + Rational{3 * (n + k + 3) * j, 64}};
                const Rational gj = g_eval(p2);
                expect(r, gprime_eval(p2) < 0 && gj < prev_g, "g strictly decreasing beyond n + k + 3", star, at);
                prev_g = gj;
            }
            // h decreasing for n >= 8k + 6.
            expect(r, h_eval(n + 2, k) < h_eval(n, k) && hprime_eval(n, k) < 0, "h strictly decreasing", star, at);
            expect(r, h_eval(n, k) < 0, "h(n) < 0", star, at);
        }
    }

    // Threshold closed forms and their signs.
    for (long long k = 1; k <= max_threshold_k; ++k) {
        const Graph none(0);
        const Json at = {{"k", k}};
        const Integer h = h_eval(8 * k + 6, k);
        expect(r, h == h_at_threshold_closed_form(k), "h(8k+6) = -36k^3 + 110k^2 - 120k - 402", none, at);
        expect(r, h < 0, "h(8k+6) < 0", none, at);
        expect(r, gprime_at_shift_closed_form(8 * k + 6, k) == gprime_at_threshold_closed_form(k),
               "g'(n+k+3) at n = 8k+6 equals -166k^2 - 396k - 302", none, at);
        expect(r, gprime_at_threshold_closed_form(k) < 0, "g' negative at the threshold", none, at);
        expect(r, hprime_eval(8 * k + 6, k) == hprime_at_threshold_closed_form(k) && hprime_eval(8 * k + 6, k) < 0,
               "h'(8k+6) = -85k^2 - 162k - 133 < 0", none, at);
        for (long long n = 8 * k + 6; n < 8 * k + 46; ++n)
            expect(r, h_eval(n + 1, k) < h_eval(n, k), "h strictly decreasing on n >= 8k + 6", none, {{"k", k}, {"n", n}});
    }
    r.seconds = seconds_since(start);
    return r;
}

}  // namespace dsrpm
