// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any criterion fails.
//
//   dsrpm_acceptance [--skip-n8] [--threads N]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dsrpm/connectivity.hpp"
#include "dsrpm/family.hpp"
#include "dsrpm/graph6.hpp"
#include "dsrpm/harness.hpp"
#include "dsrpm/matching.hpp"
#include "dsrpm/polynomial.hpp"
#include "dsrpm/quotient.hpp"
#include "dsrpm/random_graphs.hpp"
#include "dsrpm/spectra.hpp"

using namespace dsrpm;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

// Accumulates failure notes; the first few are kept for the summary line.
class Check {
public:
    void require(bool cond, const std::string& what) {
        if (cond) return;
        ok_ = false;
        if (++failures_ <= 3) notes_ << (failures_ > 1 ? "; " : "") << what;
    }
    void note(const std::string& s) { extra_ << (extra_.tellp() > 0 ? ", " : "") << s; }
    Outcome done() const {
        std::string d = ok_ ? extra_.str() : notes_.str();
        if (!ok_ && failures_ > 3) d += " (+" + std::to_string(failures_ - 3) + " more)";
        return {ok_, d};
    }

private:
    bool ok_ = true;
    int failures_ = 0;
    std::ostringstream notes_;
    std::ostringstream extra_;
};

void require_suite(Check& c, const SuiteReport& r) {
    if (r.passed()) return;
    for (const auto& v : r.violations) c.require(false, r.suite + ": " + v.predicate + " [" + v.witness + "]");
}

std::string secs(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", s);
    return buf;
}

Outcome criterion_1() {
    Check c;
    const SuiteReport r = quotient_coefficient_suite(60, 6);
    require_suite(c, r);
    // pairs: s in [1,6], even n in [2s+6, 60]
    std::uint64_t pairs = 0;
    for (int s = 1; s <= 6; ++s) pairs += (60 - (2 * s + 6)) / 2 + 1;
    c.require(r.cases >= pairs, "grid incomplete");
    c.note(std::to_string(pairs) + " (n,s) pairs exact");
    return c.done();
}

Outcome criterion_2(const HarnessOptions& opt) {
    Check c;
    const auto spot = paper_poly_Bstar(14, 1);
    c.require(spot == ExactPolynomial::from_descending({1, -10, -153, -368, -172}), "f_B* (14,1) coefficients");
    const RootBracket root = largest_root(spot, make_rational(130, 7), Rational{25});
    c.require(root.lo > make_rational(130, 7) && root.hi <= 25, "spot root outside (130/7, 25]");
    long double worst = 0;
    for (int k = 1; k <= 3; ++k)
        for (int n = 8 * k + 6; n <= 8 * k + 26; n += 2) {
            const Graph g = extremal_family(n, k);
            const DistanceMatrix d = distance_matrix(g);
            const SpectralEstimate mu = distance_spectral_radius(d, opt.tol);
            const RootBracket r = largest_root(paper_poly_Bstar(n, k), mu_lower_bound_wiener(d), Rational{d.max_row_sum()});
            const long double gap = std::fabs(static_cast<long double>(mu.value) - r.value());
            worst = std::max(worst, gap);
            c.require(gap <= 1e-6L, "(" + std::to_string(n) + "," + std::to_string(k) + ") gap " + format_value(gap));
        }
    require_suite(c, perron_quotient_suite(3, opt));
    c.note("max |mu - root| = " + format_value(worst));
    return c.done();
}

Outcome criterion_3(const HarnessOptions& opt) {
    Check c;
    for (auto [n, k] : {std::pair{14, 1}, std::pair{22, 2}, std::pair{30, 3}}) {
        const std::string at = "(" + std::to_string(n) + "," + std::to_string(k) + ")";
        const Graph g = extremal_family(n, k);
        c.require(!has_perfect_matching(g), at + " has a perfect matching");
        TutteCertificate hub{VertexSet::range(0, k), k + 2};
        c.require(hub.verifies(g), at + " hub certificate o != k+2");
        c.require(has_fractional_pm(g), at + " no fractional PM");
        if (n <= kExhaustiveSubsetOrder)
            c.require(!exhaustive_isolated_violation(g).has_value(), at + " subset oracle finds a violation");
        c.require(is_k_connected(g, k) && !is_k_connected(g, k + 1), at + " not exactly k-connected");
        require_suite(c, verify_extremal_family(n, k, opt));
    }
    return c.done();
}

Outcome criterion_4(const HarnessOptions& opt, bool run_n8) {
    Check c;
    const std::uint64_t expected[] = {0, 0, 0, 0, 38, 0, 26704, 0, 251548592};
    for (int n : {4, 6, 8}) {
        if (n == 8 && !run_n8) {
            c.note("n=8 skipped");
            continue;
        }
        const auto start = std::chrono::steady_clock::now();
        const SuiteReport r = exhaustive_theorem_1_1(n, opt);
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        require_suite(c, r);
        c.require(r.cases == expected[n], "n=" + std::to_string(n) + " saw " + std::to_string(r.cases) + " graphs");
        if (n == 6) c.require(s < 10.0, "n=6 over 10 s");
        c.note("n=" + std::to_string(n) + ": " + std::to_string(r.cases) + " graphs in " + secs(s));
    }
    return c.done();
}

Outcome criterion_5() {
    Check c;
    const SuiteReport r = proof_identity_suite(50);
    require_suite(c, r);
    c.note(std::to_string(r.cases) + " identity checks");
    return c.done();
}

Outcome criterion_6(const HarnessOptions& opt) {
    Check c;
    c.require(wiener_index(extremal_family(14, 1)) == 130, "W(G*(14,1)) != 130");
    for (int k = 1; k <= 3; ++k)
        for (int n = 8 * k + 6; n <= 8 * k + 26; n += 2) {
            const Graph g = extremal_family(n, k);
            const std::string at = "(" + std::to_string(n) + "," + std::to_string(k) + ")";
            c.require(Rational{wiener_index(g)} == extremal_wiener_closed_form(n, k), at + " Wiener mismatch");
            const SpectralEstimate mu = distance_spectral_radius(g, opt.tol);
            c.require(mu.lo > n + k + 3, at + " mu <= n+k+3");
        }
    return c.done();
}

Outcome criterion_7(const HarnessOptions& opt) {
    Check c;
    const SuiteReport mono = lemma_monotonicity_suite(20240101, 200, opt);
    require_suite(c, mono);
    const auto indeterminate = mono.stats["indeterminate"].get<std::int64_t>();
    c.require(indeterminate == 0, std::to_string(indeterminate) + " indeterminate comparisons");
    require_suite(c, lemma_ordering_suite(20240101, 100, opt));
    const SuiteReport cor = corollary_comparison_suite(14, 40, opt);
    require_suite(c, cor);
    c.note(std::to_string(mono.stats["edge_insertions"].get<std::int64_t>()) + " insertions");
    c.note("corollary margin " + cor.stats["margin_trend"].get<std::string>());
    return c.done();
}

Outcome criterion_8() {
    Check c;
    Rng rng(880088);
    int pm_yes = 0;
    for (int t = 0; t < 10000; ++t) {
        const int n = uniform_int(rng, 1, 12);
        const Graph g = erdos_renyi(n, uniform_real(rng, 0.05, 0.6), rng);
        const bool blossom = has_perfect_matching(g);
        const bool tutte = tutte_certificate(g).verdict == TutteVerdict::none;
        pm_yes += blossom;
        c.require(blossom == tutte, "PM disagreement on " + write_graph6(g));
    }
    int fpm_yes = 0;
    for (int t = 0; t < 1000; ++t) {
        const int n = uniform_int(rng, 1, 14);
        const Graph g = erdos_renyi(n, uniform_real(rng, 0.05, 0.6), rng);
        const bool cover = has_fractional_pm(g);
        const bool subsets = !exhaustive_isolated_violation(g).has_value();
        fpm_yes += cover;
        c.require(cover == subsets, "fractional PM disagreement on " + write_graph6(g));
    }
    c.note(std::to_string(pm_yes) + "/10000 with PM, " + std::to_string(fpm_yes) + "/1000 with fractional PM");
    return c.done();
}

Outcome criterion_9(const HarnessOptions& opt) {
    Check c;
    const SuiteReport a = probe_theorem_1_3(14, 1, 10000, 1401, opt);
    const SuiteReport b = probe_theorem_1_3(22, 2, 1000, 2202, opt);
    require_suite(c, a);
    require_suite(c, b);
    c.note("acceptance " + format_value(a.stats["acceptance_rate"].get<double>()) + " / " +
           format_value(b.stats["acceptance_rate"].get<double>()));
    c.note("equality cases " + std::to_string(a.stats["equality_cases"].get<std::int64_t>()) + " / " +
           std::to_string(b.stats["equality_cases"].get<std::int64_t>()));
    return c.done();
}

}  // namespace

int main(int argc, char** argv) {
    bool run_n8 = true;
    HarnessOptions opt;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--skip-n8") == 0) {
            run_n8 = false;
        } else if (std::strcmp(argv[i], "--threads") == 0 && i + 1 < argc) {
            opt.threads = std::max(1, std::atoi(argv[++i]));
        } else {
            std::cerr << "usage: " << argv[0] << " [--skip-n8] [--threads N]\n";
            return 2;
        }
    }

    struct Criterion {
        int id;
        const char* name;
        double budget_seconds;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "quotient coefficient identity", 5, [] { return criterion_1(); }},
        {2, "Perron root vs quotient quartic", 30, [&] { return criterion_2(opt); }},
        {3, "extremal family structure", 60, [&] { return criterion_3(opt); }},
        {4, "exhaustive small-order scan", run_n8 ? 7200.0 : 10.0, [&] { return criterion_4(opt, run_n8); }},
        {5, "proof-chain identities", 60, [] { return criterion_5(); }},
        {6, "Wiener closed form and mu > n+k+3", 60, [&] { return criterion_6(opt); }},
        {7, "lemma suites", 120, [&] { return criterion_7(opt); }},
        {8, "oracle equivalences", 300, [] { return criterion_8(); }},
        {9, "connectivity-k probes", 600, [&] { return criterion_9(opt); }},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.ok && s > c.budget_seconds) o = {false, "over the " + secs(c.budget_seconds) + " budget"};
        failed += !o.ok;
        std::cout << "criterion " << c.id << ": " << (o.ok ? "PASS" : "FAIL") << "  " << c.name << "  (" << secs(s)
                  << (o.detail.empty() ? "" : "; " + o.detail) << ")" << std::endl;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed == 0 ? 0 : 1;
}
