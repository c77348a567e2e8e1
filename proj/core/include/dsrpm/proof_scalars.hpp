#pragma once

#include <cstdint>

#include "rational.hpp"

namespace dsrpm {

/// Parameters of the proof-chain functions. `mu` is a point inside the certified
/// bracket of the B★ Perron root (exact rational so identities can be checked exactly).
struct ProofScalars {
    long long n = 0;
    long long k = 0;
    long long s = 0;
    Rational mu;

    /// n even, k >= 1 and k <= s <= (n − 6)/2. Throws InvalidParameter otherwise.
    void validate() const;
};

namespace detail {

template <class T>
T phi(const T& mu, const T& n, const T& k, const T& s) {
    return -(2 * mu + 8) * s * s + (5 * mu * mu + (n - 2 * k + 16) * mu + 4 * n - 8 * k - 4) * s -
           mu * mu * mu - (2 * n - 5 * k - 16) * mu * mu +
           ((k - 7) * n - 2 * k * k + 16 * k + 62) * mu + (4 * k - 2) * n - 8 * k * k - 4 * k + 36;
}

template <class T>
T g(const T& mu, const T& n, const T& k) {
    return -2 * mu * mu * mu + (n + 10 * k + 2) * mu * mu + (8 * n - 4 * k * k + 44 * k - 8) * mu +
           16 * n - 16 * k * k + 40 * k - 48;
}

template <class T>
T gprime(const T& mu, const T& n, const T& k) {
    return -6 * mu * mu + 2 * (n + 10 * k + 2) * mu + 8 * n - 4 * k * k + 44 * k - 8;
}

}  // namespace detail

/// φ(s), the cubic in μ with f_{B2}(μ) − f_{B★}(μ) = (s − k)·φ(s).
Rational phi_eval(const ProofScalars& ps);
/// φ as a function of an arbitrary (possibly non-integral) s, for the vertex comparison.
Rational phi_at(const ProofScalars& ps, const Rational& s);
/// g(μ), with φ((n − 6)/2) = g(μ)/2.
Rational g_eval(const ProofScalars& ps);
Rational gprime_eval(const ProofScalars& ps);
/// Vertex of the parabola s ↦ φ(s).
Rational phi_vertex(const ProofScalars& ps);

/// Floating versions of the same formulas for mesh sampling.
long double g_eval(long double mu, long long n, long long k);
long double gprime_eval(long double mu, long long n, long long k);

/// h(n) = −n^3 + (6k−2)n^2 + (11k^2+86k−1)n + 4k^3 + 60k^2 + 212k − 108.
Integer h_eval(long long n, long long k);
/// h′(n) = −3n^2 + 2(6k−2)n + 11k^2 + 86k − 1.
Integer hprime_eval(long long n, long long k);

/// Closed forms the expansions reduce to.
Integer h_at_threshold_closed_form(long long k);         ///< −36k^3 + 110k^2 − 120k − 402
Integer gprime_at_shift_closed_form(long long n, long long k);  ///< −4n^2 + (10k−18)n + 10k^2 + 72k − 50
Integer gprime_at_threshold_closed_form(long long k);   ///< −166k^2 − 396k − 302
Integer hprime_at_threshold_closed_form(long long k);   ///< −85k^2 − 162k − 133

}  // namespace dsrpm
