#include "dsrpm/proof_scalars.hpp"

#include "dsrpm/errors.hpp"

namespace dsrpm {

void ProofScalars::validate() const {
    if (n % 2 != 0) throw InvalidParameter("n must be even");
    if (k < 1) throw InvalidParameter("k must be positive");
    if (s < k || 2 * s > n - 6) throw InvalidParameter("need k <= s <= (n - 6)/2");
}

namespace {

Rational R(long long v) { return Rational{v}; }

}  // namespace

Rational phi_at(const ProofScalars& ps, const Rational& s) { return detail::phi(ps.mu, R(ps.n), R(ps.k), s); }

Rational phi_eval(const ProofScalars& ps) { return phi_at(ps, R(ps.s)); }

Rational g_eval(const ProofScalars& ps) { return detail::g(ps.mu, R(ps.n), R(ps.k)); }

Rational gprime_eval(const ProofScalars& ps) { return detail::gprime(ps.mu, R(ps.n), R(ps.k)); }

Rational phi_vertex(const ProofScalars& ps) {
    const Rational& mu = ps.mu;
    const Rational n = R(ps.n);
    const Rational k = R(ps.k);
    return (5 * mu * mu + (n - 2 * k + 16) * mu + 4 * n - 8 * k - 4) / (2 * (2 * mu + 8));
}

long double g_eval(long double mu, long long n, long long k) {
    return detail::g<long double>(mu, static_cast<long double>(n), static_cast<long double>(k));
}

long double gprime_eval(long double mu, long long n, long long k) {
    return detail::gprime<long double>(mu, static_cast<long double>(n), static_cast<long double>(k));
}

Integer h_eval(long long n_, long long k_) {
    const Integer n{n_};
    const Integer k{k_};
    return -n * n * n + (6 * k - 2) * n * n + (11 * k * k + 86 * k - 1) * n + 4 * k * k * k + 60 * k * k + 212 * k -
           108;
}

Integer hprime_eval(long long n_, long long k_) {
    const Integer n{n_};
    const Integer k{k_};
    return -3 * n * n + 2 * (6 * k - 2) * n + 11 * k * k + 86 * k - 1;
}

Integer h_at_threshold_closed_form(long long k_) {
    const Integer k{k_};
    return -36 * k * k * k + 110 * k * k - 120 * k - 402;
}

Integer gprime_at_shift_closed_form(long long n_, long long k_) {
    const Integer n{n_};
    const Integer k{k_};
    return -4 * n * n + (10 * k - 18) * n + 10 * k * k + 72 * k - 50;
}

Integer gprime_at_threshold_closed_form(long long k_) {
    const Integer k{k_};
    return -166 * k * k - 396 * k - 302;
}

Integer hprime_at_threshold_closed_form(long long k_) {
    const Integer k{k_};
    return -85 * k * k - 162 * k - 133;
}

}  // namespace dsrpm
