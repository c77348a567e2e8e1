#pragma once

#include <string>
#include <vector>

#include "rational.hpp"

namespace dsrpm {

/// Univariate polynomial with exact rational coefficients.
/// Stored lowest degree first; trailing zeros are trimmed so the zero polynomial is empty.
class ExactPolynomial {
public:
    ExactPolynomial() = default;
    /// Coefficients given highest degree first, the order they are printed in.
    static ExactPolynomial from_descending(const std::vector<Rational>& coeffs);
    static ExactPolynomial from_descending(std::initializer_list<long long> coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  ///< -1 for zero
    bool is_zero() const { return c_.empty(); }
    /// Coefficient of x^i (zero beyond the degree).
    Rational coeff(int i) const;
    /// Highest degree first.
    std::vector<Rational> descending() const;

    Rational operator()(const Rational& x) const;
    long double operator()(long double x) const;

    ExactPolynomial derivative() const;

    friend ExactPolynomial operator-(const ExactPolynomial& a, const ExactPolynomial& b);
    friend bool operator==(const ExactPolynomial& a, const ExactPolynomial& b) { return a.c_ == b.c_; }

    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Enclosure [lo, hi] of a real root with exact dyadic endpoints.
struct RootBracket {
    Rational lo;
    Rational hi;

    long double value() const;
    Rational width() const { return hi - lo; }
};

inline constexpr int kLargestRootMesh = 64;

/// Largest real root in [lo, hi] by exact-sign bisection down to width <= `width`.
/// The caller supplies a bracket known to contain the largest root (e.g. Perron bounds);
/// "largest" is then confirmed by checking that p keeps the sign of its leading coefficient on
/// kLargestRootMesh evenly spaced points between the root and hi.
/// Throws BracketError when p does not change sign on [lo, hi] or the mesh check fails.
RootBracket largest_root(const ExactPolynomial& p, const Rational& lo, const Rational& hi,
                         const Rational& width = Rational{1, 10000000000LL});

}  // namespace dsrpm
