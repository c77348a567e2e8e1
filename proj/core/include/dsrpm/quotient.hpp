#pragma once

#include <vector>

#include "graph.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "spectra.hpp"

namespace dsrpm {

/// Dense square matrix of exact rationals.
class ExactMatrix {
public:
    ExactMatrix() = default;
    explicit ExactMatrix(int n);
    static ExactMatrix from(const DistanceMatrix& d);

    int order() const { return n_; }
    Rational& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const Rational& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

private:
    int n_ = 0;
    std::vector<Rational> a_;
};

/// Ordered blocks covering the index set.
struct Partition {
    std::vector<VertexSet> blocks;

    /// Throws InvalidParameter unless blocks are nonempty, disjoint and cover {0..n-1}.
    void validate(int n) const;
};

/// True iff every block M_ij has constant row sums.
bool is_equitable(const ExactMatrix& m, const Partition& pi);

/// Entry (i, j) is the average row sum of block M_ij.
ExactMatrix quotient_matrix(const ExactMatrix& m, const Partition& pi);

/// det(xI − Q), monic, via Faddeev–LeVerrier over the rationals (order <= 8).
ExactPolynomial char_poly(const ExactMatrix& q);

/// The closed-form quartic for the quotient of K_s ∨ (sK1 ∪ K3 ∪ K_{n−2s−3}):
///   x^4 − (n+s−5)x^3 − ((2s+13)n − 5s^2 − 16s − 36)x^2
///     + ((s^2−7s−32)n − 2s^3 + 16s^2 + 62s + 88)x
///     + (4s^2−2s−20)n − 8s^3 − 4s^2 + 36s + 56.
/// Requires s >= 1 and n >= 2s + 6.
ExactPolynomial paper_poly_B2(long long n, long long s);
/// Same formula with the connectivity parameter k in place of s.
ExactPolynomial paper_poly_Bstar(long long n, long long k);

/// The literal 4×4 quotient matrix of K_s ∨ (sK1 ∪ K3 ∪ K_{n−2s−3}).
ExactMatrix cut_family_quotient_literal(long long n, long long s);

/// W(K_k ∨ (kK1 ∪ K3 ∪ K_{n−2k−3})) = (n^2 + (2k+5)n − 3k^2 − 13k − 18) / 2.
Rational extremal_wiener_closed_form(long long n, long long k);

}  // namespace dsrpm
