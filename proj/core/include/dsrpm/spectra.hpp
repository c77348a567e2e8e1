#pragma once

#include <cstdint>
#include <vector>

#include "graph.hpp"
#include "rational.hpp"

namespace dsrpm {

/// Shortest-path lengths of a connected graph.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    DistanceMatrix(int n, std::vector<int> entries);

    int order() const { return n_; }
    int operator()(int u, int v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
    /// Transmission of v: the row sum.
    std::int64_t row_sum(int v) const;
    std::int64_t min_row_sum() const;
    std::int64_t max_row_sum() const;
    int diameter() const;

    const std::vector<int>& entries() const { return d_; }

private:
    int n_ = 0;
    std::vector<int> d_;
};

/// BFS from every vertex. Throws ConnectivityError for disconnected or empty graphs.
DistanceMatrix distance_matrix(const Graph& g);

/// W(G): sum of d(u, v) over unordered pairs.
std::int64_t wiener_index(const Graph& g);
std::int64_t wiener_index(const DistanceMatrix& d);

/// 2W(G)/n, exact.
Rational mu_lower_bound_wiener(const Graph& g);
Rational mu_lower_bound_wiener(const DistanceMatrix& d);

/// Perron root of the distance matrix with a Collatz–Wielandt enclosure.
struct SpectralEstimate {
    double value = 0.0;     ///< Rayleigh quotient of the final iterate, clamped into [lo, hi]
    double residual = 0.0;  ///< ||Dx − value·x||_inf for the unit-norm final iterate x
    long double lo = 0.0L;  ///< certified lower bound on the Perron root
    long double hi = 0.0L;  ///< certified upper bound on the Perron root
    int iterations = 0;

    long double width() const { return hi - lo; }
};

inline constexpr double kDefaultSpectralTol = 1e-10;
inline constexpr double kMinSpectralTol = 1e-12;
inline constexpr int kMaxPowerIterations = 1000000;

/// Power iteration from the all-ones vector until hi − lo <= tol.
///
/// Every iterate x > 0 gives min_v (Dx)_v / x_v <= μ <= max_v (Dx)_v / x_v. The ratios are
/// accumulated in long double and widened by a rounding bound, then intersected with
/// [max(2W/n, min row sum), max row sum]. Sequential and deterministic.
/// Throws ConnectivityError, InvalidParameter (n < 2 or tol < kMinSpectralTol) or
/// ConvergenceError with the last bracket.
SpectralEstimate distance_spectral_radius(const Graph& g, double tol = kDefaultSpectralTol);
SpectralEstimate distance_spectral_radius(const DistanceMatrix& d, double tol = kDefaultSpectralTol);

enum class MuOrder { less, greater, indeterminate };

const char* to_string(MuOrder order);

/// Compares two certified brackets; strict only when they are disjoint.
MuOrder compare_estimates(const SpectralEstimate& a, const SpectralEstimate& b);

/// μ(G) versus μ(H) with both brackets refined to width <= tol.
MuOrder compare_mu(const Graph& g, const Graph& h, double tol = kDefaultSpectralTol);

}  // namespace dsrpm
