#include "dsrpm/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dsrpm/connectivity.hpp"
#include "dsrpm/errors.hpp"

namespace dsrpm {

DistanceMatrix::DistanceMatrix(int n, std::vector<int> entries) : n_(n), d_(std::move(entries)) {
    if (d_.size() != static_cast<std::size_t>(n) * n) throw InvalidParameter("distance matrix size mismatch");
}

std::int64_t DistanceMatrix::row_sum(int v) const {
    std::int64_t s = 0;
    for (int u = 0; u < n_; ++u) s += (*this)(v, u);
    return s;
}

std::int64_t DistanceMatrix::min_row_sum() const {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (int v = 0; v < n_; ++v) best = std::min(best, row_sum(v));
    return best;
}

std::int64_t DistanceMatrix::max_row_sum() const {
    std::int64_t best = 0;
    for (int v = 0; v < n_; ++v) best = std::max(best, row_sum(v));
    return best;
}

int DistanceMatrix::diameter() const { return d_.empty() ? 0 : *std::max_element(d_.begin(), d_.end()); }

DistanceMatrix distance_matrix(const Graph& g) {
    const int n = g.order();
    if (n == 0) throw ConnectivityError("distance matrix of the empty graph is undefined");
    std::vector<int> d(static_cast<std::size_t>(n) * n, 0);
    const std::uint64_t all = g.vertices().mask();
    for (int src = 0; src < n; ++src) {
        std::uint64_t seen = std::uint64_t{1} << src;
        std::uint64_t frontier = seen;
        int level = 0;
        while (frontier != 0) {
            ++level;
            std::uint64_t next = 0;
            for (std::uint64_t f = frontier; f != 0; f &= f - 1) next |= g.row(std::countr_zero(f));
            next &= ~seen;
            for (std::uint64_t x = next; x != 0; x &= x - 1) d[static_cast<std::size_t>(src) * n + std::countr_zero(x)] = level;
            seen |= next;
            frontier = next;
        }
        if (seen != all) throw ConnectivityError("graph is disconnected; distances are undefined");
    }
    return DistanceMatrix(n, std::move(d));
}

std::int64_t wiener_index(const DistanceMatrix& d) {
    std::int64_t total = 0;
    for (int v = 0; v < d.order(); ++v) total += d.row_sum(v);
    return total / 2;
}

std::int64_t wiener_index(const Graph& g) { return wiener_index(distance_matrix(g)); }

Rational mu_lower_bound_wiener(const DistanceMatrix& d) {
    return Rational{Integer{2 * wiener_index(d)}, Integer{d.order()}};
}

Rational mu_lower_bound_wiener(const Graph& g) { return mu_lower_bound_wiener(distance_matrix(g)); }

SpectralEstimate distance_spectral_radius(const DistanceMatrix& d, double tol) {
    const int n = d.order();
    if (n < 2) throw InvalidParameter("distance spectral radius needs at least two vertices");
    if (!(tol >= kMinSpectralTol)) throw InvalidParameter("tolerance below " + std::to_string(kMinSpectralTol));

    using Real = long double;
    const Real eps = std::numeric_limits<Real>::epsilon();
    const Real row_max = static_cast<Real>(d.max_row_sum());
    // Each ratio (Dx)_v / x_v is an n-term positive sum then a division; relative error
    // stays below (n + 2) eps, so widening by this much keeps the bracket sound.
    const Real pad = static_cast<Real>(n + 2) * eps * row_max;
    const Real floor_lo = std::nextafter(to_long_double(mu_lower_bound_wiener(d)), Real{0});
    const Real base_lo = std::max(floor_lo, static_cast<Real>(d.min_row_sum()));
    const Real base_hi = row_max;

    std::vector<Real> x(n, 1.0L);
    std::vector<Real> y(n);
    SpectralEstimate est;
    Real lo = base_lo;
    Real hi = base_hi;
    for (int it = 0; it <= kMaxPowerIterations; ++it) {
        Real rmin = std::numeric_limits<Real>::infinity();
        Real rmax = 0;
        Real xx = 0;
        Real xy = 0;
        for (int v = 0; v < n; ++v) {
            Real acc = 0;
            for (int u = 0; u < n; ++u) acc += static_cast<Real>(d(v, u)) * x[u];
            y[v] = acc;
            const Real ratio = acc / x[v];
            rmin = std::min(rmin, ratio);
            rmax = std::max(rmax, ratio);
            xx += x[v] * x[v];
            xy += x[v] * acc;
        }
        lo = std::max(lo, rmin - pad);
        hi = std::min(hi, rmax + pad);
        est.iterations = it;
        if (hi - lo <= static_cast<Real>(tol)) {
            const Real rayleigh = std::clamp(xy / xx, lo, hi);
            const Real norm = std::sqrt(xx);
            Real res = 0;
            for (int v = 0; v < n; ++v) res = std::max(res, std::fabs(y[v] - rayleigh * x[v]) / norm);
            est.value = static_cast<double>(rayleigh);
            est.residual = static_cast<double>(res);
            est.lo = lo;
            est.hi = hi;
            return est;
        }
        Real ymax = *std::max_element(y.begin(), y.end());
        for (int v = 0; v < n; ++v) x[v] = y[v] / ymax;
    }
    throw ConvergenceError("power iteration did not reach tolerance within the iteration cap", lo, hi);
}

SpectralEstimate distance_spectral_radius(const Graph& g, double tol) {
    return distance_spectral_radius(distance_matrix(g), tol);
}

const char* to_string(MuOrder order) {
    switch (order) {
        case MuOrder::less: return "Less";
        case MuOrder::greater: return "Greater";
        case MuOrder::indeterminate: return "Indeterminate";
    }
    return "?";
}

MuOrder compare_estimates(const SpectralEstimate& a, const SpectralEstimate& b) {
    if (a.lo > b.hi) return MuOrder::greater;
    if (a.hi < b.lo) return MuOrder::less;
    return MuOrder::indeterminate;
}

MuOrder compare_mu(const Graph& g, const Graph& h, double tol) {
    return compare_estimates(distance_spectral_radius(g, tol), distance_spectral_radius(h, tol));
}

}  // namespace dsrpm
