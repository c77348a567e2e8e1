#include "dsrpm/quotient.hpp"

#include <string>

#include "dsrpm/errors.hpp"

namespace dsrpm {

ExactMatrix::ExactMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, Rational{0}) {}

ExactMatrix ExactMatrix::from(const DistanceMatrix& d) {
    ExactMatrix m(d.order());
    for (int i = 0; i < d.order(); ++i)
        for (int j = 0; j < d.order(); ++j) m(i, j) = d(i, j);
    return m;
}

void Partition::validate(int n) const {
    std::uint64_t seen = 0;
    for (VertexSet b : blocks) {
        if (b.empty()) throw InvalidParameter("partition block is empty");
        if (seen & b.mask()) throw InvalidParameter("partition blocks overlap");
        seen |= b.mask();
    }
    if (seen != VertexSet::range(0, n).mask()) throw InvalidParameter("partition does not cover the index set");
}

namespace {

Rational block_row_sum(const ExactMatrix& m, int row, VertexSet cols) {
    Rational s{0};
    for (int c : cols.members()) s += m(row, c);
    return s;
}

}  // namespace

bool is_equitable(const ExactMatrix& m, const Partition& pi) {
    pi.validate(m.order());
    for (VertexSet bi : pi.blocks) {
        const auto rows = bi.members();
        for (VertexSet bj : pi.blocks) {
            const Rational first = block_row_sum(m, rows.front(), bj);
            for (std::size_t r = 1; r < rows.size(); ++r)
                if (block_row_sum(m, rows[r], bj) != first) return false;
        }
    }
    return true;
}

ExactMatrix quotient_matrix(const ExactMatrix& m, const Partition& pi) {
    pi.validate(m.order());
    const int t = static_cast<int>(pi.blocks.size());
    ExactMatrix q(t);
    for (int i = 0; i < t; ++i) {
        const auto rows = pi.blocks[i].members();
        for (int j = 0; j < t; ++j) {
            Rational total{0};
            for (int r : rows) total += block_row_sum(m, r, pi.blocks[j]);
            q(i, j) = total / static_cast<long long>(rows.size());
        }
    }
    return q;
}

ExactPolynomial char_poly(const ExactMatrix& a) {
    const int n = a.order();
    if (n > 8) throw InvalidParameter("characteristic polynomial limited to order 8");
    // Faddeev–LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational{0});
    c[n] = 1;
    ExactMatrix mk(n);
    for (int k = 1; k <= n; ++k) {
        ExactMatrix next(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Rational s{0};
                for (int l = 0; l < n; ++l) s += a(i, l) * mk(l, j);
                next(i, j) = s;
            }
        for (int i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
        Rational trace{0};
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) trace += a(i, l) * next(l, i);
        c[n - k] = -trace / k;
        mk = std::move(next);
    }
    return ExactPolynomial::from_descending(std::vector<Rational>(c.rbegin(), c.rend()));
}

ExactPolynomial paper_poly_B2(long long n, long long s) {
    if (s < 1) throw InvalidParameter("cut size must be positive");
    if (n < 2 * s + 6) throw InvalidParameter("quartic defined for n >= 2s + 6");
    return ExactPolynomial::from_descending({
        1,
        -(n + s - 5),
        -((2 * s + 13) * n - 5 * s * s - 16 * s - 36),
        (s * s - 7 * s - 32) * n - 2 * s * s * s + 16 * s * s + 62 * s + 88,
        (4 * s * s - 2 * s - 20) * n - 8 * s * s * s - 4 * s * s + 36 * s + 56,
    });
}

ExactPolynomial paper_poly_Bstar(long long n, long long k) {
    if (k < 1) throw InvalidParameter("connectivity parameter must be positive");
    return paper_poly_B2(n, k);
}

ExactMatrix cut_family_quotient_literal(long long n, long long s) {
    if (s < 1 || n < 2 * s + 6) throw InvalidParameter("quotient defined for s >= 1, n >= 2s + 6");
    const long long rows[4][4] = {
        {s - 1, s, 3, n - 2 * s - 3},
        {s, 2 * s - 2, 6, 2 * n - 4 * s - 6},
        {s, 2 * s, 2, 2 * n - 4 * s - 6},
        {s, 2 * s, 6, n - 2 * s - 4},
    };
    ExactMatrix m(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = rows[i][j];
    return m;
}

Rational extremal_wiener_closed_form(long long n, long long k) {
    return Rational{n * n + (2 * k + 5) * n - 3 * k * k - 13 * k - 18, 2};
}

}  // namespace dsrpm
