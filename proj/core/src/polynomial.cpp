#include "dsrpm/polynomial.hpp"

#include <sstream>

#include "dsrpm/errors.hpp"

namespace dsrpm {

ExactPolynomial ExactPolynomial::from_descending(const std::vector<Rational>& coeffs) {
    ExactPolynomial p;
    p.c_.assign(coeffs.rbegin(), coeffs.rend());
    p.trim();
    return p;
}

ExactPolynomial ExactPolynomial::from_descending(std::initializer_list<long long> coeffs) {
    std::vector<Rational> c;
    for (long long v : coeffs) c.emplace_back(v);
    return from_descending(c);
}

void ExactPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational ExactPolynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rational{0};
    return c_[static_cast<std::size_t>(i)];
}

std::vector<Rational> ExactPolynomial::descending() const { return {c_.rbegin(), c_.rend()}; }

Rational ExactPolynomial::operator()(const Rational& x) const {
    Rational acc{0};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

long double ExactPolynomial::operator()(long double x) const {
    long double acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + to_long_double(*it);
    return acc;
}

ExactPolynomial ExactPolynomial::derivative() const {
    ExactPolynomial d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.c_.push_back(c_[i] * static_cast<long long>(i));
    d.trim();
    return d;
}

ExactPolynomial operator-(const ExactPolynomial& a, const ExactPolynomial& b) {
    ExactPolynomial out;
    out.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < out.c_.size(); ++i)
        out.c_[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
    out.trim();
    return out;
}

std::string ExactPolynomial::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Rational mag = c < 0 ? Rational{-c} : c;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (mag != 1 || i == 0) out << dsrpm::to_string(mag);
        if (i >= 1) out << "x";
        if (i >= 2) out << "^" << i;
        first = false;
    }
    return out.str();
}

long double RootBracket::value() const { return to_long_double((lo + hi) / 2); }

namespace {

int sign(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

}  // namespace

RootBracket largest_root(const ExactPolynomial& p, const Rational& lo, const Rational& hi, const Rational& width) {
    if (p.degree() < 1) throw BracketError("polynomial has no roots to isolate");
    if (lo > hi) throw BracketError("empty bracket");
    if (width <= 0) throw InvalidParameter("root width must be positive");
    const int lead = sign(p.coeff(p.degree()));
    const int s_hi = sign(p(hi));
    if (s_hi == 0) return RootBracket{hi, hi};
    if (s_hi != lead) throw BracketError("upper end is not above the largest root");

    Rational a = lo;
    for (;;) {
        if (sign(p(a)) == lead) throw BracketError("no sign change of the polynomial in the bracket");
        // Invariant: sign(p(a)) != lead, sign(p(b)) == lead.
        Rational b = hi;
        while (b - a > width) {
            Rational mid = (a + b) / 2;
            if (sign(p(mid)) == lead)
                b = mid;
            else
                a = mid;
        }
        // Confirm no further sign change between the root and hi.
        bool clean = true;
        const Rational step = (hi - b) / kLargestRootMesh;
        for (int i = 1; i <= kLargestRootMesh && step > 0; ++i) {
            const Rational x = b + step * i;
            if (sign(p(x)) != lead) {
                a = x;
                clean = false;
                break;
            }
        }
        if (clean) return RootBracket{a, b};
    }
}

}  // namespace dsrpm
