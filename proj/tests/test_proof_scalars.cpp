#include "doctest.h"

#include "dsrpm/errors.hpp"
#include "dsrpm/proof_scalars.hpp"
#include "dsrpm/quotient.hpp"

using namespace dsrpm;

namespace {

Integer h_direct(long long n_, long long k_) {
    const Integer n{n_}, k{k_};
    return -n * n * n + (6 * k - 2) * n * n + (11 * k * k + 86 * k - 1) * n + 4 * k * k * k + 60 * k * k + 212 * k - 108;
}

}  // namespace

TEST_CASE("f_B2 - f_Bstar factors through phi") {
    for (long long k = 1; k <= 3; ++k)
        for (long long s = k; s <= k + 4; ++s)
            for (long long n = 2 * s + 6; n <= 2 * s + 20; n += 2)
                for (const Rational& mu : {Rational{n}, make_rational(3 * n + 1, 2), make_rational(-7, 3), Rational{0}}) {
                    ProofScalars ps{n, k, s, mu};
                    const Rational diff = paper_poly_B2(n, s)(mu) - paper_poly_Bstar(n, k)(mu);
                    REQUIRE(diff == Rational{s - k} * phi_eval(ps));
                }
}

TEST_CASE("phi at the right end of the s range is g/2") {
    for (long long k = 1; k <= 3; ++k)
        for (long long n = 2 * k + 6; n <= 60; n += 2) {
            ProofScalars ps{n, k, k, make_rational(5 * n + 3, 4)};
            REQUIRE(phi_at(ps, make_rational(n - 6, 2)) == g_eval(ps) / 2);
        }
}

TEST_CASE("g at n + k + 3 is h(n)") {
    for (long long k = 1; k <= 10; ++k)
        for (long long n = 8 * k + 6; n <= 8 * k + 40; n += 2) {
            ProofScalars ps{n, k, k, Rational{n + k + 3}};
            REQUIRE(g_eval(ps) == Rational{h_direct(n, k)});
            REQUIRE(h_eval(n, k) == h_direct(n, k));
        }
}

TEST_CASE("threshold expansions") {
    for (long long k = 1; k <= 50; ++k) {
        const long long n = 8 * k + 6;
        const Integer direct = h_direct(n, k);
        REQUIRE(h_at_threshold_closed_form(k) == direct);
        REQUIRE(direct < 0);
        ProofScalars ps{n, k, k, Rational{n + k + 3}};
        REQUIRE(gprime_eval(ps) == Rational{gprime_at_shift_closed_form(n, k)});
        REQUIRE(gprime_at_shift_closed_form(n, k) == gprime_at_threshold_closed_form(k));
        REQUIRE(hprime_eval(n, k) == hprime_at_threshold_closed_form(k));
    }
    CHECK(h_at_threshold_closed_form(1) == -36 + 110 - 120 - 402);
}

TEST_CASE("h keeps decreasing past the threshold") {
    for (long long k = 1; k <= 6; ++k)
        for (long long n = 8 * k + 6; n <= 8 * k + 200; n += 2) {
            REQUIRE(hprime_eval(n, k) < 0);
            REQUIRE(h_eval(n + 2, k) < h_eval(n, k));
        }
}

TEST_CASE("phi vertex and floating versions") {
    ProofScalars ps{30, 2, 3, Rational{40}};
    const Rational v = phi_vertex(ps);
    // a parabola in s is symmetric about its vertex
    CHECK(phi_at(ps, v + 1) == phi_at(ps, v - 1));
    CHECK(static_cast<double>(g_eval(40.0L, 30, 2)) == doctest::Approx(static_cast<double>(to_long_double(g_eval(ps)))));
    CHECK(static_cast<double>(gprime_eval(40.0L, 30, 2)) ==
          doctest::Approx(static_cast<double>(to_long_double(gprime_eval(ps)))));
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS((ProofScalars{15, 1, 1, Rational{1}}.validate()), InvalidParameter);
    CHECK_THROWS_AS((ProofScalars{14, 0, 1, Rational{1}}.validate()), InvalidParameter);
    CHECK_THROWS_AS((ProofScalars{14, 2, 1, Rational{1}}.validate()), InvalidParameter);
    CHECK_THROWS_AS((ProofScalars{14, 1, 5, Rational{1}}.validate()), InvalidParameter);
    CHECK_NOTHROW((ProofScalars{14, 1, 4, Rational{1}}.validate()));
}
