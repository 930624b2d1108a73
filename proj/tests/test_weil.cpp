#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "ordcert/errors.hpp"
#include "ordcert/hecke.hpp"
#include "ordcert/modforms.hpp"
#include "ordcert/ordinarity.hpp"
#include "ordcert/polynomial.hpp"
#include "ordcert/primes.hpp"
#include "ordcert/weil.hpp"

using namespace ordcert;

TEST_CASE("all_roots_divisible coefficient test") {
    CHECK(all_roots_divisible(IntPolynomial({25, -5, 1}), 5));
    CHECK_FALSE(all_roots_divisible(IntPolynomial({24, 1}), 11));

    // (X - 2)(X - 4): 2 divides both roots, 4 does not
    IntPolynomial g({8, -6, 1});
    CHECK(all_roots_divisible(g, 2));
    CHECK_FALSE(all_roots_divisible(g, 4));

    CHECK(all_roots_divisible(IntPolynomial({0, 1}), 7));  // 0 divisible by all
    CHECK(all_roots_divisible(IntPolynomial({1}), 5));     // degree 0, vacuous

    // X^2 - 24X + 2048: 2-adic root valuations are 3 and 8
    IntPolynomial q({2048, -24, 1});
    CHECK(all_roots_divisible(q, 2));
    CHECK(all_roots_divisible(q, 8));
    CHECK_FALSE(all_roots_divisible(q, 16));

    CHECK_THROWS_AS(all_roots_divisible(q, Int(0)), InvalidInput);
}

TEST_CASE("divisibility is inherited by divisors of m") {
    IntPolynomial q({2048, -24, 1});
    REQUIRE(all_roots_divisible(q, 8));
    for (long m : {1L, 2L, 4L}) CHECK(all_roots_divisible(q, m));

    // 6 divides both roots of (X - 6)(X - 36)
    IntPolynomial g({216, -42, 1});
    CHECK(all_roots_divisible(g, 6));
    for (long m : {1L, 2L, 3L}) CHECK(all_roots_divisible(g, m));
}

TEST_CASE("frobenius divisibility by p iff a_p vanishes mod p") {
    // X^2 - a X + p^{k-1} with k >= 3: p^2 | p^{k-1} always, so the
    // verdict reduces to p | a.
    for (std::uint64_t p : {2ull, 5ull, 13ull}) {
        Int pm(static_cast<unsigned long>(p));
        Int multiple(3 * pm);
        Int unit(3 * pm + 1);
        CHECK(all_roots_divisible(frobenius_charpoly(multiple, 12, p).poly,
                                  pm));
        CHECK_FALSE(all_roots_divisible(frobenius_charpoly(unit, 12, p).poly,
                                        pm));
    }
}

TEST_CASE("reversed divisor polynomial") {
    // (X-1)(X-2), N = 2: roots {1,2} map to {2,1}, polynomial unchanged
    IntPolynomial g({2, -3, 1});
    ReversedDivisorPoly r = reversed_divisor_poly(g, 2);
    CHECK(r.integral);
    CHECK(r.coeffs == std::vector<Rat>{Rat(2), Rat(-3), Rat(1)});

    ReversedDivisorPoly r2 = reversed_divisor_poly(IntPolynomial({-2, 1}), 3);
    CHECK_FALSE(r2.integral);
    CHECK(r2.coeffs == std::vector<Rat>{Rat(-3, 2), Rat(1)});

    ReversedDivisorPoly r3 = reversed_divisor_poly(IntPolynomial({-2, 1}), 4);
    CHECK(r3.integral);
    CHECK(r3.coeffs == std::vector<Rat>{Rat(-2), Rat(1)});

    CHECK_THROWS_AS(reversed_divisor_poly(IntPolynomial({0, 1}), 2),
                    ZeroConstantTerm);
    CHECK_THROWS_AS(reversed_divisor_poly(g, 0), InvalidInput);
}

TEST_CASE("reversing twice is the identity on integral outputs") {
    IntPolynomial g({2048, -24, 1});
    ReversedDivisorPoly once = reversed_divisor_poly(g, 2048);
    REQUIRE(once.integral);
    std::vector<Int> zc;
    for (const Rat& c : once.coeffs) zc.push_back(Int(c.get_num()));
    ReversedDivisorPoly twice = reversed_divisor_poly(IntPolynomial(zc), 2048);
    REQUIRE(twice.integral);
    for (std::size_t i = 0; i < twice.coeffs.size(); ++i)
        CHECK(twice.coeffs[i] == Rat(g.coeff(i)));
}

TEST_CASE("frobenius quadratic") {
    FrobeniusPoly f = frobenius_charpoly(-24, 12, 2);
    CHECK(f.poly.coeffs() == std::vector<Int>{2048, 24, 1});
    CHECK(f.field_cardinality == 2);
    CHECK(f.ambient_dimension == 2);

    FrobeniusPoly f5 = frobenius_charpoly(0, 12, 5);
    Int p11;
    mpz_ui_pow_ui(p11.get_mpz_t(), 5, 11);
    CHECK(f5.poly.coeffs() == std::vector<Int>{p11, 0, 1});

    CHECK_THROWS_AS(frobenius_charpoly(1, 2, 5), WeightTooSmall);
    CHECK_THROWS_AS(frobenius_charpoly(1, 12, 6), InvalidInput);
}

TEST_CASE("ordinary eigenform gives a unit root slope pair") {
    Int tau11 = delta(12).coeffs()[11];
    SlopeProfile s = newton_slopes(frobenius_charpoly(tau11, 12, 11).poly, 11);
    CHECK(s.infinite_count == 0);
    REQUIRE(s.slopes.size() == 2);
    CHECK(s.slopes[0] == Rat(0));
    CHECK(s.slopes[1] == Rat(11));
}

TEST_CASE("nonvanishing witness matches ordinarity") {
    CHECK(tdf_nonvanishing_witness(12, 11));
    CHECK(tdf_nonvanishing_witness(12, 13));
    CHECK_FALSE(tdf_nonvanishing_witness(12, 2411));
    CHECK_FALSE(tdf_nonvanishing_witness(12, 7));
    CHECK_FALSE(tdf_nonvanishing_witness(10, 11));  // empty space
    CHECK_THROWS_AS(tdf_nonvanishing_witness(13, 11), InvalidInput);
}

TEST_CASE("three routes agree on one-dimensional spaces") {
    for (int k : {12, 16, 18, 20, 22, 26}) {
        for (std::uint64_t p : primes_up_to(23)) {
            Int a_p = hecke_matrix(k, p).entries[0][0];
            bool route1 = tdf_nonvanishing_witness(k, p);
            bool route2 = !all_roots_divisible(
                frobenius_charpoly(a_p, k, p).poly,
                Int(static_cast<unsigned long>(p)));
            bool route3 = !mpz_divisible_ui_p(a_p.get_mpz_t(), p);
            CHECK(route1 == route2);
            CHECK(route2 == route3);
        }
    }
}
