#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <vector>

#include "ordcert/errors.hpp"
#include "ordcert/hecke.hpp"
#include "ordcert/modforms.hpp"
#include "ordcert/modp.hpp"
#include "ordcert/ordinarity.hpp"
#include "ordcert/polynomial.hpp"

using namespace ordcert;

TEST_CASE("is_prime_to_p") {
    CHECK(is_prime_to_p(IntPolynomial({24, 1}), 11));
    CHECK_FALSE(is_prime_to_p(IntPolynomial({25, -5, 1}), 5));
    IntPolynomial g({-20468736, -1080, 1});
    CHECK(is_prime_to_p(g, 11));
    CHECK_FALSE(is_prime_to_p(g, 2));  // both lower coefficients are even
    IntPolynomial x2 = IntPolynomial::x_power(2);
    CHECK_FALSE(is_prime_to_p(x2, 7)); // X^2: every lower coefficient is 0
    IntPolynomial h({0, 5, 1});
    CHECK(is_prime_to_p(h, 13));
    CHECK_FALSE(is_prime_to_p(h, 5));
}

TEST_CASE("ordinary rank on weight 12") {
    OrdinarityReport r = ordinary_rank(12, 11);
    CHECK(r.dim == 1);
    CHECK(r.ordinary_rank == 1);
    CHECK(r.contains_ordinary);
    CHECK(r.exact_path);
    // tau(11) = 534612 = 11 * 48601 + 1, so 1 mod 11
    CHECK(r.charpoly_mod_p == std::vector<std::uint64_t>{10, 1});

    // 2411 is the one prime below 2500 beyond 2, 3, 5, 7 where delta is
    // not ordinary. p*dim = 2411 > 500, so the mirror path runs.
    OrdinarityReport bad = ordinary_rank(12, 2411);
    CHECK_FALSE(bad.contains_ordinary);
    CHECK(bad.ordinary_rank == 0);
    CHECK_FALSE(bad.exact_path);

    OrdinarityReport low = ordinary_rank(12, 7);
    CHECK(low.ordinary_rank == 0);
    CHECK_FALSE(low.contains_ordinary);

    OrdinarityReport empty = ordinary_rank(10, 5);
    CHECK(empty.dim == 0);
    CHECK(empty.ordinary_rank == 0);
    CHECK_FALSE(empty.contains_ordinary);
    CHECK(empty.charpoly_mod_p == std::vector<std::uint64_t>{1});

    CHECK_THROWS_AS(ordinary_rank(12, 12), InvalidInput);
}

TEST_CASE("ordinary rank matches x-multiplicity of the mod-p charpoly") {
    OrdinarityReport r = ordinary_rank(36, 17);
    CHECK(r.dim == 3);
    CHECK(r.charpoly_mod_p == std::vector<std::uint64_t>{0, 0, 0, 1});
    CHECK(r.ordinary_rank == 0);
    CHECK_FALSE(r.contains_ordinary);

    OrdinarityReport big = ordinary_rank(96, 97);
    CHECK(big.dim == 8);
    CHECK(big.ordinary_rank == 8);
    CHECK(big.charpoly_mod_p ==
          std::vector<std::uint64_t>{60, 65, 15, 37, 8, 68, 66, 54, 1});
    CHECK_FALSE(big.exact_path);  // 97*8 = 776 > 500
}

TEST_CASE("newton slopes") {
    IntPolynomial g({0, -24, 1});  // X^2 - 24X = X(X - 24)
    SlopeProfile s = newton_slopes(g, 2);
    CHECK(s.infinite_count == 1);
    REQUIRE(s.slopes.size() == 1);
    CHECK(s.slopes[0] == Rat(3));  // v_2(24) = 3

    IntPolynomial h({2048, -24, 1});  // frobenius at p=2, k=12
    SlopeProfile sh = newton_slopes(h, 2);
    CHECK(sh.infinite_count == 0);
    REQUIRE(sh.slopes.size() == 2);
    CHECK(sh.slopes[0] == Rat(3));
    CHECK(sh.slopes[1] == Rat(8));  // slopes sum to v_2(2048) = 11

    IntPolynomial ord({-1, 0, 1});  // X^2 - 1
    SlopeProfile so = newton_slopes(ord, 5);
    CHECK(so.slopes == std::vector<Rat>{Rat(0), Rat(0)});

    // supersingular pair: X^2 + 13, slopes 1/2 each
    IntPolynomial ss({13, 0, 1});
    SlopeProfile sss = newton_slopes(ss, 13);
    REQUIRE(sss.slopes.size() == 2);
    CHECK(sss.slopes[0] == Rat(1, 2));
    CHECK(sss.slopes[1] == Rat(1, 2));

    // X^2 - 7X + 49: one segment of slope 1 and length 2
    SlopeProfile mid = newton_slopes(IntPolynomial({49, -7, 1}), 7);
    CHECK(mid.slopes == std::vector<Rat>{Rat(1), Rat(1)});

    SlopeProfile lin = newton_slopes(IntPolynomial({24, 1}), 11);
    CHECK(lin.slopes == std::vector<Rat>{Rat(0)});
    CHECK(lin.infinite_count == 0);

    CHECK_THROWS_AS(newton_slopes(g, 10), InvalidInput);
}

TEST_CASE("slope profile counts match degree") {
    for (auto [k, p] : {std::pair<int, std::uint64_t>{24, 2},
                        {36, 2},
                        {24, 13},
                        {48, 5}}) {
        IntPolynomial c = char_poly(hecke_matrix(k, p).entries);
        SlopeProfile s = newton_slopes(c, p);
        CHECK(s.slopes.size() + s.infinite_count == c.degree());
        for (std::size_t i = 1; i < s.slopes.size(); ++i)
            CHECK(s.slopes[i - 1] <= s.slopes[i]);
    }
}

TEST_CASE("slopes sum to the valuation of the determinant") {
    for (auto [k, p] : {std::pair<int, std::uint64_t>{24, 2},
                        {36, 2},
                        {24, 13},
                        {36, 17},
                        {48, 5},
                        {48, 7}}) {
        IntPolynomial c = char_poly(hecke_matrix(k, p).entries);
        REQUIRE(c.coeff(0) != 0);  // det T_p nonzero on these spaces
        Int reduced;
        Int pm(static_cast<unsigned long>(p));
        mp_bitcnt_t v = mpz_remove(reduced.get_mpz_t(),
                                   c.coeff(0).get_mpz_t(), pm.get_mpz_t());
        SlopeProfile s = newton_slopes(c, p);
        CHECK(s.infinite_count == 0);
        Rat total(0);
        for (const Rat& r : s.slopes) total += r;
        CHECK(total == Rat(static_cast<unsigned long>(v)));
    }
}

TEST_CASE("u operator and T_p agree mod p in weight >= 2") {
    for (auto [k, p] : {std::pair<int, std::uint64_t>{12, 2},
                        {12, 3},
                        {12, 5},
                        {12, 7},
                        {12, 11},
                        {16, 5},
                        {24, 13}}) {
        std::size_t out = 6;
        std::size_t need = p * (out - 1) + 1;
        ModFormSpace space = miller_basis(k, need);
        Int pm(static_cast<unsigned long>(p));
        for (const QSeries& f : space.cusp_basis) {
            QSeries t = hecke_apply(f, k, p, out);
            QSeries u = u_operator(f, p, out);
            for (std::size_t n = 0; n < out; ++n) {
                Int diff = (t.coeffs()[n] - u.coeffs()[n]) % pm;
                CHECK(diff == 0);
            }
        }
    }

    QSeries d = delta(11);
    CHECK(u_operator(d, 2, 6).coeffs() ==
          std::vector<Int>{0, -24, -1472, -6048, 84480, -115920});
    CHECK_THROWS_AS(u_operator(d, 2, 7), InsufficientPrecision);

    // the constant series is a fixed point
    CHECK(u_operator(QSeries::one(13), 3, 5) == QSeries::one(5));
}

TEST_CASE("serre existence at representative primes") {
    OrdinarityReport r13 = verify_serre_existence(13);
    CHECK(r13.k == 12);
    CHECK(r13.contains_ordinary);

    OrdinarityReport r97 = verify_serre_existence(97);
    CHECK(r97.k == 96);
    CHECK(r97.contains_ordinary);
    CHECK(r97.ordinary_rank == 8);

    CHECK_THROWS_AS(verify_serre_existence(11), OutOfRange);
    CHECK_THROWS_AS(verify_serre_existence(15), InvalidInput);
}

TEST_CASE("hida invariance at p = 13") {
    HidaReport h = verify_hida_invariance(13, 48);
    CHECK(h.consistent);
    CHECK(h.violations.empty());
    // weights 16 and 28 share residue 4 mod 12
    CHECK(ordinary_rank(16, 13).ordinary_rank ==
          ordinary_rank(28, 13).ordinary_rank);
    bool saw_residue_zero = false;
    for (const HidaClass& cls : h.classes) {
        REQUIRE(cls.weights.size() == cls.ranks.size());
        for (int k : cls.weights)
            CHECK(static_cast<std::uint64_t>(k % 12) == cls.residue);
        if (cls.residue == 0) {
            saw_residue_zero = true;
            for (std::size_t r : cls.ranks) CHECK(r == 1);
        }
    }
    CHECK(saw_residue_zero);

    CHECK_THROWS_AS(verify_hida_invariance(11, 48), OutOfRange);
    CHECK_THROWS_AS(verify_hida_invariance(13, 20), OutOfRange);
}

TEST_CASE("hida classes with only zero-dimensional spaces report rank 0") {
    // at p = 17, k_max = 28 the class of 14 mod 16 is the single weight 14,
    // whose cusp space is zero
    HidaReport h = verify_hida_invariance(17, 28);
    CHECK(h.consistent);
    bool saw = false;
    for (const HidaClass& cls : h.classes) {
        if (cls.residue != 14) continue;
        saw = true;
        CHECK(cls.weights == std::vector<int>{14});
        CHECK(cls.ranks == std::vector<std::size_t>{0});
    }
    CHECK(saw);
}

TEST_CASE("low prime vanishing") {
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull})
        CHECK(verify_low_prime_vanishing(p, 40));
    CHECK_THROWS_AS(verify_low_prime_vanishing(11, 40), BadPrime);
    CHECK_THROWS_AS(verify_low_prime_vanishing(4, 40), BadPrime);
}

TEST_CASE("scan delta small ranges") {
    CHECK(scan_delta(10) == std::vector<std::uint64_t>{2, 3, 5, 7});
    CHECK(scan_delta(10, 4) == std::vector<std::uint64_t>{2, 3, 5, 7});
    CHECK(scan_delta(1).empty());
    CHECK(scan_delta(6) == std::vector<std::uint64_t>{2, 3, 5});
    // 11 and 13 are ordinary, so the list does not grow past 7 until 2411
    CHECK(scan_delta(100) == std::vector<std::uint64_t>{2, 3, 5, 7});
}

TEST_CASE("three routes to the ordinary rank agree") {
    for (int k : {12, 16, 24}) {
        for (std::uint64_t p : {5ull, 7ull, 11ull, 13ull}) {
            OrdinarityReport r = ordinary_rank(k, p);
            if (r.dim == 0) continue;
            // route 2: exact charpoly reduced
            IntPolynomial c = char_poly(hecke_matrix(k, p).entries);
            CHECK(reduce_mod_p(c, p) == r.charpoly_mod_p);
            // route 3: mod-p mirror, valid for p >= 5
            if (p >= 5) CHECK(modp::hecke_charpoly(k, p) == r.charpoly_mod_p);
            // newton slopes: ordinary rank = number of zero slopes
            SlopeProfile s = newton_slopes(c, p);
            std::size_t zero_slopes = 0;
            for (const Rat& v : s.slopes)
                if (v == 0) ++zero_slopes;
            CHECK(zero_slopes == r.ordinary_rank);
        }
    }
}
