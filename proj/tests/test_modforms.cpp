#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "ordcert/errors.hpp"
#include "ordcert/modforms.hpp"
#include "ordcert/modp.hpp"
#include "ordcert/qseries.hpp"

using namespace ordcert;

TEST_CASE("cusp form dimensions") {
    CHECK(dim_cusp(12) == 1);
    CHECK(dim_cusp(26) == 1);   // 26 = 2 mod 12
    CHECK(dim_cusp(0) == 0);
    CHECK(dim_cusp(11) == 0);
    CHECK(dim_cusp(14) == 0);
    CHECK(dim_cusp(2) == 0);
    CHECK(dim_cusp(16) == 1);
    CHECK(dim_cusp(24) == 2);
    CHECK(dim_cusp(36) == 3);
    CHECK(dim_cusp(96) == 8);
    CHECK(dim_cusp(100) == 8);
    CHECK(dim_cusp(120) == 10);
    CHECK(dim_cusp(-4) == 0);
}

TEST_CASE("eisenstein series against divisor sums") {
    CHECK(eisenstein(4, 1).coeffs() == std::vector<Int>{1});
    QSeries e4 = eisenstein(4, 3);
    CHECK(e4.coeffs() == std::vector<Int>{1, 240, 2160});
    CHECK(e4.weight() == 4);
    QSeries e6 = eisenstein(6, 2);
    CHECK(e6.coeffs() == std::vector<Int>{1, -504});

    QSeries e4_big = eisenstein(4, 40);
    QSeries e6_big = eisenstein(6, 40);
    for (unsigned long n = 1; n < 40; ++n) {
        CHECK(e4_big.coeffs()[n] == 240 * oracles::sigma(3, n));
        CHECK(e6_big.coeffs()[n] == -504 * oracles::sigma(5, n));
    }
    CHECK_THROWS_AS(eisenstein(8, 5), InvalidInput);
}

TEST_CASE("delta: pentagonal route, naive route, eisenstein identity") {
    QSeries d = delta(4);
    CHECK(d.coeffs() == std::vector<Int>{0, 1, -24, 252});
    CHECK(delta(2).coeffs() == std::vector<Int>{0, 1});
    CHECK(d.weight() == 12);

    QSeries d40 = delta(40);
    CHECK(d40.coeffs() == oracles::delta_series(40));

    // 1728 * delta = E4^3 - E6^2
    QSeries e4 = eisenstein(4, 40);
    QSeries e6 = eisenstein(6, 40);
    QSeries num = series_sub(series_pow(e4, 3), series_pow(e6, 2));
    CHECK(exact_div_scalar(num, 1728) == d40);

    CHECK_THROWS_AS(delta(1), InvalidInput);
}

TEST_CASE("tau is multiplicative on coprime arguments") {
    QSeries d = delta(36);
    auto tau = [&](std::size_t n) { return d.coeffs()[n]; };
    CHECK(tau(6) == tau(2) * tau(3));
    CHECK(tau(10) == tau(2) * tau(5));
    CHECK(tau(15) == tau(3) * tau(5));
    CHECK(tau(35) == tau(5) * tau(7));
    CHECK(tau(2) == -24);
}

TEST_CASE("monomial exponents") {
    CHECK(monomial_exponents(12) ==
          std::vector<std::pair<int, int>>{{3, 0}, {0, 2}});
    CHECK(monomial_exponents(14) ==
          std::vector<std::pair<int, int>>{{2, 1}});
    CHECK(monomial_exponents(2).empty());
    CHECK(monomial_exponents(0) ==
          std::vector<std::pair<int, int>>{{0, 0}});
}

TEST_CASE("miller basis: known small spaces") {
    ModFormSpace s12 = miller_basis(12, 5);
    REQUIRE(s12.cusp_basis.size() == 1);
    CHECK(s12.cusp_basis[0].coeffs() ==
          std::vector<Int>{0, 1, -24, 252, -1472});
    CHECK(s12.full_basis.size() == 2);
    CHECK(s12.cusp_basis[0] == delta(5));

    ModFormSpace s4 = miller_basis(4, 3);
    REQUIRE(s4.full_basis.size() == 1);
    CHECK(s4.full_basis[0].coeffs() == std::vector<Int>{1, 240, 2160});
    CHECK(s4.cusp_basis.empty());

    CHECK(miller_basis(100, 10).cusp_basis.size() == 8);

    ModFormSpace s0 = miller_basis(0, 3);
    CHECK(s0.full_basis.size() == 1);
    CHECK(s0.full_basis[0] == QSeries::one(3));

    ModFormSpace s2 = miller_basis(2, 3);
    CHECK(s2.full_basis.empty());
    CHECK(s2.cusp_basis.empty());
}

TEST_CASE("miller basis: errors") {
    CHECK_THROWS_AS(miller_basis(12, 1), PrecisionTooLow);
    CHECK_THROWS_AS(miller_basis(11, 5), InvalidInput);
    CHECK_THROWS_AS(miller_basis(-2, 5), InvalidInput);
}

TEST_CASE("miller basis: echelon shape across all even weights to 200") {
    for (int k = 0; k <= 200; k += 2) {
        std::size_t d = static_cast<std::size_t>(dim_cusp(k));
        std::size_t prec = d + 3;
        ModFormSpace s = miller_basis(k, prec);
        REQUIRE(s.cusp_basis.size() == d);
        if (k != 2)
            REQUIRE(s.full_basis.size() == d + 1);
        for (std::size_t i = 0; i < s.full_basis.size(); ++i)
            for (std::size_t j = 0; j <= d; ++j)
                CHECK(s.full_basis[i].coeffs()[j] == (i == j ? 1 : 0));
        for (const QSeries& f : s.cusp_basis)
            CHECK(f.coeffs()[0] == 0);
    }
}

TEST_CASE("mod-p basis mirrors the integer basis") {
    for (auto [k, p] : {std::pair<int, std::uint64_t>{12, 5},
                        {24, 13},
                        {36, 17},
                        {96, 97}}) {
        std::size_t prec = static_cast<std::size_t>(dim_cusp(k)) + 4;
        ModFormSpace exact = miller_basis(k, prec);
        modp::Space mirror = modp::miller_basis(k, prec, p);
        REQUIRE(mirror.cusp_basis.size() == exact.cusp_basis.size());
        Int pm(static_cast<unsigned long>(p));
        for (std::size_t i = 0; i < exact.cusp_basis.size(); ++i)
            for (std::size_t j = 0; j < prec; ++j) {
                Int r = exact.cusp_basis[i].coeffs()[j] % pm;
                if (r < 0) r += pm;
                CHECK(r.get_ui() == mirror.cusp_basis[i][j]);
            }
    }
}

TEST_CASE("mod-p delta mirrors the exact delta") {
    QSeries d = delta(60);
    for (std::uint64_t p : {5ull, 13ull, 2411ull}) {
        modp::Series dm = modp::delta(60, p);
        Int pm(static_cast<unsigned long>(p));
        for (std::size_t i = 0; i < 60; ++i) {
            Int r = d.coeffs()[i] % pm;
            if (r < 0) r += pm;
            CHECK(r.get_ui() == dm[i]);
        }
    }
}
