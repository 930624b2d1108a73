#include "ordcert/weil.hpp"

#include <stdexcept>
#include <string>

#include "ordcert/errors.hpp"
#include "ordcert/hecke.hpp"
#include "ordcert/modforms.hpp"
#include "ordcert/ordinarity.hpp"
#include "ordcert/primes.hpp"

namespace ordcert {

bool all_roots_divisible(const IntPolynomial& g, const Int& m) {
    if (m == 0) throw InvalidInput("all_roots_divisible: m must be nonzero");
    std::size_t e = g.degree();
    Int mj = 1;
    for (std::size_t j = 1; j <= e; ++j) {
        mj *= m;
        if (!mpz_divisible_p(g.coeff(e - j).get_mpz_t(), mj.get_mpz_t()))
            return false;
    }
    return true;
}

ReversedDivisorPoly reversed_divisor_poly(const IntPolynomial& g,
                                          const Int& N) {
    if (g.coeff(0) == 0)
        throw ZeroConstantTerm(
            "reversed_divisor_poly: zero is a root, cannot invert");
    if (N == 0)
        throw InvalidInput("reversed_divisor_poly: N must be nonzero");
    std::size_t e = g.degree();
    ReversedDivisorPoly out;
    out.coeffs.resize(e + 1);
    out.integral = true;
    // coefficient of X^j is c_{e-j} N^{e-j} / c_0
    Int npow = 1;
    for (std::size_t j = e + 1; j-- > 0;) {
        Int num = g.coeff(e - j) * npow;
        Rat r(num, g.coeff(0));
        r.canonicalize();
        if (r.get_den() != 1) out.integral = false;
        out.coeffs[j] = r;
        if (j > 0) npow *= N;
    }
    return out;
}

FrobeniusPoly frobenius_charpoly(const Int& a_p, int k, std::uint64_t p) {
    if (!is_prime(p))
        throw InvalidInput("frobenius_charpoly: p must be prime");
    if (k < 3)
        throw WeightTooSmall("frobenius_charpoly: weight must be >= 3, got " +
                             std::to_string(k));
    Int pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), p, static_cast<unsigned long>(k - 1));
    IntPolynomial poly({pk, -a_p, Int(1)});
    return FrobeniusPoly{std::move(poly), p, 2};
}

bool tdf_nonvanishing_witness(int k, std::uint64_t p) {
    if (k % 2 != 0)
        throw InvalidInput("tdf_nonvanishing_witness: weight must be even");
    OrdinarityReport rep = ordinary_rank(k, p);
    if (rep.dim == 1) {
        // one eigenform; compare against the Frobenius coefficient test
        Int a_p = hecke_matrix(k, p).entries[0][0];
        bool divisible =
            all_roots_divisible(frobenius_charpoly(a_p, k, p).poly,
                                Int(static_cast<unsigned long>(p)));
        if (divisible == rep.contains_ordinary)
            throw std::logic_error(
                "tdf_nonvanishing_witness: ordinarity and divisibility "
                "routes disagree");
    }
    return rep.contains_ordinary;
}

}  // namespace ordcert
