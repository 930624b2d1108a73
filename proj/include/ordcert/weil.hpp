#ifndef ORDCERT_WEIL_HPP
#define ORDCERT_WEIL_HPP

#include <cstdint>
#include <vector>

#include "ordcert/polynomial.hpp"
#include "ordcert/qseries.hpp"

namespace ordcert {

/// Monic integer polynomial tagged as the characteristic polynomial of a
/// Frobenius action: field_cardinality is the size of the base field and
/// ambient_dimension the dimension d entering the q^{d-1} divisor bound.
struct FrobeniusPoly {
    IntPolynomial poly;
    std::uint64_t field_cardinality;
    unsigned ambient_dimension;
};

/// reversed_divisor_poly output: may be non-integral, so rational
/// coefficients (ascending, monic) plus an integrality verdict.
struct ReversedDivisorPoly {
    std::vector<Rat> coeffs;
    bool integral;
};

// Whether every root of monic g is divisible by m over the algebraic
// integers, i.e. g(mX)/m^deg has integer coefficients. Equivalent
// coefficient test: m^j divides coeff(degree - j) for all j >= 1; no
// root-finding involved.
bool all_roots_divisible(const IntPolynomial& g, const Int& m);

// The monic polynomial whose roots are N/lambda over the roots lambda of
// g. Throws ZeroConstantTerm when g(0) = 0.
ReversedDivisorPoly reversed_divisor_poly(const IntPolynomial& g,
                                          const Int& N);

// Frobenius quadratic X^2 - a_p X + p^{k-1} of a weight-k eigenform.
// Requires k >= 3 (WeightTooSmall below that: the p^{k-1} twist only
// separates the unit root when the motivic weight is at least 2).
FrobeniusPoly frobenius_charpoly(const Int& a_p, int k, std::uint64_t p);

// True when the weight-k cusp space contributes a Frobenius eigenvalue
// not divisible by p, i.e. when it contains a p-ordinary form. On
// one-dimensional spaces the answer is cross-checked against the
// coefficient divisibility test on the Frobenius quadratic.
bool tdf_nonvanishing_witness(int k, std::uint64_t p);

}  // namespace ordcert

#endif
