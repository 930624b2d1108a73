#ifndef ORDCERT_HECKE_HPP
#define ORDCERT_HECKE_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ordcert/polynomial.hpp"
#include "ordcert/qseries.hpp"

namespace ordcert {

using IntMatrix = std::vector<std::vector<Int>>;

/// Matrix of T_p acting on the echelonized cusp basis of weight k.
/// entries[j][i] is the coefficient of q^{j+1} in T_p applied to basis
/// element i, so column i is the image of cusp_basis[i].
struct HeckeMatrix {
    std::uint64_t p;
    int k;
    IntMatrix entries;
    std::size_t basis_precision;

    std::size_t dim() const noexcept { return entries.size(); }
};

// T_p on a weight-k q-expansion, truncated to out_precision terms:
// coefficient n of the image is a(np) + p^{k-1} a(n/p), the second term
// only when p divides n. Requires f.precision >= p*(out_precision-1)+1;
// throws InsufficientPrecision otherwise rather than truncating.
QSeries hecke_apply(const QSeries& f, int k, std::uint64_t p,
                    std::size_t out_precision);

// T_p on the cusp space of weight k, via a basis at precision p*dim+1.
// Throws EmptySpace when the space is zero-dimensional.
HeckeMatrix hecke_matrix(int k, std::uint64_t p);

// det(X*I - M), coefficients ascending, by Faddeev-LeVerrier.  The scalar
// divisions it performs are exact for integer matrices; a remainder is an
// internal error (NotDivisible).
IntPolynomial char_poly(const IntMatrix& m);

// Division-free characteristic polynomial (Berkowitz).  Same contract as
// char_poly; kept as an independent route and for mirroring mod p where
// the Faddeev-LeVerrier divisions may hit the modulus.
IntPolynomial char_poly_berkowitz(const IntMatrix& m);

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
Int mat_trace(const IntMatrix& m);

}  // namespace ordcert

#endif
