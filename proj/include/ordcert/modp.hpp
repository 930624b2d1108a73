#ifndef ORDCERT_MODP_HPP
#define ORDCERT_MODP_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ordcert::modp {

// Mirror of the integer pipeline with every coefficient reduced mod a
// prime p >= 5. Avoids big-integer growth when p*dim is large. Not valid
// for p = 2 or 3: the monomial-to-echelon change of basis can degenerate
// there (its determinant is 2-3-smooth) and callers must take the exact
// integer route instead.

using Series = std::vector<std::uint64_t>;  // size = precision
using Matrix = std::vector<std::vector<std::uint64_t>>;

Series mul(const Series& a, const Series& b, std::uint64_t p);
Series pow(const Series& a, unsigned long e, std::uint64_t p);

Series eisenstein(int weight, std::size_t precision, std::uint64_t p);
Series delta(std::size_t precision, std::uint64_t p);

struct Space {
    int weight;
    std::size_t precision;
    std::vector<Series> full_basis;
    std::vector<Series> cusp_basis;
};

Space miller_basis(int k, std::size_t precision, std::uint64_t p);

// T_p on the mod-p cusp basis (basis precision p*dim+1). For k >= 2 the
// p^{k-1} term vanishes mod p, so this is the U operator's matrix.
Matrix hecke_matrix(int k, std::uint64_t p);

// Berkowitz (division-free), coefficients ascending, monic.
std::vector<std::uint64_t> char_poly(const Matrix& m, std::uint64_t p);

// Whole fast path in one call: char poly of T_p mod p on weight k.
std::vector<std::uint64_t> hecke_charpoly(int k, std::uint64_t p);

}  // namespace ordcert::modp

#endif
