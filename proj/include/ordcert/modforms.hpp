#ifndef ORDCERT_MODFORMS_HPP
#define ORDCERT_MODFORMS_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "ordcert/qseries.hpp"

namespace ordcert {

/**
 * Echelonized integral basis of the level-1 modular forms of one weight.
 * full_basis spans the whole space; cusp_basis its cusp subspace.
 * Element i of full_basis has coefficient delta_{ij} at q^j for
 * 0 <= j <= dim cusp, so cusp_basis[i-1] starts q^i + O(q^{dim+1}).
 */
struct ModFormSpace {
    int weight;
    std::size_t precision;
    std::vector<QSeries> full_basis;
    std::vector<QSeries> cusp_basis;
};

// Dimension of the cusp forms of level 1 and weight k.
int dim_cusp(int k);

// Normalized Eisenstein series, weight 4 or 6 only.
QSeries eisenstein(int weight, std::size_t precision);

// The discriminant cusp form; coefficient of q^n is tau(n).
// Built from the pentagonal-number expansion of prod (1-q^n), raised to
// the 24th power and shifted by q. Requires precision >= 2.
QSeries delta(std::size_t precision);

// Exponent pairs (a, b) with 4a + 6b = k, ordered by decreasing a.
// There are exactly dim_cusp(k) + 1 of them for even k >= 4.
std::vector<std::pair<int, int>> monomial_exponents(int k);

// Echelonized basis from the E4^a * E6^b monomial spans.
// Requires even k >= 0 and precision >= dim_cusp(k) + 1.
ModFormSpace miller_basis(int k, std::size_t precision);

}  // namespace ordcert

#endif
