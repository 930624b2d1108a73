#ifndef ORDCERT_ORDINARITY_HPP
#define ORDCERT_ORDINARITY_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ordcert/polynomial.hpp"
#include "ordcert/qseries.hpp"

namespace ordcert {

/// Result of the mod-p ordinarity computation on one cusp space.
struct OrdinarityReport {
    int k = 0;
    std::uint64_t p = 0;
    std::size_t dim = 0;
    // char poly of T_p reduced mod p, ascending, monic, size dim+1
    std::vector<std::uint64_t> charpoly_mod_p;
    std::size_t ordinary_rank = 0;
    bool contains_ordinary = false;
    // true when the integer pipeline ran; false for the mod-p mirror
    bool exact_path = true;
};

/// p-adic valuations of the roots of a monic integer polynomial, finite
/// ones ascending; roots equal to zero are tallied separately instead of
/// being reported as infinite slopes.
struct SlopeProfile {
    std::uint64_t p = 0;
    std::vector<Rat> slopes;
    std::size_t infinite_count = 0;

    bool operator==(const SlopeProfile&) const = default;
};

struct HidaClass {
    std::uint64_t residue = 0;        // common value of k mod (p-1)
    std::vector<int> weights;
    std::vector<std::size_t> ranks;   // parallel to weights
};

struct HidaReport {
    std::uint64_t p = 0;
    int k_max = 0;
    std::vector<HidaClass> classes;   // ordered by residue
    std::vector<std::string> violations;
    bool consistent = true;
    std::string note;
};

// True when some coefficient other than the leading one is nonzero mod p.
bool is_prime_to_p(const IntPolynomial& g, std::uint64_t p);

// Ordinary rank of the weight-k cusp space at p: dim minus the
// multiplicity of X in char poly(T_p) mod p. Zero-dimensional spaces
// report rank 0. Uses the mod-p mirror when p*dim > 500 (and p >= 5,
// where the mirror is valid); the exact integer pipeline otherwise.
OrdinarityReport ordinary_rank(int k, std::uint64_t p);

// Newton polygon of g at p: lower convex hull of (i, v_p(c_i)); negated
// segment slopes, each with its horizontal length as multiplicity.
SlopeProfile newton_slopes(const IntPolynomial& g, std::uint64_t p);

// Coefficient n of the output is coefficient n*p of f. Same precision
// contract as hecke_apply. For weight >= 2, T_p == U mod p.
QSeries u_operator(const QSeries& f, std::uint64_t p,
                   std::size_t out_precision);

// Ordinarity of the weight p-1 cusp space; requires p > 11 (OutOfRange
// otherwise). contains_ordinary is expected true for every such prime.
OrdinarityReport verify_serre_existence(std::uint64_t p);

// Groups even weights in [12, k_max] by k mod (p-1) and checks that the
// ordinary rank is constant on each class. Disagreements are reported in
// `violations`, never thrown. Requires prime p >= 13 and k_max >= p+11.
HidaReport verify_hida_invariance(std::uint64_t p, int k_max);

// True when ordinary_rank(k, p) = 0 for every even k <= k_max.
// Only p in {2, 3, 5, 7} are accepted (BadPrime otherwise).
bool verify_low_prime_vanishing(std::uint64_t p, int k_max);

// Primes p <= p_max whose weight-12 space has no p-ordinary form, i.e.
// tau(p) == 0 mod p, from a single exact expansion of delta. Ascending.
// threads bounds worker fan-out for the per-prime reductions.
std::vector<std::uint64_t> scan_delta(std::uint64_t p_max,
                                      unsigned threads = 1);

}  // namespace ordcert

#endif
