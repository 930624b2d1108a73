#ifndef ORDCERT_POLYNOMIAL_HPP
#define ORDCERT_POLYNOMIAL_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ordcert/qseries.hpp"

namespace ordcert {

/// Monic polynomial over Z, coefficients ascending (coeff(degree) == 1).
class IntPolynomial {
  public:
    explicit IntPolynomial(std::vector<Int> coeffs);

    static IntPolynomial x_power(std::size_t e);

    std::size_t degree() const noexcept { return coeffs_.size() - 1; }
    const Int& coeff(std::size_t i) const;
    const std::vector<Int>& coeffs() const noexcept { return coeffs_; }

    bool operator==(const IntPolynomial& other) const = default;

    std::string to_string() const;  // "X^2 + 24*X + 2048"

  private:
    std::vector<Int> coeffs_;
};

// Coefficients reduced into [0, p); ascending, same length.
std::vector<std::uint64_t> reduce_mod_p(const IntPolynomial& g,
                                        std::uint64_t p);

}  // namespace ordcert

#endif
