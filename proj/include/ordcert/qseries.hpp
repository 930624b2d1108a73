#ifndef ORDCERT_QSERIES_HPP
#define ORDCERT_QSERIES_HPP

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace ordcert {

using Int = mpz_class;
using Rat = mpq_class;

/**
 * Truncated integer q-expansion: coeffs[i] is the coefficient of q^i and
 * the series is known exactly up to (not including) q^precision.
 * Precision is always coeffs.size() and is never extended implicitly;
 * binary operations truncate to the shorter operand.
 *
 * A series may carry an optional weight tag when it is the q-expansion of
 * a modular form. The tag is bookkeeping only; arithmetic maintains it
 * where the result has a well-defined weight and drops it otherwise.
 */
class QSeries {
  public:
    explicit QSeries(std::vector<Int> coeffs,
                     std::optional<int> weight = std::nullopt);

    static QSeries zero(std::size_t precision);
    static QSeries one(std::size_t precision);

    std::size_t precision() const noexcept { return coeffs_.size(); }
    const Int& coeff(std::size_t i) const;
    const std::vector<Int>& coeffs() const noexcept { return coeffs_; }
    std::optional<int> weight() const noexcept { return weight_; }

    QSeries with_weight(int k) const;
    QSeries truncated(std::size_t precision) const;
    bool is_zero() const;

    // compares coefficients and precision; the weight tag is ignored
    bool operator==(const QSeries& other) const {
        return coeffs_ == other.coeffs_;
    }

  private:
    std::vector<Int> coeffs_;
    std::optional<int> weight_;
};

QSeries series_add(const QSeries& a, const QSeries& b);
QSeries series_sub(const QSeries& a, const QSeries& b);
QSeries series_scalar_mul(const QSeries& a, const Int& c);

// Cauchy product truncated to min(a.precision, b.precision).
QSeries series_mul(const QSeries& a, const QSeries& b);

// Repeated squaring at a.precision; e = 0 gives the constant series 1.
QSeries series_pow(const QSeries& a, unsigned long e);

// Divides every coefficient by c; throws NotDivisible if any coefficient
// is not an exact multiple (and InvalidInput for c = 0).
QSeries exact_div_scalar(const QSeries& a, const Int& c);

// Multiplication by q at fixed precision: the top coefficient falls off.
QSeries series_shift_q(const QSeries& a);

// Human-readable rendering, e.g. "1 + 240*q + 2160*q^2 + O(q^3)".
std::string to_string(const QSeries& a);

}  // namespace ordcert

#endif
