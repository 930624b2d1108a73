#include "ordcert/qseries.hpp"

#include <algorithm>
#include <sstream>

#include "ordcert/errors.hpp"

namespace ordcert {

QSeries::QSeries(std::vector<Int> coeffs, std::optional<int> weight)
    : coeffs_(std::move(coeffs)), weight_(weight) {
    if (coeffs_.empty())
        throw InvalidInput("QSeries: precision must be positive");
}

QSeries QSeries::zero(std::size_t precision) {
    if (precision == 0)
        throw InvalidInput("QSeries: precision must be positive");
    return QSeries(std::vector<Int>(precision));
}

QSeries QSeries::one(std::size_t precision) {
    QSeries s = zero(precision);
    s.coeffs_[0] = 1;
    return s;
}

const Int& QSeries::coeff(std::size_t i) const {
    if (i >= coeffs_.size())
        throw InsufficientPrecision("QSeries: coefficient index " +
                                    std::to_string(i) +
                                    " beyond precision " +
                                    std::to_string(coeffs_.size()));
    return coeffs_[i];
}

QSeries QSeries::with_weight(int k) const { return QSeries(coeffs_, k); }

QSeries QSeries::truncated(std::size_t precision) const {
    if (precision == 0 || precision > coeffs_.size())
        throw InvalidInput("QSeries::truncated: bad precision " +
                           std::to_string(precision));
    return QSeries(std::vector<Int>(coeffs_.begin(),
                                    coeffs_.begin() +
                                        static_cast<std::ptrdiff_t>(precision)),
                   weight_);
}

bool QSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Int& c) { return c == 0; });
}

namespace {

std::optional<int> merged_weight(const QSeries& a, const QSeries& b) {
    if (a.weight() && b.weight() && *a.weight() == *b.weight())
        return a.weight();
    return std::nullopt;
}

}  // namespace

QSeries series_add(const QSeries& a, const QSeries& b) {
    std::size_t n = std::min(a.precision(), b.precision());
    std::vector<Int> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = a.coeffs()[i] + b.coeffs()[i];
    return QSeries(std::move(out), merged_weight(a, b));
}

QSeries series_sub(const QSeries& a, const QSeries& b) {
    std::size_t n = std::min(a.precision(), b.precision());
    std::vector<Int> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = a.coeffs()[i] - b.coeffs()[i];
    return QSeries(std::move(out), merged_weight(a, b));
}

QSeries series_scalar_mul(const QSeries& a, const Int& c) {
    std::vector<Int> out(a.coeffs());
    for (Int& x : out) x *= c;
    return QSeries(std::move(out), a.weight());
}

QSeries series_mul(const QSeries& a, const QSeries& b) {
    std::size_t n = std::min(a.precision(), b.precision());
    std::vector<Int> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coeffs()[i] == 0) continue;
        for (std::size_t j = 0; i + j < n; ++j) {
            if (b.coeffs()[j] == 0) continue;
            out[i + j] += a.coeffs()[i] * b.coeffs()[j];
        }
    }
    std::optional<int> w;
    if (a.weight() && b.weight()) w = *a.weight() + *b.weight();
    return QSeries(std::move(out), w);
}

QSeries series_pow(const QSeries& a, unsigned long e) {
    QSeries acc = QSeries::one(a.precision());
    if (a.weight()) acc = acc.with_weight(0);
    QSeries sq = a;
    while (e > 0) {
        if (e & 1) acc = series_mul(acc, sq);
        e >>= 1;
        if (e > 0) sq = series_mul(sq, sq);
    }
    return acc;
}

QSeries exact_div_scalar(const QSeries& a, const Int& c) {
    if (c == 0) throw InvalidInput("exact_div_scalar: division by zero");
    std::vector<Int> out(a.precision());
    for (std::size_t i = 0; i < a.precision(); ++i) {
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.coeffs()[i].get_mpz_t(),
                    c.get_mpz_t());
        if (r != 0)
            throw NotDivisible("exact_div_scalar: coefficient of q^" +
                               std::to_string(i) + " not divisible");
        out[i] = q;
    }
    return QSeries(std::move(out), a.weight());
}

QSeries series_shift_q(const QSeries& a) {
    std::vector<Int> out(a.precision());
    for (std::size_t i = 1; i < a.precision(); ++i) out[i] = a.coeffs()[i - 1];
    return QSeries(std::move(out));
}

std::string to_string(const QSeries& a) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < a.precision(); ++i) {
        const Int& c = a.coeffs()[i];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Int ac = abs(c);
        if (i == 0) {
            os << ac.get_str();
        } else {
            if (ac != 1) os << ac.get_str() << "*";
            os << "q";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    os << " + O(q^" << a.precision() << ")";
    return os.str();
}

}  // namespace ordcert
