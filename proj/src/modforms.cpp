#include "ordcert/modforms.hpp"

#include <algorithm>
#include <string>

#include "ordcert/errors.hpp"

namespace ordcert {

int dim_cusp(int k) {
    if (k < 12 || k % 2 != 0 || k == 14) return 0;
    // k = 14 is the one weight >= 12 where floor(k/12) overcounts and the
    // k = 2 (mod 12) correction already fixes it; the explicit check above
    // is just the k < 12 clamp companion.
    return k % 12 == 2 ? k / 12 - 1 : k / 12;
}

namespace {

// divisor power sums sigma_r(1..precision-1) by sieving over divisors
std::vector<Int> sigma_table(unsigned r, std::size_t precision) {
    std::vector<Int> s(precision);
    Int dp;
    for (std::size_t d = 1; d < precision; ++d) {
        mpz_ui_pow_ui(dp.get_mpz_t(), d, r);
        for (std::size_t m = d; m < precision; m += d) s[m] += dp;
    }
    return s;
}

// prod_{n>=1} (1 - q^n) via the pentagonal number theorem
std::vector<Int> pentagonal_product(std::size_t precision) {
    std::vector<Int> c(precision);
    c[0] = 1;
    for (std::size_t j = 1;; ++j) {
        std::size_t g1 = j * (3 * j - 1) / 2;
        std::size_t g2 = j * (3 * j + 1) / 2;
        if (g1 >= precision && g2 >= precision) break;
        int s = j % 2 == 1 ? -1 : 1;
        if (g1 < precision) c[g1] += s;
        if (g2 < precision) c[g2] += s;
    }
    return c;
}

}  // namespace

QSeries eisenstein(int weight, std::size_t precision) {
    if (weight != 4 && weight != 6)
        throw InvalidInput("eisenstein: weight must be 4 or 6, got " +
                           std::to_string(weight));
    if (precision == 0)
        throw InvalidInput("eisenstein: precision must be positive");
    unsigned r = weight == 4 ? 3 : 5;
    Int factor = weight == 4 ? 240 : -504;
    std::vector<Int> c = sigma_table(r, precision);
    for (Int& x : c) x *= factor;
    c[0] = 1;
    return QSeries(std::move(c), weight);
}

QSeries delta(std::size_t precision) {
    if (precision < 2) throw InvalidInput("delta: precision must be >= 2");
    QSeries eta(pentagonal_product(precision));
    return series_shift_q(series_pow(eta, 24)).with_weight(12);
}

std::vector<std::pair<int, int>> monomial_exponents(int k) {
    std::vector<std::pair<int, int>> out;
    if (k < 0) return out;
    for (int b = 0; 6 * b <= k; ++b) {
        int rem = k - 6 * b;
        if (rem % 4 == 0) out.emplace_back(rem / 4, b);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x.first > y.first; });
    return out;
}

namespace {

using Row = std::vector<Int>;

// Reduced echelon form over Z with pivots on the leading npivots columns.
// Forward pass is Bareiss (exact divisions by the previous pivot), the
// backward pass is division-free, and each row is normalized by its pivot
// at the end. The matrices handled here are known to have unimodular
// echelon reductions, so a failed normalization division is a bug.
void echelonize(std::vector<Row>& rows, std::size_t npivots) {
    std::size_t ncols = rows.empty() ? 0 : rows[0].size();
    Int prev = 1;
    for (std::size_t t = 0; t < npivots; ++t) {
        std::size_t piv = t;
        while (piv < rows.size() && rows[piv][t] == 0) ++piv;
        if (piv == rows.size())
            throw NotDivisible("echelonize: zero pivot column " +
                               std::to_string(t));
        std::swap(rows[t], rows[piv]);
        for (std::size_t i = t + 1; i < rows.size(); ++i) {
            for (std::size_t j = t + 1; j < ncols; ++j) {
                Int v = rows[t][t] * rows[i][j] - rows[i][t] * rows[t][j];
                mpz_divexact(rows[i][j].get_mpz_t(), v.get_mpz_t(),
                             prev.get_mpz_t());
            }
            rows[i][t] = 0;
        }
        prev = rows[t][t];
    }
    for (std::size_t t = npivots; t-- > 1;) {
        for (std::size_t i = 0; i < t; ++i) {
            if (rows[i][t] == 0) continue;
            for (std::size_t j = t + 1; j < ncols; ++j)
                rows[i][j] = rows[t][t] * rows[i][j] - rows[i][t] * rows[t][j];
            for (std::size_t j = 0; j < t; ++j) rows[i][j] *= rows[t][t];
            rows[i][t] = 0;
        }
    }
    for (std::size_t t = 0; t < npivots; ++t) {
        const Int piv = rows[t][t];
        for (std::size_t j = t; j < ncols; ++j) {
            Int q, r;
            mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rows[t][j].get_mpz_t(),
                        piv.get_mpz_t());
            if (r != 0)
                throw NotDivisible(
                    "echelonize: non-integral entry after normalization");
            rows[t][j] = q;
        }
    }
}

}  // namespace

ModFormSpace miller_basis(int k, std::size_t precision) {
    if (k < 0 || k % 2 != 0)
        throw InvalidInput("miller_basis: weight must be even and >= 0");
    int d = dim_cusp(k);
    if (precision < static_cast<std::size_t>(d) + 1)
        throw PrecisionTooLow("miller_basis: precision " +
                              std::to_string(precision) + " below " +
                              std::to_string(d + 1) + " for weight " +
                              std::to_string(k));

    ModFormSpace space{k, precision, {}, {}};
    auto mons = monomial_exponents(k);
    if (mons.empty()) return space;  // weight 2: no forms at level 1

    QSeries e4 = eisenstein(4, precision);
    QSeries e6 = eisenstein(6, precision);
    int a_max = 0, b_max = 0;
    for (auto [a, b] : mons) {
        a_max = std::max(a_max, a);
        b_max = std::max(b_max, b);
    }
    std::vector<QSeries> pow4{QSeries::one(precision).with_weight(0)};
    for (int i = 1; i <= a_max; ++i)
        pow4.push_back(series_mul(pow4.back(), e4));
    std::vector<QSeries> pow6{QSeries::one(precision).with_weight(0)};
    for (int i = 1; i <= b_max; ++i)
        pow6.push_back(series_mul(pow6.back(), e6));

    std::vector<std::vector<Int>> rows;
    rows.reserve(mons.size());
    for (auto [a, b] : mons)
        rows.push_back(series_mul(pow4[a], pow6[b]).coeffs());

    echelonize(rows, static_cast<std::size_t>(d) + 1);

    for (std::size_t i = 0; i < rows.size(); ++i) {
        QSeries f = QSeries(std::move(rows[i]), k);
        if (i >= 1 && i <= static_cast<std::size_t>(d))
            space.cusp_basis.push_back(f);
        space.full_basis.push_back(std::move(f));
    }
    return space;
}

}  // namespace ordcert
