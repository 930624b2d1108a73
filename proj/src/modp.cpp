#include "ordcert/modp.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ordcert/errors.hpp"
#include "ordcert/modforms.hpp"
#include "ordcert/primes.hpp"

namespace ordcert::modp {

namespace {

void require_prime_ge5(std::uint64_t p, const char* who) {
    if (p < 5 || !is_prime(p))
        throw InvalidInput(std::string(who) +
                           ": modulus must be a prime >= 5, got " +
                           std::to_string(p));
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}

}  // namespace

Series mul(const Series& a, const Series& b, std::uint64_t p) {
    std::size_t n = std::min(a.size(), b.size());
    Series out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        // accumulate in 128 bits, reduce when the next add could wrap
        for (std::size_t j = 0; i + j < n; ++j) {
            if (b[j] == 0) continue;
            out[i + j] = static_cast<std::uint64_t>(
                (static_cast<unsigned __int128>(a[i]) * b[j] + out[i + j]) %
                p);
        }
    }
    return out;
}

Series pow(const Series& a, unsigned long e, std::uint64_t p) {
    Series acc(a.size(), 0);
    acc[0] = 1 % p;
    Series sq = a;
    while (e > 0) {
        if (e & 1) acc = mul(acc, sq, p);
        e >>= 1;
        if (e > 0) sq = mul(sq, sq, p);
    }
    return acc;
}

Series eisenstein(int weight, std::size_t precision, std::uint64_t p) {
    require_prime_ge5(p, "modp::eisenstein");
    if (weight != 4 && weight != 6)
        throw InvalidInput("modp::eisenstein: weight must be 4 or 6");
    if (precision == 0)
        throw InvalidInput("modp::eisenstein: precision must be positive");
    unsigned long r = weight == 4 ? 3 : 5;
    std::uint64_t factor = weight == 4 ? 240 % p : p - 504 % p;
    Series s(precision, 0);
    for (std::size_t d = 1; d < precision; ++d) {
        std::uint64_t dp = pow_mod(d, r, p);
        for (std::size_t m = d; m < precision; m += d)
            s[m] = (s[m] + dp) % p;
    }
    for (std::size_t i = 1; i < precision; ++i) s[i] = mul_mod(s[i], factor, p);
    s[0] = 1;
    return s;
}

Series delta(std::size_t precision, std::uint64_t p) {
    require_prime_ge5(p, "modp::delta");
    if (precision < 2)
        throw InvalidInput("modp::delta: precision must be >= 2");
    Series eta(precision, 0);
    eta[0] = 1;
    for (std::size_t j = 1;; ++j) {
        std::size_t g1 = j * (3 * j - 1) / 2;
        std::size_t g2 = j * (3 * j + 1) / 2;
        if (g1 >= precision && g2 >= precision) break;
        std::uint64_t s = j % 2 == 1 ? p - 1 : 1;
        if (g1 < precision) eta[g1] = (eta[g1] + s) % p;
        if (g2 < precision) eta[g2] = (eta[g2] + s) % p;
    }
    Series e24 = pow(eta, 24, p);
    Series out(precision, 0);
    for (std::size_t i = precision - 1; i >= 1; --i) out[i] = e24[i - 1];
    return out;
}

Space miller_basis(int k, std::size_t precision, std::uint64_t p) {
    require_prime_ge5(p, "modp::miller_basis");
    if (k < 0 || k % 2 != 0)
        throw InvalidInput("modp::miller_basis: weight must be even, >= 0");
    int d = dim_cusp(k);
    std::size_t npiv = static_cast<std::size_t>(d) + 1;
    if (precision < npiv)
        throw PrecisionTooLow("modp::miller_basis: precision too low");

    Space space{k, precision, {}, {}};
    auto mons = monomial_exponents(k);
    if (mons.empty()) return space;

    Series e4 = eisenstein(4, precision, p);
    Series e6 = eisenstein(6, precision, p);
    int a_max = 0, b_max = 0;
    for (auto [a, b] : mons) {
        a_max = std::max(a_max, a);
        b_max = std::max(b_max, b);
    }
    Series unit(precision, 0);
    unit[0] = 1;
    std::vector<Series> pow4{unit}, pow6{unit};
    for (int i = 1; i <= a_max; ++i) pow4.push_back(mul(pow4.back(), e4, p));
    for (int i = 1; i <= b_max; ++i) pow6.push_back(mul(pow6.back(), e6, p));

    std::vector<Series> rows;
    rows.reserve(mons.size());
    for (auto [a, b] : mons) rows.push_back(mul(pow4[a], pow6[b], p));

    // Gauss-Jordan over F_p on the leading npiv columns. A missing pivot
    // cannot happen for p >= 5 (see header); treat it as a logic error.
    for (std::size_t t = 0; t < npiv; ++t) {
        std::size_t piv = t;
        while (piv < rows.size() && rows[piv][t] == 0) ++piv;
        if (piv == rows.size())
            throw std::logic_error("modp::miller_basis: singular pivot");
        std::swap(rows[t], rows[piv]);
        std::uint64_t inv = inv_mod(rows[t][t], p);
        for (auto& x : rows[t]) x = mul_mod(x, inv, p);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == t || rows[i][t] == 0) continue;
            std::uint64_t f = rows[i][t];
            for (std::size_t j = t; j < precision; ++j)
                rows[i][j] =
                    sub_mod(rows[i][j], mul_mod(f, rows[t][j], p), p);
        }
    }

    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i >= 1 && i <= static_cast<std::size_t>(d))
            space.cusp_basis.push_back(rows[i]);
        space.full_basis.push_back(std::move(rows[i]));
    }
    return space;
}

Matrix hecke_matrix(int k, std::uint64_t p) {
    int d = dim_cusp(k);
    if (d == 0)
        throw EmptySpace("modp::hecke_matrix: no cusp forms in weight " +
                         std::to_string(k));
    std::size_t dim = static_cast<std::size_t>(d);
    Space space = miller_basis(k, p * dim + 1, p);

    // mirror of the integer formula; pk = p^{k-1} mod p is 0 for k >= 2
    std::uint64_t pk = pow_mod(p % p, static_cast<std::uint64_t>(k - 1), p);
    Matrix m(dim, std::vector<std::uint64_t>(dim, 0));
    for (std::size_t i = 0; i < dim; ++i) {
        const Series& f = space.cusp_basis[i];
        for (std::size_t j = 1; j <= dim; ++j) {
            std::uint64_t v = f[j * p];
            if (j % p == 0)
                v = (v + mul_mod(pk, f[j / p], p)) % p;
            m[j - 1][i] = v;
        }
    }
    return m;
}

std::vector<std::uint64_t> char_poly(const Matrix& a, std::uint64_t p) {
    std::size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n)
            throw InvalidInput("modp::char_poly: matrix must be square");
    if (n == 0) return {1 % p};

    auto neg = [p](std::uint64_t x) { return x == 0 ? 0 : p - x; };
    std::vector<std::uint64_t> poly{1 % p, neg(a[0][0] % p)};
    for (std::size_t r = 2; r <= n; ++r) {
        std::vector<std::uint64_t> col(r + 1, 0);
        col[0] = 1;
        col[1] = neg(a[r - 1][r - 1]);
        std::vector<std::uint64_t> v(r - 1);
        for (std::size_t i = 0; i < r - 1; ++i) v[i] = a[i][r - 1];
        for (std::size_t t = 2; t <= r; ++t) {
            std::uint64_t dot = 0;
            for (std::size_t i = 0; i < r - 1; ++i)
                dot = (dot + mul_mod(a[r - 1][i], v[i], p)) % p;
            col[t] = neg(dot);
            if (t == r) break;
            std::vector<std::uint64_t> w(r - 1, 0);
            for (std::size_t i = 0; i < r - 1; ++i)
                for (std::size_t j = 0; j < r - 1; ++j)
                    w[i] = (w[i] + mul_mod(a[i][j], v[j], p)) % p;
            v = std::move(w);
        }
        std::vector<std::uint64_t> q(r + 1, 0);
        for (std::size_t i = 0; i <= r; ++i) {
            std::uint64_t acc = 0;
            for (std::size_t j = 0; j < r && j <= i; ++j)
                acc = (acc + mul_mod(col[i - j], poly[j], p)) % p;
            q[i] = acc;
        }
        poly = std::move(q);
    }
    std::reverse(poly.begin(), poly.end());
    return poly;
}

std::vector<std::uint64_t> hecke_charpoly(int k, std::uint64_t p) {
    return char_poly(hecke_matrix(k, p), p);
}

}  // namespace ordcert::modp
