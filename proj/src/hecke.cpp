#include "ordcert/hecke.hpp"

#include <string>

#include "ordcert/errors.hpp"
#include "ordcert/modforms.hpp"

namespace ordcert {

QSeries hecke_apply(const QSeries& f, int k, std::uint64_t p,
                    std::size_t out_precision) {
    if (k < 1) throw InvalidInput("hecke_apply: weight must be >= 1");
    if (p < 2) throw InvalidInput("hecke_apply: p must be >= 2");
    if (out_precision == 0)
        throw InvalidInput("hecke_apply: output precision must be positive");
    std::size_t need = p * (out_precision - 1) + 1;
    if (f.precision() < need)
        throw InsufficientPrecision(
            "hecke_apply: need input precision " + std::to_string(need) +
            ", have " + std::to_string(f.precision()));

    Int pk;  // p^{k-1}
    mpz_ui_pow_ui(pk.get_mpz_t(), p, static_cast<unsigned long>(k - 1));

    std::vector<Int> out(out_precision);
    for (std::size_t n = 0; n < out_precision; ++n) {
        out[n] = f.coeffs()[n * p];
        if (n % p == 0) out[n] += pk * f.coeffs()[n / p];
    }
    return QSeries(std::move(out), k);
}

HeckeMatrix hecke_matrix(int k, std::uint64_t p) {
    if (p < 2) throw InvalidInput("hecke_matrix: p must be >= 2");
    int d = dim_cusp(k);
    if (d == 0)
        throw EmptySpace("hecke_matrix: no cusp forms in weight " +
                         std::to_string(k));
    std::size_t dim = static_cast<std::size_t>(d);
    std::size_t prec = p * dim + 1;
    ModFormSpace space = miller_basis(k, prec);

    IntMatrix m(dim, std::vector<Int>(dim));
    for (std::size_t i = 0; i < dim; ++i) {
        QSeries img = hecke_apply(space.cusp_basis[i], k, p, dim + 1);
        for (std::size_t j = 1; j <= dim; ++j) m[j - 1][i] = img.coeffs()[j];
    }
    return HeckeMatrix{p, k, std::move(m), prec};
}

namespace {

void check_square(const IntMatrix& m, const char* who) {
    for (const auto& row : m)
        if (row.size() != m.size())
            throw InvalidInput(std::string(who) + ": matrix must be square");
}

}  // namespace

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    std::size_t n = a.size();
    IntMatrix out(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < n; ++t) {
            if (a[i][t] == 0) continue;
            for (std::size_t j = 0; j < n; ++j)
                out[i][j] += a[i][t] * b[t][j];
        }
    return out;
}

Int mat_trace(const IntMatrix& m) {
    Int t = 0;
    for (std::size_t i = 0; i < m.size(); ++i) t += m[i][i];
    return t;
}

IntPolynomial char_poly(const IntMatrix& a) {
    check_square(a, "char_poly");
    std::size_t d = a.size();
    std::vector<Int> c(d + 1);
    c[d] = 1;
    if (d == 0) return IntPolynomial(std::move(c));

    // Faddeev-LeVerrier: N_m = A N_{m-1} + c_{d-m+1} I,
    // c_{d-m} = -tr(A N_m) / m, all divisions exact over Z.
    IntMatrix n_prev(d, std::vector<Int>(d));  // N_0 = 0
    for (std::size_t m = 1; m <= d; ++m) {
        IntMatrix n_cur = mat_mul(a, n_prev);
        for (std::size_t i = 0; i < d; ++i) n_cur[i][i] += c[d - m + 1];
        Int tr = mat_trace(mat_mul(a, n_cur));
        Int q, r;
        Int mm(static_cast<unsigned long>(m));
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), tr.get_mpz_t(),
                    mm.get_mpz_t());
        if (r != 0)
            throw NotDivisible("char_poly: Faddeev-LeVerrier trace not "
                               "divisible at step " +
                               std::to_string(m));
        c[d - m] = -q;
        n_prev = std::move(n_cur);
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial char_poly_berkowitz(const IntMatrix& a) {
    check_square(a, "char_poly_berkowitz");
    std::size_t n = a.size();
    if (n == 0) return IntPolynomial({Int(1)});

    // p holds the characteristic polynomial of the leading r x r principal
    // submatrix, highest coefficient first.
    std::vector<Int> p{Int(1), -a[0][0]};
    for (std::size_t r = 2; r <= n; ++r) {
        // first column of the (r+1) x r Toeplitz factor:
        // 1, -a_rr, -R C, -R M C, -R M^2 C, ...
        std::vector<Int> col(r + 1);
        col[0] = 1;
        col[1] = -a[r - 1][r - 1];
        std::vector<Int> v(r - 1);  // starts as C, then M^t C
        for (std::size_t i = 0; i < r - 1; ++i) v[i] = a[i][r - 1];
        for (std::size_t t = 2; t <= r; ++t) {
            Int dot = 0;
            for (std::size_t i = 0; i < r - 1; ++i)
                dot += a[r - 1][i] * v[i];
            col[t] = -dot;
            if (t == r) break;
            std::vector<Int> w(r - 1);
            for (std::size_t i = 0; i < r - 1; ++i) {
                for (std::size_t j = 0; j < r - 1; ++j)
                    w[i] += a[i][j] * v[j];
            }
            v = std::move(w);
        }
        std::vector<Int> q(r + 1);
        for (std::size_t i = 0; i <= r; ++i) {
            Int acc = 0;
            // q[i] = sum_j col[i - j] * p[j] over valid j
            for (std::size_t j = 0; j < r && j <= i; ++j)
                acc += col[i - j] * p[j];
            q[i] = acc;
        }
        p = std::move(q);
    }
    std::vector<Int> c(p.rbegin(), p.rend());
    return IntPolynomial(std::move(c));
}

}  // namespace ordcert
