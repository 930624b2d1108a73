#include "ordcert/ordinarity.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <thread>

#include "ordcert/errors.hpp"
#include "ordcert/hecke.hpp"
#include "ordcert/modforms.hpp"
#include "ordcert/modp.hpp"
#include "ordcert/primes.hpp"

namespace ordcert {

bool is_prime_to_p(const IntPolynomial& g, std::uint64_t p) {
    if (p < 2) throw InvalidInput("is_prime_to_p: p must be >= 2");
    Int m(static_cast<unsigned long>(p));
    for (std::size_t i = 0; i < g.degree(); ++i)
        if (g.coeff(i) % m != 0) return true;
    return false;
}

namespace {

std::size_t x_multiplicity(const std::vector<std::uint64_t>& cp) {
    std::size_t i = 0;
    while (i < cp.size() && cp[i] == 0) ++i;
    return i;  // cp is monic so i < cp.size() on return
}

}  // namespace

OrdinarityReport ordinary_rank(int k, std::uint64_t p) {
    if (!is_prime(p)) throw InvalidInput("ordinary_rank: p must be prime");
    OrdinarityReport rep;
    rep.k = k;
    rep.p = p;
    rep.dim = static_cast<std::size_t>(dim_cusp(k));
    if (rep.dim == 0) {
        rep.charpoly_mod_p = {1 % p};
        return rep;
    }
    bool fast = p * rep.dim > 500 && p >= 5;
    if (fast) {
        rep.charpoly_mod_p = modp::hecke_charpoly(k, p);
        rep.exact_path = false;
    } else {
        rep.charpoly_mod_p = reduce_mod_p(char_poly(hecke_matrix(k, p).entries), p);
    }
    std::size_t mult = x_multiplicity(rep.charpoly_mod_p);
    rep.ordinary_rank = rep.dim - mult;
    rep.contains_ordinary = rep.ordinary_rank >= 1;
    return rep;
}

SlopeProfile newton_slopes(const IntPolynomial& g, std::uint64_t p) {
    if (!is_prime(p)) throw InvalidInput("newton_slopes: p must be prime");
    SlopeProfile out;
    out.p = p;

    std::size_t deg = g.degree();
    std::size_t t = 0;
    while (g.coeff(t) == 0) ++t;  // terminates: leading coefficient is 1
    out.infinite_count = t;
    if (t == deg) return out;

    // lower convex hull of (i, v_p(c_i)) for the nonzero coefficients
    struct Pt {
        long long x, y;
    };
    std::vector<Pt> hull;
    Int pm(static_cast<unsigned long>(p));
    for (std::size_t i = t; i <= deg; ++i) {
        if (g.coeff(i) == 0) continue;
        Int tmp;
        long long v = static_cast<long long>(mpz_remove(
            tmp.get_mpz_t(), g.coeff(i).get_mpz_t(), pm.get_mpz_t()));
        Pt pt{static_cast<long long>(i), v};
        while (hull.size() >= 2) {
            const Pt& a = hull[hull.size() - 2];
            const Pt& b = hull[hull.size() - 1];
            __int128 cross = static_cast<__int128>(b.x - a.x) * (pt.y - a.y) -
                             static_cast<__int128>(b.y - a.y) * (pt.x - a.x);
            if (cross <= 0)
                hull.pop_back();  // b at or above segment a->pt
            else
                break;
        }
        hull.push_back(pt);
    }

    for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
        long long dx = hull[s + 1].x - hull[s].x;
        long long dy = hull[s + 1].y - hull[s].y;
        // root valuation = negated polygon slope
        Rat slope(Int(static_cast<long>(-dy)), Int(static_cast<long>(dx)));
        slope.canonicalize();
        for (long long i = 0; i < dx; ++i) out.slopes.push_back(slope);
    }
    std::sort(out.slopes.begin(), out.slopes.end());
    return out;
}

QSeries u_operator(const QSeries& f, std::uint64_t p,
                   std::size_t out_precision) {
    if (p < 2) throw InvalidInput("u_operator: p must be >= 2");
    if (out_precision == 0)
        throw InvalidInput("u_operator: output precision must be positive");
    std::size_t need = p * (out_precision - 1) + 1;
    if (f.precision() < need)
        throw InsufficientPrecision(
            "u_operator: need input precision " + std::to_string(need) +
            ", have " + std::to_string(f.precision()));
    std::vector<Int> out(out_precision);
    for (std::size_t n = 0; n < out_precision; ++n) out[n] = f.coeffs()[n * p];
    return QSeries(std::move(out), f.weight());
}

OrdinarityReport verify_serre_existence(std::uint64_t p) {
    if (!is_prime(p))
        throw InvalidInput("verify_serre_existence: p must be prime");
    if (p <= 11)
        throw OutOfRange(
            "verify_serre_existence: requires p > 11, got " +
            std::to_string(p));
    return ordinary_rank(static_cast<int>(p) - 1, p);
}

HidaReport verify_hida_invariance(std::uint64_t p, int k_max) {
    if (!is_prime(p) || p < 13)
        throw OutOfRange("verify_hida_invariance: requires prime p >= 13");
    if (k_max < static_cast<int>(p) + 11)
        throw OutOfRange("verify_hida_invariance: requires k_max >= p + 11");

    HidaReport rep;
    rep.p = p;
    rep.k_max = k_max;
    rep.note =
        "ranks grouped by k mod (p-1); the inverted wording `p mod (k-1)' "
        "that this invariance is sometimes quoted with is not the form the "
        "residue-class representative argument uses";

    std::map<std::uint64_t, HidaClass> classes;
    for (int k = 12; k <= k_max; k += 2) {
        std::uint64_t res = static_cast<std::uint64_t>(k) % (p - 1);
        auto& cls = classes[res];
        cls.residue = res;
        cls.weights.push_back(k);
        cls.ranks.push_back(ordinary_rank(k, p).ordinary_rank);
    }
    for (auto& [res, cls] : classes) {
        for (std::size_t i = 1; i < cls.ranks.size(); ++i) {
            if (cls.ranks[i] != cls.ranks[0]) {
                std::ostringstream os;
                os << "class " << res << " mod " << (p - 1) << ": rank "
                   << cls.ranks[i] << " at k=" << cls.weights[i]
                   << " differs from rank " << cls.ranks[0]
                   << " at k=" << cls.weights[0];
                rep.violations.push_back(os.str());
            }
        }
        rep.classes.push_back(std::move(cls));
    }
    rep.consistent = rep.violations.empty();
    return rep;
}

bool verify_low_prime_vanishing(std::uint64_t p, int k_max) {
    if (p != 2 && p != 3 && p != 5 && p != 7)
        throw BadPrime("verify_low_prime_vanishing: p must be 2, 3, 5 or 7");
    for (int k = 12; k <= k_max; k += 2)
        if (ordinary_rank(k, p).ordinary_rank != 0) return false;
    return true;
}

std::vector<std::uint64_t> scan_delta(std::uint64_t p_max, unsigned threads) {
    std::vector<std::uint64_t> out;
    if (p_max < 2) return out;
    QSeries d = delta(static_cast<std::size_t>(p_max) + 1);
    std::vector<std::uint64_t> primes = primes_up_to(p_max);

    if (threads < 1) threads = 1;
    threads = std::min<unsigned>(
        threads, static_cast<unsigned>(std::thread::hardware_concurrency()
                                           ? std::thread::hardware_concurrency()
                                           : 1));
    std::vector<char> hit(primes.size(), 0);
    auto work = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            Int m(static_cast<unsigned long>(primes[i]));
            if (d.coeffs()[primes[i]] % m == 0) hit[i] = 1;
        }
    };
    if (threads <= 1 || primes.size() < 64) {
        work(0, primes.size());
    } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (primes.size() + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            std::size_t lo = std::min<std::size_t>(t * chunk, primes.size());
            std::size_t hi =
                std::min<std::size_t>(lo + chunk, primes.size());
            if (lo < hi) pool.emplace_back(work, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    for (std::size_t i = 0; i < primes.size(); ++i)
        if (hit[i]) out.push_back(primes[i]);
    return out;
}

}  // namespace ordcert
