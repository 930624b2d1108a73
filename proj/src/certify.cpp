#include "ordcert/certify.hpp"

#include <json.hpp>

#include <algorithm>
#include <climits>
#include <stdexcept>

#include "ordcert/errors.hpp"
#include "ordcert/hecke.hpp"
#include "ordcert/modforms.hpp"
#include "ordcert/primes.hpp"
#include "ordcert/version.hpp"

namespace ordcert {

using ojson = nlohmann::ordered_json;

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Unirational: return "UNIRATIONAL";
        case Verdict::NotUniruled: return "NOT_UNIRULED";
        case Verdict::NoCertificate: return "NO_CERTIFICATE";
    }
    throw std::logic_error("verdict_name: bad enum value");
}

namespace {

constexpr const char* kThmOrdinary =
    "a p-ordinary cusp eigenform of level 1 and weight k <= n+1 forces "
    "Mbar_{1,n} to be non-uniruled over F_p";
constexpr const char* kThmUnirational =
    "Mbar_{1,n} is unirational in every characteristic for n <= 10 "
    "(nine general plane points)";
constexpr const char* kThmLowPrime =
    "every class of k mod (p-1) has an even representative weight below "
    "12 when p <= 7, so no p-ordinary cusp forms of level 1 exist";
constexpr const char* kThmHidaCap =
    "the ordinary rank depends on k only through k mod (p-1), and the "
    "even weights in [12, p+9] meet every class";

constexpr const char* kReasonLowPrime =
    "no p-ordinary cusp forms of level 1 exist for p in {2,3,5,7}";
constexpr const char* kReasonHidaCap =
    "no ordinary form in any residue class (Hida cap)";
constexpr const char* kReasonBounded =
    "search bounded by n+1; criterion inconclusive";

}  // namespace

Certificate certify(std::uint64_t p, std::uint64_t n) {
    if (!is_prime(p))
        throw InvalidInput("certify: p must be prime, got " +
                           std::to_string(p));
    if (n < 1) throw InvalidInput("certify: n must be >= 1");

    Certificate c;
    c.p = p;
    c.n = n;
    c.tool_version = kToolVersion;

    if (n <= 10) {
        c.verdict = Verdict::Unirational;
        c.theorem = kThmUnirational;
        return c;
    }
    if (p <= 7) {
        c.verdict = Verdict::NoCertificate;
        c.theorem = kThmLowPrime;
        c.reason = kReasonLowPrime;
        return c;
    }

    // saturating, in case n or p is at the top of the integer range
    std::uint64_t n_cap = n == UINT64_MAX ? n : n + 1;
    std::uint64_t p_cap = p > UINT64_MAX - 9 ? UINT64_MAX : p + 9;
    std::uint64_t k_hi = std::min(n_cap, p_cap);
    for (std::uint64_t k = 12; k <= k_hi; k += 2) {
        if (k > static_cast<std::uint64_t>(INT_MAX) - 1)
            throw InvalidInput("certify: search weight exceeds supported "
                               "range");
        int kk = static_cast<int>(k);
        c.search_range.push_back(kk);
        OrdinarityReport rep = ordinary_rank(kk, p);
        if (rep.dim > 0)
            c.precision_used =
                std::max<std::size_t>(c.precision_used, p * rep.dim + 1);
        if (!rep.contains_ordinary) continue;

        // witness found; serialize only exact-pipeline values
        HeckeMatrix hm = hecke_matrix(kk, p);
        IntPolynomial cp = char_poly(hm.entries);
        std::vector<std::uint64_t> cpmod = reduce_mod_p(cp, p);
        if (cpmod != rep.charpoly_mod_p)
            throw std::logic_error(
                "certify: exact and mod-p characteristic polynomials "
                "disagree");
        c.verdict = Verdict::NotUniruled;
        c.theorem = kThmOrdinary;
        c.witness_weight = kk;
        c.dim = rep.dim;
        c.charpoly_mod_p = std::move(cpmod);
        c.ordinary_rank = rep.ordinary_rank;
        c.newton_slopes = newton_slopes(cp, p);
        c.exact_charpoly = cp.coeffs();
        c.precision_used =
            std::max<std::size_t>(c.precision_used, hm.basis_precision);
        return c;
    }

    c.verdict = Verdict::NoCertificate;
    if (n_cap >= p_cap) {
        c.theorem = kThmHidaCap;
        c.reason = kReasonHidaCap;
    } else {
        c.theorem = kThmOrdinary;
        c.reason = kReasonBounded;
    }
    return c;
}

namespace {

std::string slope_to_string(const Rat& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat slope_from_string(const std::string& s) {
    std::size_t slash = s.find('/');
    if (slash == std::string::npos || slash == 0 || slash + 1 == s.size())
        throw ParseError("slope not in num/den form: " + s);
    Int num, den;
    if (mpz_set_str(num.get_mpz_t(), s.substr(0, slash).c_str(), 10) != 0 ||
        mpz_set_str(den.get_mpz_t(), s.substr(slash + 1).c_str(), 10) != 0)
        throw ParseError("slope has non-integer parts: " + s);
    if (den <= 0) throw ParseError("slope denominator must be positive");
    Rat r(num, den);
    Rat canon = r;
    canon.canonicalize();
    if (cmp(canon.get_den(), den) != 0)
        throw ParseError("slope not in lowest terms: " + s);
    return canon;
}

}  // namespace

std::string certificate_serialize(const Certificate& c) {
    ojson j;
    j["p"] = c.p;
    j["n"] = c.n;
    j["verdict"] = std::string(verdict_name(c.verdict));
    j["theorem"] = c.theorem;
    if (c.witness_weight) j["witness_weight"] = *c.witness_weight;
    if (c.dim) j["dim"] = *c.dim;
    if (c.charpoly_mod_p) j["charpoly_mod_p"] = *c.charpoly_mod_p;
    if (c.exact_charpoly) {
        std::vector<std::string> dec;
        dec.reserve(c.exact_charpoly->size());
        for (const Int& x : *c.exact_charpoly) dec.push_back(x.get_str());
        j["exact_charpoly"] = dec;
    }
    if (c.ordinary_rank) j["ordinary_rank"] = *c.ordinary_rank;
    if (c.newton_slopes) {
        std::vector<std::string> ss;
        ss.reserve(c.newton_slopes->slopes.size());
        for (const Rat& r : c.newton_slopes->slopes)
            ss.push_back(slope_to_string(r));
        j["newton_slopes"] = {{"slopes", ss},
                              {"infinite_count",
                               c.newton_slopes->infinite_count}};
    }
    j["search_range"] = c.search_range;
    if (c.reason) j["reason"] = *c.reason;
    j["precision_used"] = c.precision_used;
    j["tool_version"] = c.tool_version;
    return j.dump();
}

namespace {

const ojson& require_field(const ojson& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end())
        throw ParseError(std::string("missing field: ") + key);
    return *it;
}

void forbid_field(const ojson& j, const char* key, const char* why) {
    if (j.find(key) != j.end())
        throw ParseError(std::string("field ") + key + " not allowed " +
                         why);
}

std::uint64_t get_u64(const ojson& v, const char* key) {
    if (!v.is_number_unsigned())
        throw ParseError(std::string(key) + " must be a nonnegative integer");
    return v.get<std::uint64_t>();
}

std::string get_string(const ojson& v, const char* key) {
    if (!v.is_string())
        throw ParseError(std::string(key) + " must be a string");
    return v.get<std::string>();
}

Int int_from_decimal(const std::string& s, const char* key) {
    Int x;
    if (s.empty() || mpz_set_str(x.get_mpz_t(), s.c_str(), 10) != 0)
        throw ParseError(std::string(key) + ": bad decimal integer '" + s +
                         "'");
    return x;
}

}  // namespace

Certificate certificate_parse(std::string_view bytes) {
    ojson j;
    try {
        j = ojson::parse(bytes);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(),
                         e.byte);
    }
    if (!j.is_object()) throw ParseError("certificate must be an object");

    static const char* known[] = {
        "p", "n", "verdict", "theorem", "witness_weight", "dim",
        "charpoly_mod_p", "exact_charpoly", "ordinary_rank",
        "newton_slopes", "search_range", "reason", "precision_used",
        "tool_version"};
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : known) ok = ok || it.key() == k;
        if (!ok) throw ParseError("unknown field: " + it.key());
    }

    Certificate c;
    c.p = get_u64(require_field(j, "p"), "p");
    c.n = get_u64(require_field(j, "n"), "n");
    if (!is_prime(c.p)) throw ParseError("p is not prime");
    if (c.n < 1) throw ParseError("n must be >= 1");

    std::string v = get_string(require_field(j, "verdict"), "verdict");
    if (v == "UNIRATIONAL")
        c.verdict = Verdict::Unirational;
    else if (v == "NOT_UNIRULED")
        c.verdict = Verdict::NotUniruled;
    else if (v == "NO_CERTIFICATE")
        c.verdict = Verdict::NoCertificate;
    else
        throw ParseError("unknown verdict: " + v);

    c.theorem = get_string(require_field(j, "theorem"), "theorem");
    if (c.theorem.empty()) throw ParseError("theorem must be non-empty");

    const ojson& sr = require_field(j, "search_range");
    if (!sr.is_array()) throw ParseError("search_range must be an array");
    int prev = 0;
    for (const auto& e : sr) {
        if (!e.is_number_unsigned())
            throw ParseError("search_range entries must be weights");
        std::uint64_t k = e.get<std::uint64_t>();
        if (k < 12 || k % 2 != 0 ||
            k > static_cast<std::uint64_t>(INT_MAX))
            throw ParseError("search_range entry out of range");
        if (static_cast<int>(k) <= prev)
            throw ParseError("search_range must be strictly increasing");
        prev = static_cast<int>(k);
        c.search_range.push_back(static_cast<int>(k));
    }

    c.precision_used =
        get_u64(require_field(j, "precision_used"), "precision_used");
    c.tool_version =
        get_string(require_field(j, "tool_version"), "tool_version");
    if (c.tool_version.empty())
        throw ParseError("tool_version must be non-empty");

    if ((c.n <= 10) != (c.verdict == Verdict::Unirational))
        throw ParseError("verdict UNIRATIONAL is exactly the n <= 10 case");
    if (c.p <= 7 && c.verdict == Verdict::NotUniruled)
        throw ParseError("NOT_UNIRULED impossible for p <= 7");

    if (c.verdict == Verdict::NotUniruled) {
        forbid_field(j, "reason", "with verdict NOT_UNIRULED");

        std::uint64_t k =
            get_u64(require_field(j, "witness_weight"), "witness_weight");
        if (k % 2 != 0 || k < 12 || k - 1 > c.n || k - 9 > c.p)
            throw ParseError("witness_weight out of certified range");
        c.witness_weight = static_cast<int>(k);
        if (c.search_range.empty() ||
            c.search_range.back() != *c.witness_weight)
            throw ParseError("search_range must end at witness_weight");

        std::uint64_t dim = get_u64(require_field(j, "dim"), "dim");
        if (dim == 0) throw ParseError("witness dim must be positive");
        c.dim = dim;

        const ojson& cpj = require_field(j, "charpoly_mod_p");
        if (!cpj.is_array() || cpj.size() != dim + 1)
            throw ParseError("charpoly_mod_p must have dim+1 entries");
        std::vector<std::uint64_t> cp;
        for (const auto& e : cpj) {
            std::uint64_t x = get_u64(e, "charpoly_mod_p entry");
            if (x >= c.p)
                throw ParseError("charpoly_mod_p entry not reduced mod p");
            cp.push_back(x);
        }
        if (cp.back() != 1)
            throw ParseError("charpoly_mod_p must be monic");
        std::size_t mult = 0;
        while (cp[mult] == 0) ++mult;
        c.charpoly_mod_p = std::move(cp);

        std::uint64_t rank =
            get_u64(require_field(j, "ordinary_rank"), "ordinary_rank");
        if (rank != dim - mult)
            throw ParseError(
                "ordinary_rank inconsistent with charpoly_mod_p");
        if (rank < 1)
            throw ParseError("NOT_UNIRULED requires ordinary_rank >= 1");
        c.ordinary_rank = rank;

        if (auto it = j.find("exact_charpoly"); it != j.end()) {
            if (!it->is_array() || it->size() != dim + 1)
                throw ParseError("exact_charpoly must have dim+1 entries");
            std::vector<Int> exact;
            for (const auto& e : *it)
                exact.push_back(int_from_decimal(
                    get_string(e, "exact_charpoly entry"),
                    "exact_charpoly"));
            if (exact.back() != 1)
                throw ParseError("exact_charpoly must be monic");
            Int pm(static_cast<unsigned long>(c.p));
            for (std::size_t i = 0; i <= dim; ++i) {
                Int r = exact[i] % pm;
                if (r < 0) r += pm;
                if (r.get_ui() != (*c.charpoly_mod_p)[i])
                    throw ParseError(
                        "exact_charpoly does not reduce to charpoly_mod_p");
            }
            c.exact_charpoly = std::move(exact);
        }

        const ojson& nsj = require_field(j, "newton_slopes");
        if (!nsj.is_object())
            throw ParseError("newton_slopes must be an object");
        const ojson& sl = require_field(nsj, "slopes");
        if (!sl.is_array()) throw ParseError("slopes must be an array");
        SlopeProfile prof;
        prof.p = c.p;
        for (const auto& e : sl)
            prof.slopes.push_back(
                slope_from_string(get_string(e, "slope")));
        for (std::size_t i = 1; i < prof.slopes.size(); ++i)
            if (prof.slopes[i] < prof.slopes[i - 1])
                throw ParseError("slopes must be ascending");
        prof.infinite_count =
            get_u64(require_field(nsj, "infinite_count"), "infinite_count");
        if (prof.slopes.size() + prof.infinite_count != dim)
            throw ParseError("slope multiset size must equal dim");
        c.newton_slopes = std::move(prof);
    } else {
        for (const char* k : {"witness_weight", "dim", "charpoly_mod_p",
                              "exact_charpoly", "ordinary_rank",
                              "newton_slopes"})
            forbid_field(j, k, "without a NOT_UNIRULED witness");
        if (c.verdict == Verdict::NoCertificate) {
            c.reason = get_string(require_field(j, "reason"), "reason");
            if (c.reason->empty())
                throw ParseError("reason must be non-empty");
        } else {
            forbid_field(j, "reason", "with verdict UNIRATIONAL");
            if (!c.search_range.empty())
                throw ParseError("UNIRATIONAL decides without searching");
        }
    }
    return c;
}

}  // namespace ordcert
