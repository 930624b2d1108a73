// ordcert: level-1 modular form computations behind the uniruledness
// certifier. One subcommand per fact; --format json for machine output.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ordcert/certify.hpp"
#include "ordcert/errors.hpp"
#include "ordcert/hecke.hpp"
#include "ordcert/modforms.hpp"
#include "ordcert/ordinarity.hpp"
#include "ordcert/version.hpp"

using namespace ordcert;
using ojson = nlohmann::ordered_json;

namespace {

struct Options {
    std::string format = "text";
    int k = 0;
    int k_max = 0;
    std::uint64_t p = 0;
    std::uint64_t n = 0;
    std::uint64_t p_max = 0;
    std::size_t prec = 0;
    unsigned threads = 1;
};

bool is_json(const Options& o) { return o.format == "json"; }

void add_format(CLI::App* cmd, Options& o) {
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
}

void emit(const ojson& j) { std::cout << j.dump() << "\n"; }

std::vector<std::string> decimal_strings(const std::vector<Int>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const Int& x : v) out.push_back(x.get_str());
    return out;
}

std::string slope_string(const Rat& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

unsigned default_threads() {
    if (const char* env = std::getenv("ORDCERT_THREADS")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v >= 1 && v <= 1024)
            return static_cast<unsigned>(v);
    }
    return 1;
}

void run_dim(const Options& o) {
    int d = dim_cusp(o.k);
    if (is_json(o))
        emit(ojson{{"k", o.k}, {"dim", d}});
    else
        std::cout << d << "\n";
}

void run_basis(const Options& o) {
    if (o.k < 0 || o.k % 2 != 0)
        throw InvalidInput("basis: k must be even and >= 0");
    std::size_t least = static_cast<std::size_t>(dim_cusp(o.k)) + 1;
    std::size_t prec = std::max(o.prec, least);  // --prec only raises
    ModFormSpace s = miller_basis(o.k, prec);
    if (is_json(o)) {
        ojson full = ojson::array();
        for (const QSeries& f : s.full_basis)
            full.push_back(decimal_strings(f.coeffs()));
        ojson cusp = ojson::array();
        for (const QSeries& f : s.cusp_basis)
            cusp.push_back(decimal_strings(f.coeffs()));
        emit(ojson{{"k", o.k},
                   {"precision", prec},
                   {"full_basis", full},
                   {"cusp_basis", cusp}});
    } else {
        for (const QSeries& f : s.full_basis)
            std::cout << to_string(f) << "\n";
    }
}

void run_tau(const Options& o) {
    if (o.n < 1) throw InvalidInput("tau: n must be >= 1");
    if (o.n > 2'000'000)
        throw InvalidInput("tau: n too large for one expansion");
    QSeries d = delta(static_cast<std::size_t>(o.n) + 1);
    if (is_json(o)) {
        std::vector<std::string> vals;
        vals.reserve(o.n);
        for (std::uint64_t m = 1; m <= o.n; ++m)
            vals.push_back(d.coeffs()[m].get_str());
        emit(ojson{{"n", o.n}, {"tau", vals}});
    } else {
        for (std::uint64_t m = 1; m <= o.n; ++m)
            std::cout << m << " " << d.coeffs()[m].get_str() << "\n";
    }
}

void run_hecke_matrix(const Options& o) {
    HeckeMatrix m = hecke_matrix(o.k, o.p);
    if (is_json(o)) {
        ojson rows = ojson::array();
        for (const auto& row : m.entries) rows.push_back(decimal_strings(row));
        emit(ojson{{"k", o.k},
                   {"p", o.p},
                   {"dim", m.dim()},
                   {"basis_precision", m.basis_precision},
                   {"matrix", rows}});
    } else {
        for (const auto& row : m.entries) {
            for (std::size_t j = 0; j < row.size(); ++j)
                std::cout << (j ? " " : "") << row[j].get_str();
            std::cout << "\n";
        }
    }
}

void run_charpoly(const Options& o) {
    IntPolynomial c = char_poly(hecke_matrix(o.k, o.p).entries);
    if (is_json(o)) {
        emit(ojson{{"k", o.k},
                   {"p", o.p},
                   {"coeffs", decimal_strings(c.coeffs())},
                   {"coeffs_mod_p", reduce_mod_p(c, o.p)}});
    } else {
        std::cout << c.to_string() << "\n";
    }
}

void run_ordinary(const Options& o) {
    OrdinarityReport r = ordinary_rank(o.k, o.p);
    if (is_json(o)) {
        emit(ojson{{"k", r.k},
                   {"p", r.p},
                   {"dim", r.dim},
                   {"charpoly_mod_p", r.charpoly_mod_p},
                   {"ordinary_rank", r.ordinary_rank},
                   {"contains_ordinary", r.contains_ordinary},
                   {"exact_path", r.exact_path}});
    } else {
        std::cout << r.ordinary_rank << "\n";
    }
}

void run_slopes(const Options& o) {
    IntPolynomial c = char_poly(hecke_matrix(o.k, o.p).entries);
    SlopeProfile s = newton_slopes(c, o.p);
    std::vector<std::string> ss;
    ss.reserve(s.slopes.size());
    for (const Rat& r : s.slopes) ss.push_back(slope_string(r));
    if (is_json(o)) {
        emit(ojson{{"k", o.k},
                   {"p", o.p},
                   {"slopes", ss},
                   {"infinite_count", s.infinite_count}});
    } else {
        for (std::size_t i = 0; i < ss.size(); ++i)
            std::cout << (i ? " " : "") << ss[i];
        if (s.infinite_count > 0)
            std::cout << (ss.empty() ? "" : " ") << "inf*" << s.infinite_count;
        std::cout << "\n";
    }
}

void run_scan_delta(const Options& o) {
    std::vector<std::uint64_t> ex = scan_delta(o.p_max, o.threads);
    if (is_json(o)) {
        emit(ojson{{"p_max", o.p_max}, {"exceptions", ex}});
    } else {
        for (std::uint64_t p : ex) std::cout << p << "\n";
    }
}

void run_verify_serre(const Options& o) {
    OrdinarityReport r = verify_serre_existence(o.p);
    if (is_json(o)) {
        emit(ojson{{"p", r.p},
                   {"k", r.k},
                   {"dim", r.dim},
                   {"charpoly_mod_p", r.charpoly_mod_p},
                   {"ordinary_rank", r.ordinary_rank},
                   {"contains_ordinary", r.contains_ordinary},
                   {"exact_path", r.exact_path}});
    } else {
        std::cout << (r.contains_ordinary ? "true" : "false") << "\n";
    }
}

void run_verify_hida(const Options& o) {
    HidaReport h = verify_hida_invariance(o.p, o.k_max);
    if (is_json(o)) {
        ojson classes = ojson::array();
        for (const HidaClass& c : h.classes)
            classes.push_back(ojson{{"residue", c.residue},
                                    {"weights", c.weights},
                                    {"ranks", c.ranks}});
        emit(ojson{{"p", h.p},
                   {"k_max", h.k_max},
                   {"consistent", h.consistent},
                   {"classes", classes},
                   {"violations", h.violations},
                   {"note", h.note}});
    } else {
        std::cout << (h.consistent ? "consistent" : "inconsistent") << "\n";
        for (const std::string& v : h.violations) std::cout << v << "\n";
    }
}

void run_verify_low_primes(const Options& o) {
    bool ok = verify_low_prime_vanishing(o.p, o.k_max);
    if (is_json(o))
        emit(ojson{{"p", o.p}, {"k_max", o.k_max}, {"all_zero", ok}});
    else
        std::cout << (ok ? "true" : "false") << "\n";
}

void run_certify(const Options& o) {
    Certificate c = certify(o.p, o.n);
    if (is_json(o)) {
        std::cout << certificate_serialize(c) << "\n";
    } else {
        std::cout << verdict_name(c.verdict);
        if (c.witness_weight)
            std::cout << " witness_weight=" << *c.witness_weight
                      << " ordinary_rank=" << *c.ordinary_rank;
        if (c.reason) std::cout << " (" << *c.reason << ")";
        std::cout << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified non-uniruledness of Mbar_{1,n} over F_p via "
                 "ordinary cusp forms"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    Options o;
    o.threads = default_threads();

    CLI::App* dim = app.add_subcommand("dim", "cusp form dimension");
    dim->add_option("--k", o.k, "weight")->required();
    add_format(dim, o);
    dim->callback([&]() { run_dim(o); });

    CLI::App* basis =
        app.add_subcommand("basis", "echelonized integral basis");
    basis->add_option("--k", o.k, "weight")->required();
    basis->add_option("--prec", o.prec,
                      "q-expansion precision (raised to dim+1 if lower)");
    add_format(basis, o);
    basis->callback([&]() { run_basis(o); });

    CLI::App* tau = app.add_subcommand("tau", "tau(1..n) from one expansion");
    tau->add_option("--n", o.n, "last index")->required();
    add_format(tau, o);
    tau->callback([&]() { run_tau(o); });

    CLI::App* hm = app.add_subcommand("hecke-matrix",
                                      "T_p on the cusp basis of weight k");
    hm->add_option("--k", o.k, "weight")->required();
    hm->add_option("--p", o.p, "prime")->required();
    add_format(hm, o);
    hm->callback([&]() { run_hecke_matrix(o); });

    CLI::App* cp = app.add_subcommand(
        "charpoly", "characteristic polynomial of T_p on weight k");
    cp->add_option("--k", o.k, "weight")->required();
    cp->add_option("--p", o.p, "prime")->required();
    add_format(cp, o);
    cp->callback([&]() { run_charpoly(o); });

    CLI::App* ord = app.add_subcommand(
        "ordinary", "ordinary rank of the weight-k cusp space at p");
    ord->add_option("--k", o.k, "weight")->required();
    ord->add_option("--p", o.p, "prime")->required();
    add_format(ord, o);
    ord->callback([&]() { run_ordinary(o); });

    CLI::App* sl = app.add_subcommand(
        "slopes", "Newton slopes of charpoly(T_p) at p");
    sl->add_option("--k", o.k, "weight")->required();
    sl->add_option("--p", o.p, "prime")->required();
    add_format(sl, o);
    sl->callback([&]() { run_slopes(o); });

    CLI::App* sd = app.add_subcommand(
        "scan-delta", "primes up to max where delta is not ordinary");
    sd->add_option("--max", o.p_max, "largest prime to test")->required();
    sd->add_option("--threads", o.threads,
                   "worker threads (default from ORDCERT_THREADS)")
        ->check(CLI::Range(1u, 1024u));
    add_format(sd, o);
    sd->callback([&]() { run_scan_delta(o); });

    CLI::App* vs = app.add_subcommand(
        "verify-serre", "ordinarity of the weight p-1 space (p > 11)");
    vs->add_option("--p", o.p, "prime")->required();
    add_format(vs, o);
    vs->callback([&]() { run_verify_serre(o); });

    CLI::App* vh = app.add_subcommand(
        "verify-hida", "rank constancy on classes of k mod (p-1)");
    vh->add_option("--p", o.p, "prime")->required();
    vh->add_option("--kmax", o.k_max, "largest weight")->required();
    add_format(vh, o);
    vh->callback([&]() { run_verify_hida(o); });

    CLI::App* vl = app.add_subcommand(
        "verify-low-primes", "rank 0 for all even k <= kmax (p <= 7)");
    vl->add_option("--p", o.p, "prime")->required();
    vl->add_option("--kmax", o.k_max, "largest weight")->required();
    add_format(vl, o);
    vl->callback([&]() { run_verify_low_primes(o); });

    CLI::App* ct = app.add_subcommand(
        "certify", "decide (p, n) and emit a checkable certificate");
    ct->add_option("--p", o.p, "prime")->required();
    ct->add_option("--n", o.n, "number of marked points")->required();
    add_format(ct, o);
    ct->callback([&]() { run_certify(o); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotDivisible& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
