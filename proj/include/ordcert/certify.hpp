#ifndef ORDCERT_CERTIFY_HPP
#define ORDCERT_CERTIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordcert/ordinarity.hpp"
#include "ordcert/qseries.hpp"

namespace ordcert {

enum class Verdict { Unirational, NotUniruled, NoCertificate };

std::string_view verdict_name(Verdict v);

/**
 * Verifiable outcome of one uniruledness query (p, n).
 *
 * NOT_UNIRULED carries a full witness: the smallest even weight k whose
 * cusp space is p-ordinary, with the exact characteristic polynomial of
 * T_p, its mod-p reduction, the ordinary rank and the Newton slopes, so
 * the verdict can be re-checked from scratch. UNIRATIONAL (n <= 10) and
 * NO_CERTIFICATE carry no witness; NO_CERTIFICATE explains itself in
 * `reason` and never claims anything about uniruledness.
 */
struct Certificate {
    std::uint64_t p = 0;
    std::uint64_t n = 0;
    Verdict verdict = Verdict::NoCertificate;
    std::string theorem;

    std::optional<int> witness_weight;
    std::optional<std::size_t> dim;
    std::optional<std::vector<std::uint64_t>> charpoly_mod_p;
    std::optional<std::vector<Int>> exact_charpoly;  // ascending, monic
    std::optional<std::size_t> ordinary_rank;
    std::optional<SlopeProfile> newton_slopes;

    std::vector<int> search_range;  // weights examined, in order
    std::optional<std::string> reason;
    std::size_t precision_used = 0;  // largest q-expansion consulted
    std::string tool_version;

    bool operator==(const Certificate&) const = default;
};

// Decides (p, n): n <= 10 is unirational in every characteristic; for
// p in {2,3,5,7} no ordinary forms exist; otherwise the even weights
// 12..min(n+1, p+9) are searched in order and the first p-ordinary space
// becomes the witness. Throws InvalidInput for composite p or n < 1.
Certificate certify(std::uint64_t p, std::uint64_t n);

// Canonical UTF-8 JSON bytes: fixed key order, big integers as decimal
// strings, slopes as "num/den". Byte-identical for equal certificates.
std::string certificate_serialize(const Certificate& c);

// Inverse of certificate_serialize. Throws ParseError (with byte
// position where available) on malformed bytes, missing or mistyped
// fields, non-monic polynomials, or verdict/field mismatches.
Certificate certificate_parse(std::string_view bytes);

}  // namespace ordcert

#endif
