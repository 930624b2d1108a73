#ifndef ORDCERT_PRIMES_HPP
#define ORDCERT_PRIMES_HPP

#include <cstdint>
#include <vector>

namespace ordcert {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);  // p prime, a != 0 mod p

// Deterministic Miller-Rabin, valid for the full uint64 range.
bool is_prime(std::uint64_t n);

std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

}  // namespace ordcert

#endif
