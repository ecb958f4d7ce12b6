#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace sidon {

/// base^exp mod m. m > 0; 0^0 = 1.
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Deterministic primality by trial division. Intended for inputs < 2^32.
bool is_prime(std::uint64_t n);

/// All primes <= bound, ascending (sieve of Eratosthenes).
std::vector<std::int64_t> primes_up_to(std::int64_t bound);

/// Prime factorization by trial division, (prime, exponent) pairs ascending.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

/// Distinct prime divisors of n, ascending.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// base^exp, or nullopt if the result would exceed cap.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp, std::uint64_t cap);

/// Largest r >= 0 with r^h <= n (exact integer arithmetic).
std::uint64_t nth_root_floor(std::uint64_t n, unsigned h);

/// Splits q = p^k with p prime, k >= 1; nullopt if q is not a prime power.
std::optional<std::pair<std::uint64_t, unsigned>> prime_power_split(std::uint64_t q);

/// Multiplicative inverse of a mod m, gcd(a, m) = 1, result in [0, m).
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m);

/// C(n, k), or nullopt if the value exceeds cap.
std::optional<std::uint64_t> binomial_capped(std::uint64_t n, unsigned k, std::uint64_t cap);

/// h!, saturating at uint64 max.
std::uint64_t factorial_saturated(unsigned h);

/// a mod m mapped to [0, m). m > 0.
inline std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

inline std::int64_t abs64(std::int64_t v) {
    return v < 0 ? -v : v;
}

}  // namespace sidon
