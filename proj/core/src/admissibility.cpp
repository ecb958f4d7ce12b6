#include "sidon/admissibility.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace sidon {

bool ExceptionalPrimeSet::contains(std::int64_t p) const {
    return std::binary_search(primes.begin(), primes.end(), p);
}

ExceptionalPrimeSet exceptional_primes(unsigned h) {
    if (h < 2) throw std::invalid_argument("exceptional_primes: h must be >= 2");
    ExceptionalPrimeSet out;
    out.h = h;
    // p - 1 divides h forces p <= h + 1, so scan divisors of h.
    for (unsigned d = 1; d <= h; ++d) {
        if (h % d != 0) continue;
        const std::uint64_t candidate = d + 1;
        if (is_prime(candidate)) out.primes.push_back(static_cast<std::int64_t>(candidate));
    }
    std::sort(out.primes.begin(), out.primes.end());
    return out;
}

std::optional<std::int64_t> coprime_power_witness(std::int64_t p, unsigned h) {
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) {
        throw std::invalid_argument("coprime_power_witness: p must be prime");
    }
    for (std::int64_t u = 1; u < p; ++u) {
        if (pow_mod(static_cast<std::uint64_t>(u), h, static_cast<std::uint64_t>(p)) != 1) return u;
    }
    return std::nullopt;  // exactly the case (p-1) | h
}

AdmissibleProgression admissible_progression(const LinearForm& phi) {
    const unsigned h = phi.h();
    const ExceptionalPrimeSet exceptional = exceptional_primes(h);
    std::set<std::int64_t> coefficient_primes;
    for (std::int64_t c : phi.coeffs()) {
        const std::uint64_t abs_c = static_cast<std::uint64_t>(abs64(c));
        for (std::uint64_t p : prime_divisors(abs_c)) {
            if (exceptional.contains(static_cast<std::int64_t>(p))) {
                throw std::invalid_argument("admissible_progression: coefficient " + std::to_string(c) +
                                            " is divisible by the exceptional prime " + std::to_string(p) +
                                            " (p - 1 divides h = " + std::to_string(h) + ")");
            }
            coefficient_primes.insert(static_cast<std::int64_t>(p));
        }
    }
    AdmissibleProgression out;
    for (std::int64_t p : coefficient_primes) {
        const auto witness = coprime_power_witness(p, h);
        if (!witness) throw std::logic_error("admissible_progression: witness missing for non-exceptional prime");
        out.witnesses[p] = *witness;
    }
    // CRT combine u = u_p (mod p) over the squarefree modulus.
    std::int64_t u = 0, modulus = 1;
    for (const auto& [p, up] : out.witnesses) {
        const std::int64_t m_inv =
            static_cast<std::int64_t>(inverse_mod(static_cast<std::uint64_t>(modulus % p), static_cast<std::uint64_t>(p)));
        const std::int64_t delta = floor_mod(up - u, p);
        u += modulus * floor_mod(delta * m_inv, p);
        modulus *= p;
    }
    out.u = u;
    out.modulus = modulus;
    if (modulus > 1 && std::gcd(out.u, out.modulus) != 1) {
        throw std::logic_error("admissible_progression: gcd(u, Q) != 1");
    }
    return out;
}

namespace {

bool power_coprime(std::int64_t q, unsigned h, std::int64_t c) {
    const std::uint64_t abs_c = static_cast<std::uint64_t>(abs64(c));
    if (abs_c == 1) return true;
    // gcd(q^h - 1, c) via q^h mod |c|
    const std::uint64_t residue = pow_mod(static_cast<std::uint64_t>(q), h, abs_c);
    const std::uint64_t shifted = (residue + abs_c - 1) % abs_c;
    return std::gcd(shifted, abs_c) == 1;
}

}  // namespace

std::vector<std::int64_t> admissible_primes(const LinearForm& phi, std::int64_t bound) {
    if (bound < 2) throw std::invalid_argument("admissible_primes: bound must be >= 2");
    std::vector<std::int64_t> out;
    for (std::int64_t q : primes_up_to(bound)) {
        bool ok = true;
        for (std::int64_t c : phi.coeffs()) {
            if (!power_coprime(q, phi.h(), c)) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(q);
    }
    return out;
}

CrossValidation cross_validate(const LinearForm& phi, std::int64_t bound) {
    CrossValidation out;
    out.progression = admissible_progression(phi);
    for (std::int64_t q : primes_up_to(bound)) {
        if (floor_mod(q, out.progression.modulus) == out.progression.u) out.progression_primes.push_back(q);
    }
    out.direct_primes = admissible_primes(phi, bound);
    for (std::int64_t q : out.progression_primes) {
        if (!std::binary_search(out.direct_primes.begin(), out.direct_primes.end(), q)) {
            out.violations.push_back(q);
        }
    }
    out.pass = out.violations.empty();
    return out;
}

}  // namespace sidon
