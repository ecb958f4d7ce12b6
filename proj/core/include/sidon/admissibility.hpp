#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "sidon/linear_form.hpp"

namespace sidon {

/// The finite set of primes p with (p-1) | h. No construction prime may share
/// a factor with a coefficient through these.
struct ExceptionalPrimeSet {
    unsigned h = 0;
    std::vector<std::int64_t> primes;  // ascending

    bool contains(std::int64_t p) const;
};

ExceptionalPrimeSet exceptional_primes(unsigned h);

/// Smallest u in [1, p-1] with gcd(u, p) = gcd(u^h - 1, p) = 1, or nullopt.
/// Absence coincides exactly with (p-1) | h.
std::optional<std::int64_t> coprime_power_witness(std::int64_t p, unsigned h);

/// Arithmetic progression u (mod Q) whose primes q all satisfy
/// gcd(q^h - 1, c_i) = 1. Q is the squarefree product of the primes dividing
/// some coefficient; Q = 1 with u = 0 means no congruence constraint.
struct AdmissibleProgression {
    std::int64_t u = 0;
    std::int64_t modulus = 1;                     // Q
    std::map<std::int64_t, std::int64_t> witnesses;  // source prime -> its witness u_p
};

/// Combines the per-prime witnesses by the Chinese remainder theorem.
/// Throws std::invalid_argument if some coefficient is divisible by an
/// exceptional prime (the hypothesis fails); the message names both.
AdmissibleProgression admissible_progression(const LinearForm& phi);

/// All primes q <= bound with gcd(q^h - 1, c_i) = 1 for every coefficient,
/// by sieve plus direct gcd test. The independent check for the progression.
std::vector<std::int64_t> admissible_primes(const LinearForm& phi, std::int64_t bound);

struct CrossValidation {
    AdmissibleProgression progression;
    std::vector<std::int64_t> progression_primes;  // primes <= bound, = u mod Q
    std::vector<std::int64_t> direct_primes;       // admissible_primes output
    std::vector<std::int64_t> violations;          // progression primes missing from direct
    bool pass = false;
};

/// Asserts that every prime of the progression is admissible by the direct
/// filter. A nonempty violation list indicates an implementation bug.
CrossValidation cross_validate(const LinearForm& phi, std::int64_t bound);

}  // namespace sidon
