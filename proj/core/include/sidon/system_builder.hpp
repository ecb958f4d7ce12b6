#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sidon/admissibility.hpp"
#include "sidon/classical.hpp"
#include "sidon/linear_form.hpp"

namespace sidon {

/// Everything a third party needs to re-verify a built system without
/// recomputing discrete logs: the tower parameters and the full exponent
/// matrix a[i][j] with theta^(c_i * a[i][j]) = theta - lambda_j.
struct ConstructionCertificate {
    std::int64_t q = 0;  // subfield size used
    std::int64_t p = 0;
    unsigned k = 0;
    unsigned h = 0;
    std::vector<std::uint32_t> irreducible;        // constant term first
    std::uint64_t theta_encoding = 0;
    std::vector<std::uint64_t> lambda_encodings;   // subfield elements, in order
    std::vector<std::int64_t> coefficient_inverses;  // c_i^{-1} mod N
    std::vector<std::vector<std::int64_t>> exponents;  // a[i][j]
    std::int64_t verified_multiplicity = 0;        // exhaustively recomputed
    bool experimental_prime_power = false;
};

struct BuildOptions {
    bool experimental_prime_power = false;  // allow q = p^k; results are unproven
    TowerOptions tower;
    EnumOptions enumeration;
};

struct BuiltSystem {
    SidonSystem system;
    ConstructionCertificate certificate;
};

/// Builds the h-tuple A_i = { c_i^{-1} dlog(theta - lambda_j) mod N } over
/// GF(q^h), each of size q inside [1, q^h - 2], verified exhaustively to have
/// multiplicity at most h!. Requires q prime (or a prime power with the
/// experimental flag) and gcd(q^h - 1, c_i) = 1 for every coefficient.
BuiltSystem build_system(const LinearForm& phi, std::int64_t q, const BuildOptions& opts = {});

struct LowerBoundWitness {
    std::int64_t q = 0;
    BuiltSystem built;
};

/// Largest admissible prime q with q^h - 2 <= n together with its built
/// system; certifies F_{phi,h!}(n) >= q. Absent when no admissible prime fits.
std::optional<LowerBoundWitness> lower_bound_witness(const LinearForm& phi, std::int64_t n,
                                                     const BuildOptions& opts = {});

struct ClassicalWitness {
    std::int64_t q = 0;  // prime power
    std::int64_t p = 0;
    unsigned k = 0;
    SidonSet set;
};

/// Largest prime power q with q^h - 2 <= n together with its Bose-Chowla set;
/// certifies F_h(n) >= q.
std::optional<ClassicalWitness> classical_lower_bound(unsigned h, std::int64_t n,
                                                      const TowerOptions& opts = {});

struct DensityRow {
    std::int64_t n = 0;
    std::optional<std::int64_t> q;  // witness, when one exists
    double ratio = 0.0;             // q / n^(1/h)
};

/// Finite-n witness table: per n the largest construction prime and the
/// ratio q / n^(1/h). Reported as-is, never extrapolated.
std::vector<DensityRow> density_table(const LinearForm& phi, const std::vector<std::int64_t>& n_values,
                                      const BuildOptions& opts = {});

}  // namespace sidon
