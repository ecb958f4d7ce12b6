#include "sidon/system_builder.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "sidon/errors.hpp"

namespace sidon {

namespace {

void check_admissible(const LinearForm& phi, std::uint64_t order) {
    const auto& coeffs = phi.coeffs();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const std::uint64_t abs_c = static_cast<std::uint64_t>(abs64(coeffs[i]));
        if (std::gcd(order, abs_c) != 1) {
            throw std::invalid_argument("build_system: gcd(q^h - 1, c_" + std::to_string(i + 1) +
                                        ") = " + std::to_string(std::gcd(order, abs_c)) +
                                        " violates the construction hypothesis (c_" +
                                        std::to_string(i + 1) + " = " + std::to_string(coeffs[i]) + ")");
        }
    }
}

bool direct_admissible(const LinearForm& phi, std::int64_t q) {
    const unsigned h = phi.h();
    for (std::int64_t c : phi.coeffs()) {
        const std::uint64_t abs_c = static_cast<std::uint64_t>(abs64(c));
        if (abs_c == 1) continue;
        const std::uint64_t residue = pow_mod(static_cast<std::uint64_t>(q), h, abs_c);
        if (std::gcd((residue + abs_c - 1) % abs_c, abs_c) != 1) return false;
    }
    return true;
}

}  // namespace

BuiltSystem build_system(const LinearForm& phi, std::int64_t q, const BuildOptions& opts) {
    if (q < 2) throw std::invalid_argument("build_system: q must be >= 2");
    std::uint64_t p = 0;
    unsigned k = 0;
    if (is_prime(static_cast<std::uint64_t>(q))) {
        p = static_cast<std::uint64_t>(q);
        k = 1;
    } else if (opts.experimental_prime_power) {
        const auto split = prime_power_split(static_cast<std::uint64_t>(q));
        if (!split) throw std::invalid_argument("build_system: q = " + std::to_string(q) + " is not a prime power");
        p = split->first;
        k = split->second;
    } else {
        throw std::invalid_argument("build_system: q = " + std::to_string(q) +
                                    " is not prime (prime powers require the experimental flag)");
    }

    const unsigned h = phi.h();
    const FieldTower tower = FieldTower::make(p, k, h, opts.tower);
    const std::uint64_t order = tower.group_order();
    check_admissible(phi, order);

    const auto pairs = bose_chowla_pairs(tower);
    ConstructionCertificate cert;
    cert.q = q;
    cert.p = static_cast<std::int64_t>(p);
    cert.k = k;
    cert.h = h;
    cert.irreducible = tower.irreducible();
    cert.theta_encoding = tower.encode(tower.theta());
    for (const auto& [lambda_enc, a] : pairs) cert.lambda_encodings.push_back(lambda_enc);
    cert.experimental_prime_power = (k > 1);

    std::vector<std::vector<std::int64_t>> sets;
    sets.reserve(h);
    const auto& coeffs = phi.coeffs();
    for (unsigned i = 0; i < h; ++i) {
        const std::uint64_t c_mod =
            static_cast<std::uint64_t>(floor_mod(coeffs[i], static_cast<std::int64_t>(order)));
        const std::uint64_t c_inv = inverse_mod(c_mod, order);
        cert.coefficient_inverses.push_back(static_cast<std::int64_t>(c_inv));
        std::vector<std::int64_t> exponents_i;
        std::vector<std::int64_t> set_i;
        for (const auto& [lambda_enc, d_j] : pairs) {
            const std::uint64_t a =
                static_cast<std::uint64_t>((static_cast<unsigned __int128>(c_inv) * static_cast<std::uint64_t>(d_j)) % order);
            if (a == 0) throw std::logic_error("build_system: zero exponent would put theta in the subfield");
            // Recompute theta^(c_i * a) = theta - lambda_j from scratch.
            const std::int64_t scaled = floor_mod(coeffs[i] * static_cast<std::int64_t>(a),
                                                  static_cast<std::int64_t>(order));
            const FieldElement expected = tower.sub(tower.theta(), tower.from_encoding(lambda_enc));
            if (!(tower.pow(tower.theta(), scaled) == expected)) {
                throw std::logic_error("build_system: certificate recomputation failed");
            }
            exponents_i.push_back(static_cast<std::int64_t>(a));
            set_i.push_back(static_cast<std::int64_t>(a));
        }
        cert.exponents.push_back(std::move(exponents_i));
        sets.push_back(std::move(set_i));
    }

    BuiltSystem built{SidonSystem(std::move(sets)), std::move(cert)};
    for (const auto& s : built.system.sets()) {
        if (s.size() != static_cast<std::size_t>(q)) {
            throw std::logic_error("build_system: set size differs from q");
        }
    }

    const VerificationReport report = system_profile(phi, built.system, opts.enumeration);
    built.certificate.verified_multiplicity = report.max_multiplicity;
    const std::uint64_t h_factorial = factorial_saturated(h);
    if (!built.certificate.experimental_prime_power &&
        static_cast<std::uint64_t>(report.max_multiplicity) > h_factorial) {
        throw std::logic_error("build_system: verified multiplicity " +
                               std::to_string(report.max_multiplicity) + " exceeds h! = " +
                               std::to_string(h_factorial));
    }
    return built;
}

std::optional<LowerBoundWitness> lower_bound_witness(const LinearForm& phi, std::int64_t n,
                                                     const BuildOptions& opts) {
    if (n < 2) return std::nullopt;
    const unsigned h = phi.h();
    // Largest q with q^h <= n + 2, exact in integers.
    std::int64_t q = static_cast<std::int64_t>(nth_root_floor(static_cast<std::uint64_t>(n) + 2, h));
    for (; q >= 2; --q) {
        const bool usable = is_prime(static_cast<std::uint64_t>(q)) ||
                            (opts.experimental_prime_power &&
                             prime_power_split(static_cast<std::uint64_t>(q)).has_value());
        if (!usable) continue;
        if (!direct_admissible(phi, q)) continue;
        BuiltSystem built = build_system(phi, q, opts);
        return LowerBoundWitness{q, std::move(built)};
    }
    return std::nullopt;
}

std::optional<ClassicalWitness> classical_lower_bound(unsigned h, std::int64_t n,
                                                      const TowerOptions& opts) {
    if (h < 2) throw std::invalid_argument("classical_lower_bound: h must be >= 2");
    if (n < 2) return std::nullopt;
    std::int64_t q = static_cast<std::int64_t>(nth_root_floor(static_cast<std::uint64_t>(n) + 2, h));
    for (; q >= 2; --q) {
        const auto split = prime_power_split(static_cast<std::uint64_t>(q));
        if (!split) continue;
        const FieldTower tower = FieldTower::make(split->first, split->second, h, opts);
        return ClassicalWitness{q, static_cast<std::int64_t>(split->first), split->second,
                                bose_chowla_set(tower)};
    }
    return std::nullopt;
}

std::vector<DensityRow> density_table(const LinearForm& phi, const std::vector<std::int64_t>& n_values,
                                      const BuildOptions& opts) {
    std::vector<DensityRow> rows;
    rows.reserve(n_values.size());
    for (std::int64_t n : n_values) {
        DensityRow row;
        row.n = n;
        const auto witness = lower_bound_witness(phi, n, opts);
        if (witness) {
            row.q = witness->q;
            row.ratio = static_cast<double>(witness->q) /
                        std::pow(static_cast<double>(n), 1.0 / phi.h());
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace sidon
