#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "sidon/int_math.hpp"

namespace sidon {

/// Element of GF(p^(k*h)) as a coefficient vector over GF(p), constant term
/// first, always of full length k*h (no trailing trimming).
struct FieldElement {
    std::vector<std::uint32_t> coeffs;

    friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

struct TowerOptions {
    std::uint64_t size_ceiling = std::uint64_t{1} << 24;      // cap on p^(k*h)
    std::uint64_t dlog_table_limit = std::uint64_t{1} << 20;  // full dlog table while N <= limit
};

/// The monic irreducible polynomial of degree d over GF(p) whose non-leading
/// coefficients have the smallest integer encoding sum c_i * p^i. Returned
/// constant term first, length d + 1, leading coefficient 1. Irreducibility
/// is certified by x^(p^d) = x mod f together with gcd(x^(p^(d/r)) - x, f) = 1
/// for every prime r dividing d.
std::vector<std::uint32_t> find_irreducible(std::uint64_t p, unsigned d);

/// Arithmetic context for the tower GF(p) < GF(p^k) < GF(p^(k*h)).
///
/// Construction is deterministic: the irreducible polynomial is the smallest
/// by encoding, the generator theta is the first element in encoding order of
/// multiplicative order N = p^(k*h) - 1, and the subfield GF(p^k) is the set
/// of solutions of z^q = z listed in encoding order. Immutable once built and
/// safe for concurrent reads.
class FieldTower {
public:
    static FieldTower make(std::uint64_t p, unsigned k, unsigned h, const TowerOptions& opts = {});

    std::uint64_t p() const { return p_; }
    unsigned k() const { return k_; }
    unsigned h() const { return h_; }
    unsigned degree() const { return degree_; }  // k*h
    std::uint64_t q() const { return q_; }       // p^k, subfield size
    std::uint64_t field_size() const { return size_; }
    std::uint64_t group_order() const { return order_; }  // N = p^(k*h) - 1
    const std::vector<std::uint32_t>& irreducible() const { return irr_; }
    const FieldElement& theta() const { return theta_; }
    const std::vector<std::uint64_t>& order_prime_factors() const { return order_primes_; }

    FieldElement zero() const;
    FieldElement one() const;

    /// Element with integer encoding e = sum coeffs[i] * p^i, e < field_size().
    FieldElement from_encoding(std::uint64_t e) const;
    std::uint64_t encode(const FieldElement& z) const;

    bool is_zero(const FieldElement& z) const;

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;

    /// Multiplicative inverse; throws std::domain_error on zero.
    FieldElement inv(const FieldElement& z) const;

    /// Square-and-multiply; the exponent is reduced mod N for nonzero bases.
    /// 0^0 = 1, 0^e = 0 for e > 0; negative exponents of zero throw.
    FieldElement pow(const FieldElement& z, std::int64_t e) const;

    /// Discrete log base theta, in [0, N). Uses the precomputed table when
    /// available, baby-step giant-step otherwise. Throws on zero.
    std::uint64_t dlog(const FieldElement& z) const;

    /// Baby-step giant-step path regardless of table availability; must agree
    /// with dlog() wherever both apply.
    std::uint64_t dlog_bsgs(const FieldElement& z) const;

    bool has_dlog_table() const { return !dlog_table_.empty(); }

    /// The q solutions of z^q = z, in encoding order. The indexing of the
    /// subfield used by the constructions follows this order.
    const std::vector<FieldElement>& subfield_elements() const { return subfield_; }

private:
    FieldTower() = default;

    std::uint64_t p_ = 0;
    unsigned k_ = 0;
    unsigned h_ = 0;
    unsigned degree_ = 0;
    std::uint64_t q_ = 0;
    std::uint64_t size_ = 0;
    std::uint64_t order_ = 0;
    std::vector<std::uint32_t> irr_;
    std::vector<std::uint64_t> order_primes_;
    FieldElement theta_;
    std::vector<FieldElement> subfield_;
    std::vector<std::uint32_t> dlog_table_;  // encoding -> exponent; empty when above limit
};

/// First element in encoding order whose multiplicative order is exactly N,
/// certified by z^(N/r) != 1 for every prime r | N. Recomputes the same scan
/// that chose tower.theta().
FieldElement find_generator(const FieldTower& tower);

}  // namespace sidon
