#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "sidon/field_tower.hpp"

namespace sidon {

/// Finite set of distinct positive integers, kept sorted ascending.
class SidonSet {
public:
    SidonSet() = default;
    /// Sorts the input; rejects duplicates and values < 1.
    explicit SidonSet(std::vector<std::int64_t> elements);

    const std::vector<std::int64_t>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }

    friend bool operator==(const SidonSet&, const SidonSet&) = default;

private:
    std::vector<std::int64_t> elements_;
};

enum class RepMode { Ordered, Orbit };

/// Sparse representation-count profile: counts[w] is the number of ordered
/// h-tuples (Ordered) or multisets (Orbit) from the set summing to w, or to
/// w mod modulus when a modulus is present. Absent key means count zero.
struct RepProfile {
    RepMode mode = RepMode::Orbit;
    std::optional<std::int64_t> modulus;
    std::map<std::int64_t, std::int64_t> counts;

    std::int64_t max_count() const;
    std::int64_t total_mass() const;
};

struct EnumOptions {
    std::uint64_t direct_limit = 10'000'000;  // tuples enumerated directly before splitting
    bool allow_meet_in_middle = true;
};

/// Counts of ordered h-tuples by sum. Total mass |A|^h.
RepProfile rep_ordered(const SidonSet& a, unsigned h, const EnumOptions& opts = {});

/// Counts of size-h multisets by sum (reduced mod modulus when given).
/// Total mass C(|A|+h-1, h).
RepProfile rep_orbit(const SidonSet& a, unsigned h, std::optional<std::int64_t> modulus = {},
                     const EnumOptions& opts = {});

struct BhgResult {
    bool is_bhg = true;
    std::int64_t max_count = 0;
    std::optional<std::int64_t> witness_value;                // smallest value attaining max_count
    std::vector<std::vector<std::int64_t>> witness_multisets;  // nondecreasing tuples at the witness
};

/// B_h[g] predicate: true iff every multiset-sum count (mod modulus when
/// given) is at most g.
BhgResult is_bhg(const SidonSet& a, unsigned h, std::int64_t g,
                 std::optional<std::int64_t> modulus = {}, const EnumOptions& opts = {});

/// The (subfield element encoding, exponent) pairs of the Bose-Chowla
/// construction: for each lambda in the subfield, the exponent a with
/// theta^a = theta - lambda. Pairs follow subfield order.
std::vector<std::pair<std::uint64_t, std::int64_t>> bose_chowla_pairs(const FieldTower& tower);

/// Bose-Chowla set over the tower: { dlog(theta - lambda) : lambda in GF(q) }.
/// q elements inside [1, q^h - 2]; Sidon of order h modulo q^h - 1.
SidonSet bose_chowla_set(const FieldTower& tower);

/// Truth of the implication (A Sidon of order h mod m) => (A Sidon of order h).
/// Never false when the premise holds.
bool modular_implies_plain_sidon(const SidonSet& a, unsigned h, std::int64_t m,
                                 const EnumOptions& opts = {});

}  // namespace sidon
