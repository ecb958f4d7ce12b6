#include "sidon/classical.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

#include "sidon/errors.hpp"

namespace sidon {

SidonSet::SidonSet(std::vector<std::int64_t> elements) : elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (elements_[i] < 1) throw std::invalid_argument("SidonSet: elements must be >= 1");
        if (i > 0 && elements_[i] == elements_[i - 1]) {
            throw std::invalid_argument("SidonSet: duplicate element " + std::to_string(elements_[i]));
        }
    }
}

std::int64_t RepProfile::max_count() const {
    std::int64_t m = 0;
    for (const auto& [w, c] : counts) m = std::max(m, c);
    return m;
}

std::int64_t RepProfile::total_mass() const {
    std::int64_t m = 0;
    for (const auto& [w, c] : counts) m += c;
    return m;
}

namespace {

std::int64_t profile_key(std::int64_t sum, const std::optional<std::int64_t>& modulus) {
    return modulus ? floor_mod(sum, *modulus) : sum;
}

void enumerate_ordered_direct(const std::vector<std::int64_t>& a, unsigned h,
                              std::map<std::int64_t, std::int64_t>& counts) {
    std::function<void(unsigned, std::int64_t)> rec = [&](unsigned depth, std::int64_t sum) {
        if (depth == h) {
            ++counts[sum];
            return;
        }
        for (std::int64_t v : a) rec(depth + 1, sum + v);
    };
    rec(0, 0);
}

// Multisets as nondecreasing index tuples.
void enumerate_orbit_direct(const std::vector<std::int64_t>& a, unsigned h,
                            const std::optional<std::int64_t>& modulus,
                            std::map<std::int64_t, std::int64_t>& counts) {
    std::function<void(unsigned, std::size_t, std::int64_t)> rec = [&](unsigned depth, std::size_t lo,
                                                                       std::int64_t sum) {
        if (depth == h) {
            ++counts[profile_key(sum, modulus)];
            return;
        }
        for (std::size_t i = lo; i < a.size(); ++i) rec(depth + 1, i, sum + a[i]);
    };
    rec(0, 0, 0);
}

std::map<std::int64_t, std::int64_t> convolve(const std::map<std::int64_t, std::int64_t>& lhs,
                                              const std::map<std::int64_t, std::int64_t>& rhs) {
    std::map<std::int64_t, std::int64_t> out;
    for (const auto& [s1, c1] : lhs) {
        for (const auto& [s2, c2] : rhs) out[s1 + s2] += c1 * c2;
    }
    return out;
}

std::map<std::int64_t, std::int64_t> ordered_counts(const std::vector<std::int64_t>& a, unsigned h,
                                                    const EnumOptions& opts) {
    std::map<std::int64_t, std::int64_t> counts;
    if (a.empty() || h == 0) {
        if (h == 0) counts[0] = 1;
        return counts;
    }
    if (checked_pow(a.size(), h, opts.direct_limit)) {
        enumerate_ordered_direct(a, h, counts);
        return counts;
    }
    if (!opts.allow_meet_in_middle) {
        throw CeilingExceeded("rep_ordered: |A|^h exceeds the enumeration ceiling and splitting is disabled");
    }
    const unsigned h1 = (h + 1) / 2;
    return convolve(ordered_counts(a, h1, opts), ordered_counts(a, h - h1, opts));
}

// Nondecreasing h1-tuples grouped by last index, and h2-tuples grouped by
// first index; a multiset splits uniquely with last_index <= first_index.
std::vector<std::map<std::int64_t, std::int64_t>> orbit_groups_by_boundary(
    const std::vector<std::int64_t>& a, unsigned h, bool group_by_last) {
    std::vector<std::map<std::int64_t, std::int64_t>> groups(a.size());
    std::function<void(unsigned, std::size_t, std::size_t, std::int64_t)> rec =
        [&](unsigned depth, std::size_t lo, std::size_t boundary, std::int64_t sum) {
            if (depth == h) {
                ++groups[boundary][sum];
                return;
            }
            for (std::size_t i = lo; i < a.size(); ++i) {
                rec(depth + 1, i, group_by_last ? i : (depth == 0 ? i : boundary), sum + a[i]);
            }
        };
    rec(0, 0, 0, 0);
    return groups;
}

std::map<std::int64_t, std::int64_t> orbit_counts(const std::vector<std::int64_t>& a, unsigned h,
                                                  const std::optional<std::int64_t>& modulus,
                                                  const EnumOptions& opts) {
    std::map<std::int64_t, std::int64_t> counts;
    if (a.empty()) return counts;
    const auto multisets = binomial_capped(a.size() + h - 1, h, opts.direct_limit);
    if (multisets) {
        enumerate_orbit_direct(a, h, modulus, counts);
        return counts;
    }
    if (!opts.allow_meet_in_middle) {
        throw CeilingExceeded("rep_orbit: C(|A|+h-1, h) exceeds the enumeration ceiling and splitting is disabled");
    }
    const unsigned h1 = (h + 1) / 2;
    const unsigned h2 = h - h1;
    auto left = orbit_groups_by_boundary(a, h1, /*group_by_last=*/true);
    auto right = orbit_groups_by_boundary(a, h2, /*group_by_last=*/false);
    // Running union of right groups with first index >= i, joined against left
    // groups whose last index is exactly i.
    std::map<std::int64_t, std::int64_t> right_tail;
    for (std::size_t i = a.size(); i-- > 0;) {
        for (const auto& [s, c] : right[i]) right_tail[s] += c;
        for (const auto& [s1, c1] : left[i]) {
            for (const auto& [s2, c2] : right_tail) counts[profile_key(s1 + s2, modulus)] += c1 * c2;
        }
    }
    return counts;
}

// All nondecreasing h-tuples whose (possibly reduced) sum equals target.
std::vector<std::vector<std::int64_t>> collect_multisets_at(const std::vector<std::int64_t>& a, unsigned h,
                                                            std::int64_t target,
                                                            const std::optional<std::int64_t>& modulus,
                                                            std::size_t max_tuples) {
    std::vector<std::vector<std::int64_t>> out;
    if (a.empty()) return out;
    const std::int64_t lo_val = a.front(), hi_val = a.back();
    std::vector<std::int64_t> cur;
    std::function<void(unsigned, std::size_t, std::int64_t)> rec = [&](unsigned depth, std::size_t lo,
                                                                       std::int64_t sum) {
        if (out.size() >= max_tuples) return;
        if (depth == h) {
            if (profile_key(sum, modulus) == target) out.push_back(cur);
            return;
        }
        if (!modulus) {
            const std::int64_t remaining = static_cast<std::int64_t>(h - depth);
            if (sum + remaining * lo_val > target || sum + remaining * hi_val < target) return;
        }
        for (std::size_t i = lo; i < a.size(); ++i) {
            cur.push_back(a[i]);
            rec(depth + 1, i, sum + a[i]);
            cur.pop_back();
        }
    };
    rec(0, 0, 0);
    return out;
}

}  // namespace

RepProfile rep_ordered(const SidonSet& a, unsigned h, const EnumOptions& opts) {
    if (h < 1) throw std::invalid_argument("rep_ordered: h must be >= 1");
    RepProfile profile;
    profile.mode = RepMode::Ordered;
    profile.counts = ordered_counts(a.elements(), h, opts);
    return profile;
}

RepProfile rep_orbit(const SidonSet& a, unsigned h, std::optional<std::int64_t> modulus,
                     const EnumOptions& opts) {
    if (h < 1) throw std::invalid_argument("rep_orbit: h must be >= 1");
    if (modulus && *modulus < 2) throw std::invalid_argument("rep_orbit: modulus must be >= 2");
    RepProfile profile;
    profile.mode = RepMode::Orbit;
    profile.modulus = modulus;
    profile.counts = orbit_counts(a.elements(), h, modulus, opts);
    return profile;
}

BhgResult is_bhg(const SidonSet& a, unsigned h, std::int64_t g, std::optional<std::int64_t> modulus,
                 const EnumOptions& opts) {
    if (g < 1) throw std::invalid_argument("is_bhg: g must be >= 1");
    BhgResult result;
    const RepProfile profile = rep_orbit(a, h, modulus, opts);
    result.max_count = profile.max_count();
    result.is_bhg = result.max_count <= g;
    if (result.max_count > 0) {
        for (const auto& [w, c] : profile.counts) {
            if (c == result.max_count) {
                result.witness_value = w;
                break;
            }
        }
        const bool enumerable =
            modulus ? binomial_capped(a.size() + h - 1, h, opts.direct_limit).has_value() : true;
        if (enumerable) {
            result.witness_multisets = collect_multisets_at(a.elements(), h, *result.witness_value, modulus,
                                                            /*max_tuples=*/64);
        }
    }
    return result;
}

std::vector<std::pair<std::uint64_t, std::int64_t>> bose_chowla_pairs(const FieldTower& tower) {
    std::vector<std::pair<std::uint64_t, std::int64_t>> pairs;
    pairs.reserve(tower.subfield_elements().size());
    for (const FieldElement& lambda : tower.subfield_elements()) {
        const FieldElement shifted = tower.sub(tower.theta(), lambda);
        const std::uint64_t a = tower.dlog(shifted);
        if (a == 0) throw std::logic_error("bose_chowla: exponent 0 would put theta in the subfield");
        pairs.emplace_back(tower.encode(lambda), static_cast<std::int64_t>(a));
    }
    return pairs;
}

SidonSet bose_chowla_set(const FieldTower& tower) {
    std::vector<std::int64_t> elements;
    for (const auto& [lambda_enc, a] : bose_chowla_pairs(tower)) elements.push_back(a);
    return SidonSet(std::move(elements));  // ctor rejects collisions, which would be a bug
}

bool modular_implies_plain_sidon(const SidonSet& a, unsigned h, std::int64_t m, const EnumOptions& opts) {
    const bool premise = rep_orbit(a, h, m, opts).max_count() <= 1;
    if (!premise) return true;
    return rep_orbit(a, h, std::nullopt, opts).max_count() <= 1;
}

}  // namespace sidon
