#include "sidon/linear_form.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "sidon/errors.hpp"

namespace sidon {

LinearForm::LinearForm(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() < 2) throw std::invalid_argument("LinearForm: need at least two coefficients");
    for (std::int64_t c : coeffs_) {
        if (c == 0) throw std::invalid_argument("LinearForm: coefficients must be nonzero");
        c_abs_sum_ += abs64(c);
    }
}

std::int64_t LinearForm::evaluate(std::span<const std::int64_t> tuple) const {
    if (tuple.size() != coeffs_.size()) {
        throw std::invalid_argument("evaluate: tuple length does not match the form");
    }
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) sum += coeffs_[i] * tuple[i];
    return sum;
}

SidonSystem::SidonSystem(std::vector<std::vector<std::int64_t>> sets) : sets_(std::move(sets)) {
    if (sets_.size() < 2) throw std::invalid_argument("SidonSystem: need at least two sets");
    for (auto& s : sets_) {
        if (s.empty()) throw std::invalid_argument("SidonSystem: sets must be nonempty");
        std::sort(s.begin(), s.end());
        for (std::size_t i = 1; i < s.size(); ++i) {
            if (s[i] == s[i - 1]) {
                throw std::invalid_argument("SidonSystem: duplicate element " + std::to_string(s[i]));
            }
        }
    }
}

std::uint64_t SidonSystem::product_size() const {
    std::uint64_t prod = 1;
    for (const auto& s : sets_) prod *= s.size();
    return prod;
}

bool VerificationReport::all_checks_pass() const {
    return std::all_of(bound_checks.begin(), bound_checks.end(),
                       [](const BoundCheck& c) { return c.pass; });
}

namespace {

void require_same_arity(const LinearForm& phi, const SidonSystem& system) {
    if (phi.h() != system.h()) {
        throw std::invalid_argument("system arity does not match the form");
    }
}

std::map<std::int64_t, std::int64_t> product_counts(const LinearForm& phi,
                                                    const std::vector<std::vector<std::int64_t>>& sets,
                                                    std::size_t lo, std::size_t hi,
                                                    const EnumOptions& opts) {
    std::map<std::int64_t, std::int64_t> counts;
    std::uint64_t tuples = 1;
    bool within = true;
    for (std::size_t i = lo; i < hi; ++i) {
        tuples *= sets[i].size();
        if (tuples > opts.direct_limit) {
            within = false;
            break;
        }
    }
    if (within) {
        const auto& coeffs = phi.coeffs();
        std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t sum) {
            if (i == hi) {
                ++counts[sum];
                return;
            }
            for (std::int64_t v : sets[i]) rec(i + 1, sum + coeffs[i] * v);
        };
        rec(lo, 0);
        return counts;
    }
    if (!opts.allow_meet_in_middle) {
        throw CeilingExceeded("system_profile: product size exceeds the enumeration ceiling "
                              "and splitting is disabled");
    }
    const std::size_t mid = lo + (hi - lo + 1) / 2;
    auto left = product_counts(phi, sets, lo, mid, opts);
    auto right = product_counts(phi, sets, mid, hi, opts);
    std::map<std::int64_t, std::int64_t> out;
    for (const auto& [s1, c1] : left) {
        for (const auto& [s2, c2] : right) out[s1 + s2] += c1 * c2;
    }
    return out;
}

// Tuples achieving the target value, found by DFS with suffix range pruning.
std::vector<std::vector<std::int64_t>> collect_tuples_at(const LinearForm& phi,
                                                         const std::vector<std::vector<std::int64_t>>& sets,
                                                         std::int64_t target, std::size_t max_tuples) {
    const unsigned h = phi.h();
    const auto& coeffs = phi.coeffs();
    std::vector<std::int64_t> suffix_min(h + 1, 0), suffix_max(h + 1, 0);
    for (unsigned i = h; i-- > 0;) {
        std::int64_t lo = coeffs[i] > 0 ? coeffs[i] * sets[i].front() : coeffs[i] * sets[i].back();
        std::int64_t hi = coeffs[i] > 0 ? coeffs[i] * sets[i].back() : coeffs[i] * sets[i].front();
        suffix_min[i] = suffix_min[i + 1] + lo;
        suffix_max[i] = suffix_max[i + 1] + hi;
    }
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> cur;
    std::function<void(unsigned, std::int64_t)> rec = [&](unsigned i, std::int64_t sum) {
        if (out.size() >= max_tuples) return;
        if (i == h) {
            if (sum == target) out.push_back(cur);
            return;
        }
        if (sum + suffix_min[i] > target || sum + suffix_max[i] < target) return;
        for (std::int64_t v : sets[i]) {
            cur.push_back(v);
            rec(i + 1, sum + coeffs[i] * v);
            cur.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

}  // namespace

VerificationReport system_profile(const LinearForm& phi, const SidonSystem& system,
                                  const EnumOptions& opts) {
    require_same_arity(phi, system);
    VerificationReport report;
    report.profile = product_counts(phi, system.sets(), 0, system.h(), opts);
    report.product_size = system.product_size();
    report.image_size = report.profile.size();
    for (const auto& [w, c] : report.profile) {
        if (c > report.max_multiplicity) {
            report.max_multiplicity = c;
            report.witness_value = w;
        }
    }
    if (report.max_multiplicity > 0) {
        report.witness_tuples =
            collect_tuples_at(phi, system.sets(), report.witness_value, /*max_tuples=*/64);
    }
    return report;
}

bool is_phi_sidon(const LinearForm& phi, const SidonSystem& system, std::int64_t g,
                  const EnumOptions& opts) {
    if (g < 1) throw std::invalid_argument("is_phi_sidon: g must be >= 1");
    return system_profile(phi, system, opts).max_multiplicity <= g;
}

std::pair<SidonSystem, std::int64_t> translate(const SidonSystem& system,
                                               std::span<const std::int64_t> shifts,
                                               const LinearForm& phi) {
    require_same_arity(phi, system);
    if (shifts.size() != system.h()) {
        throw std::invalid_argument("translate: shift tuple length does not match the system");
    }
    std::vector<std::vector<std::int64_t>> shifted = system.sets();
    for (std::size_t i = 0; i < shifted.size(); ++i) {
        for (auto& v : shifted[i]) v += shifts[i];
    }
    return {SidonSystem(std::move(shifted)), phi.evaluate(shifts)};
}

VerificationReport counting_bound(const LinearForm& phi, const SidonSystem& system, std::int64_t g,
                                  std::int64_t n, const EnumOptions& opts) {
    require_same_arity(phi, system);
    if (g < 1) throw std::invalid_argument("counting_bound: g must be >= 1");
    if (n < 1) throw std::invalid_argument("counting_bound: n must be >= 1");
    for (const auto& s : system.sets()) {
        for (std::int64_t v : s) {
            if (abs64(v) > n) {
                throw std::invalid_argument("counting_bound: element " + std::to_string(v) +
                                            " lies outside [-n, n] with n = " + std::to_string(n));
            }
        }
    }
    VerificationReport report = system_profile(phi, system, opts);
    if (report.max_multiplicity > g) {
        throw std::invalid_argument("counting_bound: declared multiplicity g = " + std::to_string(g) +
                                    " is below the verified maximum " +
                                    std::to_string(report.max_multiplicity));
    }
    const std::int64_t big_c = phi.coefficient_sum_abs();
    const std::int64_t slots = 2 * big_c * n + 1;
    std::int64_t max_abs_value = 0;
    for (const auto& [w, c] : report.profile) max_abs_value = std::max(max_abs_value, abs64(w));

    report.bound_checks.push_back({"product_le_g_slots", static_cast<std::int64_t>(report.product_size),
                                   g * slots, static_cast<std::int64_t>(report.product_size) <= g * slots});
    report.bound_checks.push_back(
        {"image_within_box", max_abs_value, big_c * n, max_abs_value <= big_c * n});
    report.bound_checks.push_back({"image_size_le_slots", static_cast<std::int64_t>(report.image_size),
                                   slots, static_cast<std::int64_t>(report.image_size) <= slots});
    return report;
}

double density_constant(const LinearForm& phi, std::int64_t g) {
    if (g < 1) throw std::invalid_argument("density_constant: g must be >= 1");
    return std::pow(2.0 * static_cast<double>(g) * static_cast<double>(phi.coefficient_sum_abs()),
                    1.0 / phi.h());
}

std::pair<LinearForm, SidonSystem> mixed_radix_system(const std::vector<std::int64_t>& digits) {
    if (digits.size() < 2) throw std::invalid_argument("mixed_radix_system: need at least two digits");
    for (std::int64_t d : digits) {
        if (d < 2) throw std::invalid_argument("mixed_radix_system: every digit bound must be >= 2");
    }
    std::vector<std::int64_t> coeffs;
    std::vector<std::vector<std::int64_t>> sets;
    std::int64_t place = 1;
    for (std::int64_t d : digits) {
        coeffs.push_back(place);
        std::vector<std::int64_t> digits_i(static_cast<std::size_t>(d));
        for (std::int64_t v = 0; v < d; ++v) digits_i[static_cast<std::size_t>(v)] = v;
        sets.push_back(std::move(digits_i));
        place *= d;
    }
    return {LinearForm(std::move(coeffs)), SidonSystem(std::move(sets))};
}

}  // namespace sidon
