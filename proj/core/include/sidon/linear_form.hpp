#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sidon/classical.hpp"

namespace sidon {

/// Linear form c_1 x_1 + ... + c_h x_h with nonzero integer coefficients.
class LinearForm {
public:
    explicit LinearForm(std::vector<std::int64_t> coeffs);

    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
    unsigned h() const { return static_cast<unsigned>(coeffs_.size()); }
    std::int64_t coefficient_sum_abs() const { return c_abs_sum_; }  // C = sum |c_i|

    /// Exact signed evaluation at an h-tuple.
    std::int64_t evaluate(std::span<const std::int64_t> tuple) const;

    friend bool operator==(const LinearForm&, const LinearForm&) = default;

private:
    std::vector<std::int64_t> coeffs_;
    std::int64_t c_abs_sum_ = 0;
};

/// h-tuple of finite integer sets (A_1, ..., A_h), each sorted distinct.
class SidonSystem {
public:
    /// Sorts each set; rejects empty sets and duplicate elements.
    explicit SidonSystem(std::vector<std::vector<std::int64_t>> sets);

    const std::vector<std::vector<std::int64_t>>& sets() const { return sets_; }
    unsigned h() const { return static_cast<unsigned>(sets_.size()); }
    std::uint64_t product_size() const;

    friend bool operator==(const SidonSystem&, const SidonSystem&) = default;

private:
    std::vector<std::vector<std::int64_t>> sets_;
};

struct BoundCheck {
    std::string name;
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
    bool pass = false;
};

/// Result of profiling a system against a form: the full representation
/// profile, its maximum, one witness value with its representing tuples, and
/// any named inequality checks that were run.
struct VerificationReport {
    std::int64_t max_multiplicity = 0;
    std::int64_t witness_value = 0;
    std::vector<std::vector<std::int64_t>> witness_tuples;
    std::uint64_t product_size = 0;
    std::uint64_t image_size = 0;
    std::map<std::int64_t, std::int64_t> profile;
    std::vector<BoundCheck> bound_checks;

    bool all_checks_pass() const;
};

/// Full representation profile of phi over A_1 x ... x A_h.
VerificationReport system_profile(const LinearForm& phi, const SidonSystem& system,
                                  const EnumOptions& opts = {});

/// True iff every value is represented at most g times.
bool is_phi_sidon(const LinearForm& phi, const SidonSystem& system, std::int64_t g,
                  const EnumOptions& opts = {});

/// Componentwise translate A_i + t_i together with t* = phi(t); the profile of
/// the translate equals the original shifted by t*.
std::pair<SidonSystem, std::int64_t> translate(const SidonSystem& system,
                                               std::span<const std::int64_t> shifts,
                                               const LinearForm& phi);

/// Checks the box-counting inequalities for a multiplicity-g system inside
/// [-n, n]: product of sizes <= g(2Cn+1), image within [-Cn, Cn], and image
/// size <= 2Cn+1. Throws std::invalid_argument if some element violates the
/// box or the declared g is below the verified multiplicity.
VerificationReport counting_bound(const LinearForm& phi, const SidonSystem& system, std::int64_t g,
                                  std::int64_t n, const EnumOptions& opts = {});

/// (2gC)^(1/h), the constant bounding F_{phi,g}(n) / n^(1/h).
double density_constant(const LinearForm& phi, std::int64_t g);

/// Digit sets [0, d_i-1] with place-value coefficients (1, d_1, d_1 d_2, ...):
/// an exact multiplicity-1 system whose profile is 1 on [0, prod d_i - 1].
std::pair<LinearForm, SidonSystem> mixed_radix_system(const std::vector<std::int64_t>& digits);

}  // namespace sidon
