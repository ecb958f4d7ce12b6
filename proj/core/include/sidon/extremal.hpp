#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sidon/linear_form.hpp"
#include "sidon/system_builder.hpp"

namespace sidon {

struct OracleLimits {
    std::int64_t max_n_h2 = 40;
    std::int64_t max_n_h3 = 20;
    std::int64_t max_n_other = 12;
    std::int64_t max_n_system = 15;
};

/// Candidate iteration order for the backtracking searches; the exact value
/// must not depend on it.
enum class SearchOrder { Ascending, Descending };

struct ExtremalResult {
    std::int64_t n = 0;
    unsigned h = 0;
    std::int64_t g = 1;
    std::int64_t exact_value = 0;
    std::vector<std::int64_t> witness_set;                  // classical search
    std::vector<std::vector<std::int64_t>> witness_system;  // system search
    std::uint64_t nodes_explored = 0;
};

/// Exact F_h(n) for B_h[g] subsets of [1, n] by depth-first search with
/// incremental multiset-sum counts. The search fixes 1 as the least element;
/// translation invariance keeps the maximum unchanged.
ExtremalResult exact_classical(std::int64_t n, unsigned h, std::int64_t g = 1,
                               const OracleLimits& limits = {},
                               SearchOrder order = SearchOrder::Ascending);

/// Exact F_{phi,g}(n): the largest q admitting equal-size sets A_1, A_2 in
/// [1, n] of multiplicity <= g. Supports h = 2 only.
ExtremalResult exact_system(const LinearForm& phi, std::int64_t n, std::int64_t g,
                            const OracleLimits& limits = {},
                            SearchOrder order = SearchOrder::Ascending);

struct OracleComparison {
    std::int64_t n = 0;
    std::int64_t g = 1;
    std::optional<std::int64_t> construction_q;  // absent when no witness fits
    std::int64_t exact_value = 0;
    std::int64_t counting_ceiling = 0;  // floor((g(2Cn+1))^(1/h))
    std::vector<BoundCheck> checks;
    bool pass = false;
};

/// Brackets the constructed witness between the exact oracle value and the
/// counting ceiling: construction <= exact <= ceiling. A violated inequality
/// is an implementation bug and throws std::logic_error. Unit forms compare
/// against the classical construction and oracle (g = 1); other forms use the
/// system search at g = h!.
OracleComparison oracle_vs_construction(const LinearForm& phi, std::int64_t n,
                                        const OracleLimits& limits = {});

}  // namespace sidon
