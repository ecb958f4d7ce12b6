#include "sidon/extremal.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

#include "sidon/errors.hpp"

namespace sidon {

namespace {

// Incremental multiset-sum bookkeeping for the classical search: adding an
// element touches exactly the multisets that use it at least once.
class ClassicalCounts {
public:
    ClassicalCounts(unsigned h, std::int64_t g) : h_(h), g_(g) {}

    // Adds a (greater than every current element) and returns true if every
    // count stays <= g. Always applies fully so remove() mirrors it.
    bool add(std::vector<std::int64_t>& elems, std::int64_t a) {
        bool ok = true;
        update(elems, a, +1, &ok);
        elems.push_back(a);
        return ok;
    }

    void remove(std::vector<std::int64_t>& elems, std::int64_t a) {
        elems.pop_back();
        update(elems, a, -1, nullptr);
    }

private:
    // Multisets of size h containing a at least once: t copies of a plus a
    // nondecreasing (h-t)-multiset from the previous elements.
    void update(const std::vector<std::int64_t>& prev, std::int64_t a, int delta, bool* ok) {
        for (unsigned t = 1; t <= h_; ++t) {
            rest(prev, h_ - t, 0, static_cast<std::int64_t>(t) * a, delta, ok);
        }
    }

    void rest(const std::vector<std::int64_t>& prev, unsigned depth, std::size_t lo, std::int64_t sum,
              int delta, bool* ok) {
        if (depth == 0) {
            const std::int64_t c = (counts_[sum] += delta);
            if (ok && c > g_) *ok = false;
            if (c == 0) counts_.erase(sum);
            return;
        }
        for (std::size_t i = lo; i < prev.size(); ++i) {
            rest(prev, depth - 1, i, sum + prev[i], delta, ok);
        }
    }

    unsigned h_;
    std::int64_t g_;
    std::map<std::int64_t, std::int64_t> counts_;
};

std::vector<std::int64_t> candidate_range(std::int64_t lo, std::int64_t hi, SearchOrder order) {
    std::vector<std::int64_t> out;
    for (std::int64_t v = lo; v <= hi; ++v) out.push_back(v);
    if (order == SearchOrder::Descending) std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace

ExtremalResult exact_classical(std::int64_t n, unsigned h, std::int64_t g, const OracleLimits& limits,
                               SearchOrder order) {
    if (h < 2) throw std::invalid_argument("exact_classical: h must be >= 2");
    if (n < 1) throw std::invalid_argument("exact_classical: n must be >= 1");
    if (g < 1) throw std::invalid_argument("exact_classical: g must be >= 1");
    const std::int64_t ceiling = h == 2 ? limits.max_n_h2 : (h == 3 ? limits.max_n_h3 : limits.max_n_other);
    if (n > ceiling) {
        throw CeilingExceeded("exact_classical: n = " + std::to_string(n) +
                              " exceeds the search ceiling " + std::to_string(ceiling) + " for h = " +
                              std::to_string(h));
    }

    ExtremalResult result;
    result.n = n;
    result.h = h;
    result.g = g;

    ClassicalCounts counts(h, g);
    std::vector<std::int64_t> current;
    std::vector<std::int64_t> best;

    counts.add(current, 1);  // fixed least element
    best = current;

    std::function<void(std::int64_t)> dfs = [&](std::int64_t last) {
        ++result.nodes_explored;
        if (current.size() > best.size()) best = current;
        for (std::int64_t a : candidate_range(last + 1, n, order)) {
            if (static_cast<std::int64_t>(current.size()) + (n - a + 1) <=
                static_cast<std::int64_t>(best.size())) {
                continue;
            }
            if (counts.add(current, a)) dfs(a);
            counts.remove(current, a);
        }
    };
    dfs(1);

    result.exact_value = static_cast<std::int64_t>(best.size());
    result.witness_set = best;
    return result;
}

ExtremalResult exact_system(const LinearForm& phi, std::int64_t n, std::int64_t g,
                            const OracleLimits& limits, SearchOrder order) {
    if (phi.h() != 2) throw std::invalid_argument("exact_system: the search supports h = 2 only");
    if (n < 1) throw std::invalid_argument("exact_system: n must be >= 1");
    if (g < 1) throw std::invalid_argument("exact_system: g must be >= 1");
    if (n > limits.max_n_system) {
        throw CeilingExceeded("exact_system: n = " + std::to_string(n) +
                              " exceeds the search ceiling " + std::to_string(limits.max_n_system));
    }

    ExtremalResult result;
    result.n = n;
    result.h = 2;
    result.g = g;

    const std::int64_t c1 = phi.coeffs()[0];
    const std::int64_t c2 = phi.coeffs()[1];
    const std::int64_t big_c = phi.coefficient_sum_abs();
    const std::int64_t q_max = std::min<std::int64_t>(
        n, static_cast<std::int64_t>(
               nth_root_floor(static_cast<std::uint64_t>(g) * (2 * big_c * n + 1), 2)));

    std::vector<std::int64_t> first, second;
    std::map<std::int64_t, std::int64_t> counts;

    const auto add_second = [&](std::int64_t x) {
        bool ok = true;
        for (std::int64_t a : first) {
            const std::int64_t c = ++counts[c1 * a + c2 * x];
            if (c > g) ok = false;
        }
        second.push_back(x);
        return ok;
    };
    const auto remove_second = [&](std::int64_t x) {
        second.pop_back();
        for (std::int64_t a : first) {
            auto it = counts.find(c1 * a + c2 * x);
            if (--it->second == 0) counts.erase(it);
        }
    };

    for (std::int64_t q = q_max; q >= 1; --q) {
        bool found = false;

        std::function<void(std::int64_t)> dfs_second = [&](std::int64_t last) {
            if (found) return;
            ++result.nodes_explored;
            if (static_cast<std::int64_t>(second.size()) == q) {
                found = true;
                result.witness_system = {first, second};
                return;
            }
            for (std::int64_t x : candidate_range(last + 1, n, order)) {
                if (found) return;
                if (static_cast<std::int64_t>(second.size()) + (n - x + 1) < q) continue;
                if (add_second(x)) dfs_second(x);
                remove_second(x);
            }
        };

        std::function<void(std::int64_t)> dfs_first = [&](std::int64_t last) {
            if (found) return;
            ++result.nodes_explored;
            if (static_cast<std::int64_t>(first.size()) == q) {
                dfs_second(0);
                return;
            }
            for (std::int64_t a : candidate_range(last + 1, n, order)) {
                if (found) return;
                if (static_cast<std::int64_t>(first.size()) + (n - a + 1) < q) continue;
                first.push_back(a);
                dfs_first(a);
                first.pop_back();
            }
        };

        dfs_first(0);
        if (found) {
            result.exact_value = q;
            return result;
        }
    }
    result.exact_value = 0;  // unreachable for n >= 1: q = 1 always succeeds
    return result;
}

OracleComparison oracle_vs_construction(const LinearForm& phi, std::int64_t n,
                                        const OracleLimits& limits) {
    const unsigned h = phi.h();
    const bool unit_form = std::all_of(phi.coeffs().begin(), phi.coeffs().end(),
                                       [](std::int64_t c) { return c == 1; });

    OracleComparison cmp;
    cmp.n = n;
    if (unit_form) {
        cmp.g = 1;
        const auto witness = classical_lower_bound(h, n);
        if (witness) cmp.construction_q = witness->q;
        cmp.exact_value = exact_classical(n, h, 1, limits).exact_value;
    } else {
        cmp.g = static_cast<std::int64_t>(factorial_saturated(h));
        const auto witness = lower_bound_witness(phi, n);
        if (witness) cmp.construction_q = witness->q;
        cmp.exact_value = exact_system(phi, n, cmp.g, limits).exact_value;
    }
    const std::int64_t big_c = phi.coefficient_sum_abs();
    cmp.counting_ceiling = static_cast<std::int64_t>(
        nth_root_floor(static_cast<std::uint64_t>(cmp.g) * (2 * big_c * n + 1), h));

    const std::int64_t cons = cmp.construction_q.value_or(0);
    cmp.checks.push_back(
        {"construction_le_exact", cons, cmp.exact_value, cons <= cmp.exact_value});
    cmp.checks.push_back({"exact_le_counting_ceiling", cmp.exact_value, cmp.counting_ceiling,
                          cmp.exact_value <= cmp.counting_ceiling});
    cmp.pass = std::all_of(cmp.checks.begin(), cmp.checks.end(),
                           [](const BoundCheck& c) { return c.pass; });
    if (!cmp.pass) {
        throw std::logic_error("oracle_vs_construction: a bracketing inequality failed; "
                               "this indicates an implementation bug");
    }
    return cmp;
}

}  // namespace sidon
