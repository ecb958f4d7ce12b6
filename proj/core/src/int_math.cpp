#include "sidon/int_math.hpp"

#include <limits>
#include <stdexcept>

namespace sidon {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("pow_mod: modulus must be positive");
    if (m == 1) return 0;
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = static_cast<std::uint64_t>((static_cast<unsigned __int128>(result) * base) % m);
        base = static_cast<std::uint64_t>((static_cast<unsigned __int128>(base) * base) % m);
        exp >>= 1;
    }
    return result;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::uint64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

std::vector<std::int64_t> primes_up_to(std::int64_t bound) {
    std::vector<std::int64_t> out;
    if (bound < 2) return out;
    std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
    for (std::int64_t i = 2; i <= bound; ++i) {
        if (composite[static_cast<std::size_t>(i)]) continue;
        out.push_back(i);
        for (std::int64_t j = i * i; j <= bound; j += i) composite[static_cast<std::size_t>(j)] = true;
    }
    return out;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t d = 2; d * d <= n; d == 2 ? d = 3 : d += 2) {
        if (n % d != 0) continue;
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (const auto& [p, e] : factorize(n)) out.push_back(p);
    return out;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp, std::uint64_t cap) {
    std::uint64_t result = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && result > cap / base) return std::nullopt;
        result *= base;
        if (result > cap) return std::nullopt;
    }
    return result;
}

std::uint64_t nth_root_floor(std::uint64_t n, unsigned h) {
    if (h == 0) throw std::invalid_argument("nth_root_floor: h must be positive");
    if (h == 1 || n < 2) return n;
    std::uint64_t lo = 1, hi = n;
    while (lo < hi) {
        std::uint64_t mid = lo + (hi - lo + 1) / 2;
        if (checked_pow(mid, h, n).has_value()) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    return lo;
}

std::optional<std::pair<std::uint64_t, unsigned>> prime_power_split(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    auto factors = factorize(q);
    if (factors.size() != 1) return std::nullopt;
    return std::make_pair(factors[0].first, factors[0].second);
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("inverse_mod: modulus must be positive");
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(m), nr = static_cast<std::int64_t>(a % m);
    while (nr != 0) {
        std::int64_t quot = r / nr;
        std::int64_t tmp = t - quot * nt;
        t = nt;
        nt = tmp;
        tmp = r - quot * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw std::invalid_argument("inverse_mod: argument not invertible");
    if (t < 0) t += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(t);
}

std::optional<std::uint64_t> binomial_capped(std::uint64_t n, unsigned k, std::uint64_t cap) {
    if (k > n) return 0;
    if (static_cast<std::uint64_t>(k) > n - k) k = static_cast<unsigned>(n - k);
    unsigned __int128 result = 1;
    for (unsigned i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;  // exact: product of i consecutive integers is divisible by i!
        if (result > cap) return std::nullopt;
    }
    return static_cast<std::uint64_t>(result);
}

std::uint64_t factorial_saturated(unsigned h) {
    std::uint64_t result = 1;
    for (unsigned i = 2; i <= h; ++i) {
        if (result > std::numeric_limits<std::uint64_t>::max() / i) return std::numeric_limits<std::uint64_t>::max();
        result *= i;
    }
    return result;
}

}  // namespace sidon
