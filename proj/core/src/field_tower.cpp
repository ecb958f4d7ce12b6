#include "sidon/field_tower.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "sidon/errors.hpp"

namespace sidon {

namespace {

// Dense polynomials over GF(p), constant term first, no canonical length.
using Poly = std::vector<std::uint64_t>;

unsigned poly_degree(const Poly& f) {
    for (std::size_t i = f.size(); i-- > 0;) {
        if (f[i] != 0) return static_cast<unsigned>(i);
    }
    return 0;
}

bool poly_is_zero(const Poly& f) {
    return std::all_of(f.begin(), f.end(), [](std::uint64_t c) { return c == 0; });
}

void poly_trim(Poly& f) {
    while (f.size() > 1 && f.back() == 0) f.pop_back();
}

// a * b mod f, where f is monic of degree d and deg a, deg b < d.
Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
    const unsigned d = static_cast<unsigned>(f.size()) - 1;
    Poly buf(2 * d, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            buf[i + j] = (buf[i + j] + a[i] * b[j]) % p;
        }
    }
    for (std::size_t i = buf.size(); i-- > d;) {
        std::uint64_t c = buf[i];
        if (c == 0) continue;
        buf[i] = 0;
        for (unsigned j = 0; j < d; ++j) {
            if (f[j] == 0) continue;
            buf[i - d + j] = (buf[i - d + j] + c * (p - f[j])) % p;
        }
    }
    buf.resize(d);
    return buf;
}

// x^e mod f for monic f, square-and-multiply over the exponent.
Poly poly_x_pow_mod(std::uint64_t e, const Poly& f, std::uint64_t p) {
    const unsigned d = static_cast<unsigned>(f.size()) - 1;
    Poly result(d, 0);
    if (d == 0) return result;
    result[0] = 1;
    Poly base(d, 0);
    if (d == 1) {
        // x mod f is the constant -f[0]
        base[0] = (p - f[0] % p) % p;
    } else {
        base[1] = 1;
    }
    while (e > 0) {
        if (e & 1) result = poly_mul_mod(result, base, f, p);
        base = poly_mul_mod(base, base, f, p);
        e >>= 1;
    }
    return result;
}

// Remainder of a divided by b over GF(p); b nonzero.
Poly poly_mod(Poly a, const Poly& b, std::uint64_t p) {
    poly_trim(a);
    Poly bt = b;
    poly_trim(bt);
    const unsigned db = poly_degree(bt);
    const std::uint64_t lead_inv = inverse_mod(bt[db], p);
    while (!poly_is_zero(a) && poly_degree(a) >= db) {
        const unsigned da = poly_degree(a);
        const std::uint64_t factor = (a[da] * lead_inv) % p;
        for (unsigned j = 0; j <= db; ++j) {
            if (bt[j] == 0) continue;
            const std::uint64_t sub = (factor * bt[j]) % p;
            a[da - db + j] = (a[da - db + j] + p - sub) % p;
        }
        poly_trim(a);
        if (a.size() == 1 && a[0] == 0) break;
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
    poly_trim(a);
    poly_trim(b);
    while (!poly_is_zero(b)) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    // normalize monic
    poly_trim(a);
    if (!poly_is_zero(a)) {
        const std::uint64_t lead_inv = inverse_mod(a[poly_degree(a)], p);
        for (auto& c : a) c = (c * lead_inv) % p;
    }
    return a;
}

bool is_irreducible(const Poly& f, std::uint64_t p, unsigned d) {
    // x^(p^d) = x mod f
    const auto pd = checked_pow(p, d, std::uint64_t{1} << 62);
    if (!pd) throw std::invalid_argument("find_irreducible: p^d out of range");
    Poly xp = poly_x_pow_mod(*pd, f, p);
    Poly x(d, 0);
    if (d == 1) {
        x[0] = (p - f[0] % p) % p;
    } else {
        x[1] = 1;
    }
    if (xp != x) return false;
    // gcd(x^(p^(d/r)) - x, f) = 1 for each prime r | d
    for (std::uint64_t r : prime_divisors(d)) {
        const auto pe = checked_pow(p, d / static_cast<unsigned>(r), std::uint64_t{1} << 62);
        Poly t = poly_x_pow_mod(*pe, f, p);
        // t - x
        Poly diff = t;
        if (diff.size() < d) diff.resize(d, 0);
        if (d == 1) {
            diff[0] = (diff[0] + f[0] % p) % p;  // subtract the constant x-representative
        } else {
            diff[1] = (diff[1] + p - 1) % p;
        }
        Poly g = poly_gcd(diff, f, p);
        if (!(poly_degree(g) == 0 && !poly_is_zero(g))) return false;
    }
    return true;
}

}  // namespace

std::vector<std::uint32_t> find_irreducible(std::uint64_t p, unsigned d) {
    if (!is_prime(p)) throw std::invalid_argument("find_irreducible: p must be prime");
    if (d < 1) throw std::invalid_argument("find_irreducible: degree must be >= 1");
    const auto total = checked_pow(p, d, std::uint64_t{1} << 62);
    if (!total) throw std::invalid_argument("find_irreducible: p^d out of range");
    for (std::uint64_t m = 0; m < *total; ++m) {
        Poly f(d + 1, 0);
        std::uint64_t rest = m;
        for (unsigned i = 0; i < d; ++i) {
            f[i] = rest % p;
            rest /= p;
        }
        f[d] = 1;
        if (d >= 2 && f[0] == 0) continue;  // divisible by x
        if (is_irreducible(f, p, d)) {
            std::vector<std::uint32_t> out(d + 1);
            for (unsigned i = 0; i <= d; ++i) out[i] = static_cast<std::uint32_t>(f[i]);
            return out;
        }
    }
    throw std::logic_error("find_irreducible: no irreducible polynomial found");  // unreachable
}

FieldTower FieldTower::make(std::uint64_t p, unsigned k, unsigned h, const TowerOptions& opts) {
    if (!is_prime(p)) throw std::invalid_argument("make_tower: p = " + std::to_string(p) + " is not prime");
    if (k < 1) throw std::invalid_argument("make_tower: k must be >= 1");
    if (h < 2) throw std::invalid_argument("make_tower: h must be >= 2");
    const unsigned d = k * h;
    const auto size = checked_pow(p, d, opts.size_ceiling);
    if (!size) {
        throw CeilingExceeded("make_tower: p^(k*h) exceeds the size ceiling " +
                              std::to_string(opts.size_ceiling));
    }

    FieldTower t;
    t.p_ = p;
    t.k_ = k;
    t.h_ = h;
    t.degree_ = d;
    t.size_ = *size;
    t.order_ = *size - 1;
    t.q_ = *checked_pow(p, k, opts.size_ceiling);
    t.irr_ = find_irreducible(p, d);
    t.order_primes_ = prime_divisors(t.order_);

    // Generator: first element in encoding order with z^(N/r) != 1 for all prime r | N.
    const FieldElement one = t.one();
    for (std::uint64_t e = 1; e < t.size_; ++e) {
        FieldElement z = t.from_encoding(e);
        bool generates = true;
        for (std::uint64_t r : t.order_primes_) {
            if (t.pow(z, static_cast<std::int64_t>(t.order_ / r)) == one) {
                generates = false;
                break;
            }
        }
        if (generates) {
            t.theta_ = z;
            break;
        }
    }
    if (t.theta_.coeffs.empty()) throw std::logic_error("make_tower: no generator found");

    if (t.order_ <= opts.dlog_table_limit) {
        t.dlog_table_.assign(t.size_, 0);
        FieldElement acc = one;
        for (std::uint64_t e = 0; e < t.order_; ++e) {
            t.dlog_table_[t.encode(acc)] = static_cast<std::uint32_t>(e);
            acc = t.mul(acc, t.theta_);
        }
    }

    // Subfield scan: the q solutions of z^q = z, in encoding order.
    t.subfield_.reserve(t.q_);
    for (std::uint64_t e = 0; e < t.size_; ++e) {
        FieldElement z = t.from_encoding(e);
        if (t.pow(z, static_cast<std::int64_t>(t.q_)) == z) t.subfield_.push_back(z);
    }
    if (t.subfield_.size() != t.q_) throw std::logic_error("make_tower: subfield scan found wrong count");
    return t;
}

FieldElement FieldTower::zero() const {
    return FieldElement{std::vector<std::uint32_t>(degree_, 0)};
}

FieldElement FieldTower::one() const {
    FieldElement z = zero();
    z.coeffs[0] = 1;
    return z;
}

FieldElement FieldTower::from_encoding(std::uint64_t e) const {
    if (e >= size_) throw std::invalid_argument("from_encoding: encoding out of range");
    FieldElement z = zero();
    for (unsigned i = 0; i < degree_ && e > 0; ++i) {
        z.coeffs[i] = static_cast<std::uint32_t>(e % p_);
        e /= p_;
    }
    return z;
}

std::uint64_t FieldTower::encode(const FieldElement& z) const {
    std::uint64_t e = 0;
    for (unsigned i = degree_; i-- > 0;) e = e * p_ + z.coeffs[i];
    return e;
}

bool FieldTower::is_zero(const FieldElement& z) const {
    return std::all_of(z.coeffs.begin(), z.coeffs.end(), [](std::uint32_t c) { return c == 0; });
}

FieldElement FieldTower::add(const FieldElement& a, const FieldElement& b) const {
    FieldElement out = zero();
    for (unsigned i = 0; i < degree_; ++i) {
        out.coeffs[i] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(a.coeffs[i]) + b.coeffs[i]) % p_);
    }
    return out;
}

FieldElement FieldTower::sub(const FieldElement& a, const FieldElement& b) const {
    FieldElement out = zero();
    for (unsigned i = 0; i < degree_; ++i) {
        out.coeffs[i] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(a.coeffs[i]) + p_ - b.coeffs[i]) % p_);
    }
    return out;
}

FieldElement FieldTower::mul(const FieldElement& a, const FieldElement& b) const {
    Poly pa(a.coeffs.begin(), a.coeffs.end());
    Poly pb(b.coeffs.begin(), b.coeffs.end());
    Poly irr(irr_.begin(), irr_.end());
    Poly prod = poly_mul_mod(pa, pb, irr, p_);
    FieldElement out = zero();
    for (unsigned i = 0; i < degree_; ++i) out.coeffs[i] = static_cast<std::uint32_t>(prod[i]);
    return out;
}

FieldElement FieldTower::inv(const FieldElement& z) const {
    if (is_zero(z)) throw std::domain_error("inv: zero is not invertible");
    return pow(z, static_cast<std::int64_t>(order_) - 1);
}

FieldElement FieldTower::pow(const FieldElement& z, std::int64_t e) const {
    if (is_zero(z)) {
        if (e == 0) return one();
        if (e > 0) return zero();
        throw std::domain_error("pow: negative power of zero");
    }
    const std::uint64_t exp = static_cast<std::uint64_t>(floor_mod(e, static_cast<std::int64_t>(order_)));
    FieldElement result = one();
    FieldElement base = z;
    std::uint64_t rem = exp;
    while (rem > 0) {
        if (rem & 1) result = mul(result, base);
        base = mul(base, base);
        rem >>= 1;
    }
    return result;
}

std::uint64_t FieldTower::dlog(const FieldElement& z) const {
    if (is_zero(z)) throw std::invalid_argument("dlog: zero has no discrete log");
    if (!dlog_table_.empty()) return dlog_table_[encode(z)];
    return dlog_bsgs(z);
}

std::uint64_t FieldTower::dlog_bsgs(const FieldElement& z) const {
    if (is_zero(z)) throw std::invalid_argument("dlog: zero has no discrete log");
    const std::uint64_t m = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(order_))));
    std::unordered_map<std::uint64_t, std::uint64_t> baby;
    baby.reserve(m);
    FieldElement acc = one();
    for (std::uint64_t j = 0; j < m; ++j) {
        baby.emplace(encode(acc), j);
        acc = mul(acc, theta_);
    }
    const FieldElement giant = pow(theta_, -static_cast<std::int64_t>(m));
    FieldElement cur = z;
    for (std::uint64_t i = 0; i * m <= order_; ++i) {
        auto it = baby.find(encode(cur));
        if (it != baby.end()) return (i * m + it->second) % order_;
        cur = mul(cur, giant);
    }
    throw std::logic_error("dlog: baby-step giant-step failed");  // unreachable for nonzero z
}

FieldElement find_generator(const FieldTower& tower) {
    const FieldElement one = tower.one();
    for (std::uint64_t e = 1; e < tower.field_size(); ++e) {
        FieldElement z = tower.from_encoding(e);
        bool generates = true;
        for (std::uint64_t r : tower.order_prime_factors()) {
            if (tower.pow(z, static_cast<std::int64_t>(tower.group_order() / r)) == one) {
                generates = false;
                break;
            }
        }
        if (generates) return z;
    }
    throw std::logic_error("find_generator: no generator found");
}

}  // namespace sidon
