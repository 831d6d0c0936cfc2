#pragma once

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "gb/errors.hpp"

namespace gb {

// Arithmetic context for GF(p^e). Elements are encoded as integers in
// 0..q-1 whose base-p digits are the coefficients of the residue
// polynomial, least significant first. The modulus polynomial is fixed
// per (p,e) so encodings are identical across runs and platforms.
class Field {
public:
    Field(int p, int e);

    int p() const { return p_; }
    int e() const { return e_; }
    int q() const { return q_; }
    int primitive_element() const { return primitive_; }
    // Low coefficients a_0..a_{e-1} of the monic modulus x^e + sum a_i x^i.
    const std::vector<int>& modulus() const { return modulus_; }

    int add(int a, int b) const;
    int sub(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const {
        check(a);
        check(b);
        if (a == 0 || b == 0) return 0;
        return antilog_[(log_[a] + log_[b]) % (q_ - 1)];
    }
    int inv(int a) const {
        check(a);
        if (a == 0) throw std::domain_error("gf: inverse of zero");
        return antilog_[(q_ - 1 - log_[a]) % (q_ - 1)];
    }
    int pow(int a, long long k) const;
    int frobenius(int a) const { return pow(a, p_); }

    int log(int a) const {
        check(a);
        if (a == 0) throw std::domain_error("gf: log of zero");
        return log_[a];
    }
    int antilog(int k) const { return antilog_[((k % (q_ - 1)) + (q_ - 1)) % (q_ - 1)]; }

    // Digit views of the encoding.
    int digit(int a, int i) const;
    int from_digits(const std::vector<int>& d) const;

private:
    void check(int a) const {
        if (a < 0 || a >= q_) throw std::domain_error("gf: element out of range");
    }
    int mul_poly(int a, int b) const;  // table-free product, used during setup

    int p_, e_, q_;
    std::vector<int> modulus_;
    int primitive_ = 0;
    std::vector<int> log_;
    std::vector<int> antilog_;
};

// Shared immutable field instances; pointers remain valid for the
// lifetime of the process.
const Field& field(int p, int e);
const Field& field_of_order(int q);

namespace detail {

struct ModulusEntry {
    int p, e;
    std::array<int, 3> low;  // a_0, a_1, a_2 (unused tail zero)
};

// Lexicographically first monic irreducible per (p,e), low coefficients
// read as a base-p integer.
inline constexpr ModulusEntry kModuli[] = {
    {2, 2, {1, 1, 0}}, {2, 3, {1, 1, 0}},
    {3, 2, {1, 0, 0}}, {3, 3, {1, 2, 0}},
    {5, 2, {2, 0, 0}}, {5, 3, {1, 1, 0}},
    {7, 2, {1, 0, 0}}, {7, 3, {2, 0, 0}},
};

inline int ipow(int b, int e) {
    int r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace detail

inline Field::Field(int p, int e) : p_(p), e_(e) {
    bool prime_ok = p == 2 || p == 3 || p == 5 || p == 7;
    if (!prime_ok || e < 1 || e > 3)
        throw capability_error("gf: unsupported field parameters (p,e)");
    q_ = detail::ipow(p, e);
    if (q_ > 343) throw capability_error("gf: field order exceeds 343");

    modulus_.assign(e_, 0);
    if (e_ > 1) {
        bool found = false;
        for (const auto& m : detail::kModuli) {
            if (m.p == p_ && m.e == e_) {
                for (int i = 0; i < e_; ++i) modulus_[i] = m.low[i];
                found = true;
            }
        }
        if (!found) throw capability_error("gf: no modulus for (p,e)");
    }

    // Smallest generator of the multiplicative group.
    log_.assign(q_, 0);
    antilog_.assign(q_ - 1, 0);
    for (int g = 1; g < q_; ++g) {
        int x = g, order = 1;
        while (x != 1) {
            x = mul_poly(x, g);
            ++order;
        }
        if (order == q_ - 1) {
            primitive_ = g;
            break;
        }
    }
    if (primitive_ == 0) throw internal_error("gf: no primitive element found");
    int x = 1;
    for (int k = 0; k < q_ - 1; ++k) {
        antilog_[k] = x;
        log_[x] = k;
        x = mul_poly(x, primitive_);
    }
}

inline int Field::add(int a, int b) const {
    check(a);
    check(b);
    int r = 0, mult = 1;
    for (int i = 0; i < e_; ++i) {
        r += ((a % p_ + b % p_) % p_) * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return r;
}

inline int Field::neg(int a) const {
    check(a);
    int r = 0, mult = 1;
    for (int i = 0; i < e_; ++i) {
        r += ((p_ - a % p_) % p_) * mult;
        a /= p_;
        mult *= p_;
    }
    return r;
}

inline int Field::sub(int a, int b) const { return add(a, neg(b)); }

inline int Field::mul_poly(int a, int b) const {
    // Coefficient product reduced by the modulus.
    std::vector<int> prod(2 * e_ - 1, 0);
    std::vector<int> da(e_), db(e_);
    for (int i = 0; i < e_; ++i) {
        da[i] = a % p_;
        a /= p_;
        db[i] = b % p_;
        b /= p_;
    }
    for (int i = 0; i < e_; ++i)
        for (int j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    for (int d = 2 * e_ - 2; d >= e_; --d) {
        int c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        // x^e = -sum a_i x^i
        for (int i = 0; i < e_; ++i)
            prod[d - e_ + i] = ((prod[d - e_ + i] - c * modulus_[i]) % p_ + p_) % p_;
    }
    int r = 0, mult = 1;
    for (int i = 0; i < e_; ++i) {
        r += prod[i] * mult;
        mult *= p_;
    }
    return r;
}

inline int Field::pow(int a, long long k) const {
    check(a);
    if (k < 0) throw std::domain_error("gf: negative exponent");
    if (a == 0) return k == 0 ? 1 : 0;
    long long lk = (static_cast<long long>(log_[a]) * (k % (q_ - 1))) % (q_ - 1);
    return antilog_[lk];
}

inline int Field::digit(int a, int i) const {
    check(a);
    for (int j = 0; j < i; ++j) a /= p_;
    return a % p_;
}

inline int Field::from_digits(const std::vector<int>& d) const {
    int r = 0, mult = 1;
    for (int i = 0; i < e_; ++i) {
        int c = i < static_cast<int>(d.size()) ? d[i] : 0;
        if (c < 0 || c >= p_) throw std::domain_error("gf: digit out of range");
        r += c * mult;
        mult *= p_;
    }
    return r;
}

inline const Field& field(int p, int e) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<Field>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, e);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_unique<Field>(p, e)).first;
    return *it->second;
}

inline const Field& field_of_order(int q) {
    for (int p : {2, 3, 5, 7}) {
        for (int e = 1; e <= 3; ++e) {
            if (detail::ipow(p, e) == q) return field(p, e);
        }
    }
    throw capability_error("gf: order is not a supported prime power");
}

}  // namespace gb
