#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "gb/counting.hpp"
#include "gb/errors.hpp"

namespace gb {

enum class BoundDirection { lower, upper };

struct BoundReport {
    std::string name;
    std::map<std::string, long long> params;
    BigRat exact = 0;
    BigInt value = 0;  // ceil(exact) for lower bounds, floor(exact) for upper
    BoundDirection direction = BoundDirection::lower;
    std::string trace;
};

namespace detail {

inline BigInt rat_floor(const BigRat& x) {
    BigInt n = boost::multiprecision::numerator(x);
    BigInt d = boost::multiprecision::denominator(x);
    BigInt q = n / d;
    if (n % d != 0 && n < 0) --q;
    return q;
}

inline BigInt rat_ceil(const BigRat& x) {
    BigInt n = boost::multiprecision::numerator(x);
    BigInt d = boost::multiprecision::denominator(x);
    BigInt q = n / d;
    if (n % d != 0 && n > 0) ++q;
    return q;
}

inline BigInt round_directed(const BigRat& x, BoundDirection dir) {
    return dir == BoundDirection::lower ? rat_ceil(x) : rat_floor(x);
}

// Gaussian binomial extended by [a choose b] = 0 for b > a, as needed by
// the double-count coefficients at small r.
inline BigInt gbin0(int a, int b, int q) {
    if (b >= 0 && b > a) return 0;
    return gbin(a, b, q);
}

inline BigInt big_ceil_div(const BigInt& a, const BigInt& b) {
    return (a + b - 1) / b;
}

}  // namespace detail

// s * prod_{i=0}^{f-1} [r-i]_q / [r-h-i]_q: lower bound on blocking-set
// size, upper bound on system size.
inline BoundReport counting_bound(int q, int r, int h, int f, int s, BoundDirection dir) {
    if (h + f > r) throw std::domain_error("counting_bound: require h + f <= r");
    BigRat v = s;
    for (int i = 0; i < f; ++i)
        v *= BigRat(point_count(r - i, q), point_count(r - h - i, q));
    BoundReport rep;
    rep.name = "counting";
    rep.params = {{"q", q}, {"r", r}, {"h", h}, {"f", f}, {"s", s}};
    rep.exact = v;
    rep.direction = dir;
    rep.value = detail::round_directed(v, dir);
    return rep;
}

// Coefficients of the double-counting bound for multisets of lines
// (h = 2) w.r.t. codim-f spaces in PG(r-1,q).
struct DoubleCountCoeffs {
    BigInt alpha1, alpha2, beta11, beta21, beta31, beta32;
    BigRat t;

    DoubleCountCoeffs(int q, int r, int f) {
        if (f < 2) throw std::domain_error("DoubleCountCoeffs: require f >= 2");
        if (r < f + 2) throw std::domain_error("DoubleCountCoeffs: require r >= f + 2");
        alpha1 = gbin(r - 2, f, q);
        alpha2 = big_pow(q, 2LL * (r - f)) * gbin(r - 2, r - f, q);
        beta11 = gbin(r - 2, f, q);
        beta21 = gbin(r - 3, f, q);
        beta31 = detail::gbin0(r - 4, f, q);
        beta32 = big_pow(q, 2LL * (r - f - 2)) * detail::gbin0(r - 4, f - 2, q);
        t = BigRat(beta21 - beta31, beta32);
        if (BigRat(beta31) + t * BigRat(beta32) != BigRat(beta21))
            throw internal_error("DoubleCountCoeffs: coefficient identity violated");
    }
};

// Double-counting bound for line multisets: lower bound on an s-fold
// blocking set (dir=lower) or upper bound on a system (dir=upper), given
// the multiplicity mult_L of some fixed line. At r=5, f=2 this is
// (q^4+q^2+q+1)s - q(q+1) mult_L.
inline BoundReport double_count_bound(int q, int r, int f, int s, long long mult_L,
                                      BoundDirection dir) {
    DoubleCountCoeffs c(q, r, f);
    BigRat v = (BigRat(c.alpha1) + c.t * BigRat(c.alpha2)) * s / BigRat(c.beta21) -
               BigRat(c.beta11 - c.beta21, c.beta21) * mult_L;
    BoundReport rep;
    rep.name = "double_count";
    rep.params = {{"q", q}, {"r", r}, {"f", f}, {"s", s}, {"mult_L", mult_L}};
    rep.exact = v;
    rep.direction = dir;
    rep.value = detail::round_directed(v, dir);
    std::ostringstream tr;
    tr << "alpha1=" << c.alpha1 << " alpha2=" << c.alpha2 << " beta11=" << c.beta11
       << " beta21=" << c.beta21 << " beta31=" << c.beta31 << " beta32=" << c.beta32
       << " t=" << c.t;
    rep.trace = tr.str();
    return rep;
}

// Anticode upper bound on A_q(v,k;2*delta): floor of
// gbin(v,k-delta+1)/gbin(k,k-delta+1).
inline BoundReport anticode_bound(int q, int v, int k, int delta) {
    if (v < 2 * k || delta < 1 || delta > k)
        throw std::domain_error("anticode_bound: require v >= 2k, 1 <= delta <= k");
    BigRat val(gbin(v, k - delta + 1, q), gbin(k, k - delta + 1, q));
    BoundReport rep;
    rep.name = "anticode";
    rep.params = {{"q", q}, {"v", v}, {"k", k}, {"delta", delta}};
    rep.exact = val;
    rep.direction = BoundDirection::upper;
    rep.value = detail::rat_floor(val);
    return rep;
}

// Griesmer length bound for [n,k,d]_q codes: sum_{i<k} ceil(d/q^i).
inline BigInt griesmer(int q, int k, int d) {
    if (k < 1 || d < 1) throw std::domain_error("griesmer: require k >= 1, d >= 1");
    BigInt total = 0;
    for (int i = 0; i < k; ++i) total += detail::big_ceil_div(BigInt(d), big_pow(q, i));
    return total;
}

struct GriesmerDecomposition {
    BigInt sigma;
    std::vector<int> epsilon;  // epsilon[i-1] = eps_i, 1 <= i <= k-1, 0 <= eps_i < q
    BigInt equality_length;    // sigma*[k]_q - sum eps_i*[i]_q
};

// Write d = sigma*q^{k-1} - sum_{i=1}^{k-1} eps_i*q^{i-1} with minimal
// sigma and base-q digits eps_i.
inline GriesmerDecomposition griesmer_decompose(int q, int k, int d) {
    if (k < 1 || d < 1) throw std::domain_error("griesmer_decompose: require k >= 1, d >= 1");
    GriesmerDecomposition out;
    out.sigma = detail::big_ceil_div(BigInt(d), big_pow(q, k - 1));
    BigInt deficit = out.sigma * big_pow(q, k - 1) - d;
    out.epsilon.assign(k - 1, 0);
    for (int i = 1; i <= k - 1; ++i) {
        out.epsilon[i - 1] = static_cast<int>(deficit % q);
        deficit /= q;
    }
    if (deficit != 0) throw internal_error("griesmer_decompose: deficit overflow");
    out.equality_length = out.sigma * point_count(k, q);
    for (int i = 1; i <= k - 1; ++i)
        out.equality_length -= BigInt(out.epsilon[i - 1]) * point_count(i, q);
    return out;
}

// Griesmer-type length bound for additive codes with r/h information
// symbols over GF(q^h): d + ceil((g_q(r-h+1,d) - d)/[h]_q).
inline BigInt additive_griesmer(int q, int h, int r, int d) {
    if (h < 1) throw std::domain_error("additive_griesmer: require h >= 1");
    BigInt g = griesmer(q, r - h + 1, d);
    return BigInt(d) + detail::big_ceil_div(g - d, point_count(h, q));
}

// Griesmer-type bound on length given the f-th generalized Hamming
// weight: d_f + sum_{j=1}^{k-f} ceil(d_f/([f]_q * q^j)).
inline BigInt ghw_griesmer(int q, int k, int f, int d_f) {
    if (f < 1 || f > k) throw std::domain_error("ghw_griesmer: require 1 <= f <= k");
    BigInt total = d_f;
    for (int j = 1; j <= k - f; ++j)
        total += detail::big_ceil_div(BigInt(d_f), point_count(f, q) * big_pow(q, j));
    return total;
}

struct TableCell {
    BigInt b;
    // True when the workhorse periodicity hypothesis b(s0) <= (q^4+q^2+q+1)s0
    // covers the base cell; false for cells resting on ad-hoc arguments.
    bool workhorse = true;
};

// Extend one period of exact b_q(5,2,2;s) values to all s <= max_s via
// b(s + t*[3]_q) = b(s) + t*gbin(5,2,q).
inline std::map<int, TableCell> extend_periodic_table(int q, const std::map<int, BigInt>& base,
                                                      bool check, int max_s) {
    const int period = static_cast<int>(point_count(3, q));
    for (int s = 1; s <= period; ++s)
        if (!base.count(s)) throw std::domain_error("extend_periodic_table: incomplete base period");
    const BigInt full = gbin(5, 2, q);
    const BigInt slope = big_pow(q, 4) + big_pow(q, 2) + q + 1;
    std::map<int, TableCell> out;
    for (int s = 1; s <= max_s; ++s) {
        int s0 = (s - 1) % period + 1;
        int t = (s - s0) / period;
        TableCell cell;
        cell.b = base.at(s0) + BigInt(t) * full;
        cell.workhorse = !check || base.at(s0) <= slope * s0;
        out[s] = cell;
    }
    return out;
}

// n = m*gbin(5,2,q) - b: size of the complement system at multiplicity
// cap m.
inline BigInt duality_transfer(int q, int m, const BigInt& b_value) {
    if (m < 1) throw std::domain_error("duality_transfer: require m >= 1");
    BigInt total = BigInt(m) * gbin(5, 2, q);
    if (b_value > total) throw std::domain_error("duality_transfer: b exceeds m*gbin(5,2,q)");
    return total - b_value;
}

}  // namespace gb
