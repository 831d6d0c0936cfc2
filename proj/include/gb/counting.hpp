#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

namespace gb {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt big_pow(int q, long long e) {
    BigInt r = 1;
    BigInt b = q;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

// [i]_q = (q^i - 1) / (q - 1), the number of points of an (i-1)-space;
// [0]_q = 0 by convention.
inline BigInt point_count(int i, int q) {
    if (i < 0) throw std::domain_error("point_count: negative dimension");
    return (big_pow(q, i) - 1) / (q - 1);
}

// Gaussian binomial: the number of b-dimensional subspaces of GF(q)^a.
inline BigInt gbin(int a, int b, int q) {
    if (b < 0 || b > a) throw std::domain_error("gbin: require 0 <= b <= a");
    BigInt num = 1, den = 1;
    for (int j = 0; j < b; ++j) {
        num *= big_pow(q, a - j) - 1;
        den *= big_pow(q, b - j) - 1;
    }
    return num / den;  // exact
}

// Number of j-spaces disjoint from a fixed m-space in PG(n,q),
// projective dimensions: q^{(m+1)(j+1)} * gbin(n-m, j+1, q).
inline BigInt disjoint_count(int n, int m, int j, int q) {
    return big_pow(q, static_cast<long long>(m + 1) * (j + 1)) * gbin(n - m, j + 1, q);
}

}  // namespace gb
