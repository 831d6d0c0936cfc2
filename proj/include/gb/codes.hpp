#pragma once

#include <vector>

#include "gb/multiset.hpp"

namespace gb {

// Subfield expansion of a multiset of (h-1)-spaces: one block of h
// columns per entry occurrence, the block columns being the entry's
// generator rows. An additive [n, r/h]_{q^h} code seen over GF(q).
struct ExpandedCode {
    const Field* F = nullptr;
    int r = 0;      // GF(q) dimension of the message space
    int h = 0;      // block width
    long long n = 0;  // number of blocks
    std::vector<int> G;  // r x (n*h), row major

    int at(int i, long long j) const { return G[static_cast<size_t>(i) * (n * h) + j]; }
};

inline ExpandedCode expand(const SpaceMultiset& ms) {
    ExpandedCode code;
    code.F = ms.F;
    code.r = ms.r;
    code.h = ms.h;
    code.n = ms.n();
    code.G.assign(static_cast<size_t>(code.r) * code.n * code.h, 0);
    long long block = 0;
    for (const auto& [key, c] : ms.mult) {
        Subspace s = ms.entry(key);
        for (int rep = 0; rep < c; ++rep, ++block)
            for (int t = 0; t < code.h; ++t)
                for (int i = 0; i < code.r; ++i)
                    code.G[static_cast<size_t>(i) * (code.n * code.h) + block * code.h + t] =
                        s.at(t, i);
    }
    return code;
}

namespace detail {

// Codeword of the message with digit encoding v (base q across the r
// message coordinates), as per-block nonzero flags.
inline void block_support(const ExpandedCode& code, const std::vector<int>& msg,
                          std::vector<char>& nonzero) {
    const Field& F = *code.F;
    nonzero.assign(static_cast<size_t>(code.n), 0);
    for (long long b = 0; b < code.n; ++b) {
        for (int t = 0; t < code.h; ++t) {
            int acc = 0;
            for (int i = 0; i < code.r; ++i)
                acc = F.add(acc, F.mul(msg[i], code.at(i, b * code.h + t)));
            if (acc != 0) {
                nonzero[static_cast<size_t>(b)] = 1;
                break;
            }
        }
    }
}

}  // namespace detail

// Minimum block weight over all nonzero messages, by exhaustion.
inline long long min_distance(const ExpandedCode& code) {
    const Field& F = *code.F;
    BigInt space = big_pow(F.q(), code.r);
    if (space > (1LL << 20)) throw limit_error("min_distance: message space too large");
    long long best = -1;
    std::vector<int> msg(code.r, 0);
    std::vector<char> nz;
    for (BigInt v = 1; v < space; ++v) {
        // next message vector (base-q counter)
        int t = 0;
        while (++msg[t] == F.q()) msg[t++] = 0;
        detail::block_support(code, msg, nz);
        long long w = 0;
        for (char c : nz) w += c;
        if (best < 0 || w < best) best = w;
    }
    return best;
}

// f-th generalized Hamming weight: the smallest block support of an
// f-dimensional subcode, by exhaustion over message subspaces.
inline long long ghw(const ExpandedCode& code, int f) {
    const Field& F = *code.F;
    if (f < 1 || f > code.r) throw std::domain_error("ghw: require 1 <= f <= r");
    if (gbin(code.r, f, F.q()) > 1'000'000) throw limit_error("ghw: too many subcodes");
    long long best = -1;
    std::vector<char> nz, support;
    for (const auto& D : enumerate_subspaces(F, code.r, f)) {
        support.assign(static_cast<size_t>(code.n), 0);
        for (int row = 0; row < f; ++row) {
            std::vector<int> msg(D.m.begin() + static_cast<size_t>(row) * code.r,
                                 D.m.begin() + static_cast<size_t>(row + 1) * code.r);
            detail::block_support(code, msg, nz);
            for (long long b = 0; b < code.n; ++b) support[b] |= nz[b];
        }
        long long w = 0;
        for (char c : support) w += c;
        if (best < 0 || w < best) best = w;
    }
    return best;
}

struct GhwIdentityReport {
    bool holds = false;
    long long d_f = 0;
    long long n = 0;
    long long max_count = 0;  // largest codim-f multiplicity of the multiset
};

// Check the geometric identity n - d_f = max codim-f multiplicity, with
// both sides computed independently.
inline GhwIdentityReport check_ghw_identity(const SpaceMultiset& ms, int f) {
    GhwIdentityReport rep;
    rep.n = ms.n();
    rep.d_f = ghw(expand(ms), f);
    rep.max_count = verify(ms, f, VerifyMode::system, 0).max_count;
    rep.holds = rep.d_f == rep.n - rep.max_count;
    return rep;
}

}  // namespace gb
