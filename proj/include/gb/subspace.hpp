#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "gb/counting.hpp"
#include "gb/errors.hpp"
#include "gb/gf.hpp"

namespace gb {

// A subspace of GF(q)^r held as its unique reduced-row-echelon generator
// matrix: leading ones, zeros above and below pivots, pivot columns
// strictly increasing. Vector dimension k, projective dimension k-1.
struct Subspace {
    const Field* F = nullptr;
    int r = 0;
    int k = 0;
    std::vector<int> m;  // k*r entries, row major

    int at(int i, int j) const { return m[static_cast<size_t>(i) * r + j]; }

    // Row-major digit string; doubles as the canonical sort key.
    std::string key() const {
        std::string s;
        s.reserve(m.size());
        for (int v : m) s.push_back(static_cast<char>('0' + v));
        return s;
    }

    bool operator==(const Subspace& o) const { return r == o.r && k == o.k && m == o.m; }
    bool operator<(const Subspace& o) const { return m < o.m; }
};

namespace detail {

// In-place RREF of a rows x cols matrix over F; returns the rank.
inline int rref(const Field& F, std::vector<int>& a, int rows, int cols) {
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i) {
            if (a[static_cast<size_t>(i) * cols + col] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        for (int j = 0; j < cols; ++j)
            std::swap(a[static_cast<size_t>(rank) * cols + j],
                      a[static_cast<size_t>(pivot) * cols + j]);
        int lead = a[static_cast<size_t>(rank) * cols + col];
        int ilead = F.inv(lead);
        for (int j = col; j < cols; ++j) {
            auto& v = a[static_cast<size_t>(rank) * cols + j];
            v = F.mul(v, ilead);
        }
        for (int i = 0; i < rows; ++i) {
            if (i == rank) continue;
            int factor = a[static_cast<size_t>(i) * cols + col];
            if (factor == 0) continue;
            for (int j = col; j < cols; ++j) {
                auto& v = a[static_cast<size_t>(i) * cols + j];
                v = F.sub(v, F.mul(factor, a[static_cast<size_t>(rank) * cols + j]));
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace detail

// RREF representative of the row space of a rows x r matrix. Zero rows
// are dropped; the result's k is the rank.
inline Subspace canonical_form(const Field& F, std::vector<int> rows_data, int rows, int r) {
    int rank = detail::rref(F, rows_data, rows, r);
    Subspace s;
    s.F = &F;
    s.r = r;
    s.k = rank;
    s.m.assign(rows_data.begin(), rows_data.begin() + static_cast<size_t>(rank) * r);
    return s;
}

// Like canonical_form but the caller asserts the dimension.
inline Subspace canonical_form_checked(const Field& F, std::vector<int> rows_data, int rows,
                                       int r, int expected_k) {
    Subspace s = canonical_form(F, std::move(rows_data), rows, r);
    if (s.k != expected_k)
        throw std::domain_error("canonical_form: rank " + std::to_string(s.k) +
                                " differs from asserted dimension " + std::to_string(expected_k));
    return s;
}

// True iff the row space of U is contained in the row space of V.
inline bool contains(const Subspace& small, const Subspace& big) {
    if (small.F != big.F || small.r != big.r)
        throw std::domain_error("contains: mismatched ambient spaces");
    const Field& F = *small.F;
    // Reduce each row of `small` against big's RREF.
    for (int i = 0; i < small.k; ++i) {
        std::vector<int> row(small.m.begin() + static_cast<size_t>(i) * small.r,
                             small.m.begin() + static_cast<size_t>(i + 1) * small.r);
        for (int bi = 0; bi < big.k; ++bi) {
            int lead_col = -1;
            for (int j = 0; j < big.r; ++j) {
                if (big.at(bi, j) != 0) {
                    lead_col = j;
                    break;
                }
            }
            int factor = row[lead_col];
            if (factor == 0) continue;
            for (int j = lead_col; j < big.r; ++j)
                row[j] = F.sub(row[j], F.mul(factor, big.at(bi, j)));
        }
        for (int v : row)
            if (v != 0) return false;
    }
    return true;
}

// Vector dimensions of intersection and span; dim_meet + dim_join = kU + kV.
inline std::pair<int, int> meet_join_dims(const Subspace& U, const Subspace& V) {
    if (U.F != V.F || U.r != V.r)
        throw std::domain_error("meet_join_dims: mismatched ambient spaces");
    std::vector<int> stacked = U.m;
    stacked.insert(stacked.end(), V.m.begin(), V.m.end());
    int join = detail::rref(*U.F, stacked, U.k + V.k, U.r);
    return {U.k + V.k - join, join};
}

inline Subspace join(const Subspace& U, const Subspace& V) {
    std::vector<int> stacked = U.m;
    stacked.insert(stacked.end(), V.m.begin(), V.m.end());
    return canonical_form(*U.F, std::move(stacked), U.k + V.k, U.r);
}

inline int subspace_distance(const Subspace& U, const Subspace& V) {
    auto [meet, join_dim] = meet_join_dims(U, V);
    (void)join_dim;
    return U.k + V.k - 2 * meet;
}

// All k-dimensional subspaces of GF(q)^r as canonical matrices, sorted
// ascending by row-major digit string. Generated directly from the RREF
// shape: choose pivot columns, fill the free entries.
inline std::vector<Subspace> enumerate_subspaces(const Field& F, int r, int k) {
    if (k < 0 || k > r) throw std::domain_error("enumerate_subspaces: require 0 <= k <= r");
    BigInt count = gbin(r, k, F.q());
    if (count > cell_limit(10'000'000))
        throw limit_error("enumerate_subspaces: too many subspaces");

    std::vector<Subspace> out;
    out.reserve(static_cast<size_t>(count));

    std::vector<int> pivots(k);
    for (int i = 0; i < k; ++i) pivots[i] = i;
    auto emit_for_pivots = [&]() {
        // Free entries: (i,j) with j > pivots[i] and j not a pivot column.
        std::vector<char> is_pivot(r, 0);
        for (int p : pivots) is_pivot[p] = 1;
        std::vector<std::pair<int, int>> free_pos;
        for (int i = 0; i < k; ++i)
            for (int j = pivots[i] + 1; j < r; ++j)
                if (!is_pivot[j]) free_pos.emplace_back(i, j);

        std::vector<int> vals(free_pos.size(), 0);
        for (;;) {
            Subspace s;
            s.F = &F;
            s.r = r;
            s.k = k;
            s.m.assign(static_cast<size_t>(k) * r, 0);
            for (int i = 0; i < k; ++i) s.m[static_cast<size_t>(i) * r + pivots[i]] = 1;
            for (size_t t = 0; t < free_pos.size(); ++t)
                s.m[static_cast<size_t>(free_pos[t].first) * r + free_pos[t].second] = vals[t];
            out.push_back(std::move(s));

            size_t t = 0;
            while (t < vals.size() && ++vals[t] == F.q()) vals[t++] = 0;
            if (t == vals.size()) break;
        }
    };
    if (k == 0) {
        out.push_back(Subspace{&F, r, 0, {}});
        return out;
    }
    for (;;) {
        emit_for_pivots();
        // next pivot combination
        int i = k - 1;
        while (i >= 0 && pivots[i] == r - k + i) --i;
        if (i < 0) break;
        ++pivots[i];
        for (int j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Matrix product of a k x s coefficient matrix with the generators of a
// subspace of dimension s, landing back in the ambient space.
inline Subspace combine(const Field& F, const std::vector<int>& coeff, int k,
                        const Subspace& base) {
    std::vector<int> rows(static_cast<size_t>(k) * base.r, 0);
    for (int i = 0; i < k; ++i)
        for (int t = 0; t < base.k; ++t) {
            int c = coeff[static_cast<size_t>(i) * base.k + t];
            if (c == 0) continue;
            for (int j = 0; j < base.r; ++j) {
                auto& v = rows[static_cast<size_t>(i) * base.r + j];
                v = F.add(v, F.mul(c, base.at(t, j)));
            }
        }
    return canonical_form(F, std::move(rows), k, base.r);
}

// All k-dimensional subspaces of the row space of `base`.
inline std::vector<Subspace> subspaces_of(const Subspace& base, int k) {
    const Field& F = *base.F;
    std::vector<Subspace> inner = enumerate_subspaces(F, base.k, k);
    std::vector<Subspace> out;
    out.reserve(inner.size());
    for (const auto& c : inner) out.push_back(combine(F, c.m, k, base));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace gb
