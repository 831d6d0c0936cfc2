#pragma once

#include <functional>
#include <map>
#include <vector>

#include "gb/flags.hpp"
#include "gb/multiset.hpp"
#include "gb/spreads.hpp"

namespace gb {

namespace detail {

inline Subspace coordinate_space(const Field& F, int r, int k) {
    std::vector<int> rows(static_cast<size_t>(k) * r, 0);
    for (int i = 0; i < k; ++i) rows[static_cast<size_t>(i) * r + i] = 1;
    return canonical_form(F, std::move(rows), k, r);
}

// Embed a subspace of GF(q)^4 into coordinates 2..5 of GF(q)^5 and span
// with e1.
inline Subspace lift_through_e1(const Field& F, const Subspace& quot) {
    std::vector<int> rows(static_cast<size_t>(quot.k + 1) * 5, 0);
    rows[0] = 1;
    for (int i = 0; i < quot.k; ++i)
        for (int j = 0; j < 4; ++j)
            rows[static_cast<size_t>(i + 1) * 5 + 1 + j] = quot.at(i, j);
    return canonical_form(F, std::move(rows), quot.k + 1, 5);
}

inline bool through(const Subspace& point, const Subspace& space) {
    return contains(point, space);
}

}  // namespace detail

// All (h-1)-spaces inside a fixed (h+f-1)-space (the first h+f
// coordinates); a 1-fold blocking set of size gbin(h+f,h,q).
inline SpaceMultiset subspace_blocking(const Field& F, int r, int h, int f) {
    if (h + f > r) throw std::domain_error("subspace_blocking: require h + f <= r");
    SpaceMultiset ms;
    ms.F = &F;
    ms.r = r;
    ms.h = h;
    Subspace big = detail::coordinate_space(F, r, h + f);
    for (const auto& s : subspaces_of(big, h)) ms.add(s);
    return ms;
}

// 1-fold blocking set of lines w.r.t. planes in PG(4,q) of size
// (q^6-q^2)/(q^2-1) + (q^3-1)/(q-1): the lines through P inside a fixed
// solid U, plus the lines avoiding P in the planes spanned by P and the
// lines of a regular spread of the quotient.
inline SpaceMultiset eisfeld(const Field& F, int l) {
    if (l != 3) throw capability_error("eisfeld: only the PG(4,q) case (l=3) is built");
    SpaceMultiset ms;
    ms.F = &F;
    ms.r = 5;
    ms.h = 2;
    Subspace P = detail::coordinate_space(F, 5, 1);
    Subspace U = detail::coordinate_space(F, 5, 4);
    for (const auto& L : subspaces_of(U, 2))
        if (detail::through(P, L)) ms.add(L);
    auto spread = find_disjoint_line_spreads(F, 1)[0];
    for (const auto& ell : spread) {
        Subspace plane = detail::lift_through_e1(F, ell);
        for (const auto& L : subspaces_of(plane, 2))
            if (!detail::through(P, L)) ms.add(L);
    }
    return ms;
}

// q-fold blocking set of size q^2(q+1) + q^3(q^2+1): the avoid-P lines of
// q pairwise line-disjoint spreads lifted through P, plus the lines
// through P disjoint from a fixed avoid-P line L in the first lifted
// plane.
inline SpaceMultiset q_fold(const Field& F) {
    const int q = F.q();
    SpaceMultiset ms;
    ms.F = &F;
    ms.r = 5;
    ms.h = 2;
    Subspace P = detail::coordinate_space(F, 5, 1);
    auto spreads = find_disjoint_line_spreads(F, q);
    Subspace L;
    bool have_L = false;
    for (const auto& spread : spreads) {
        for (const auto& ell : spread) {
            Subspace plane = detail::lift_through_e1(F, ell);
            for (const auto& line : subspaces_of(plane, 2)) {
                if (detail::through(P, line)) continue;
                if (!have_L) {
                    L = line;  // lex-first avoid-P line of the first lifted plane
                    have_L = true;
                }
                ms.add(line);
            }
        }
    }
    for (const auto& line : enumerate_subspaces(F, 5, 2))
        if (detail::through(P, line) && meet_join_dims(line, L).first == 0) ms.add(line);
    return ms;
}

// (q+1)-fold blocking set of size [4]_q + q^2(q+1)(q^2+1): every line
// through P plus the avoid-P lines of q+1 disjoint spreads lifted
// through P.
inline SpaceMultiset qp1_fold(const Field& F) {
    const int q = F.q();
    SpaceMultiset ms;
    ms.F = &F;
    ms.r = 5;
    ms.h = 2;
    Subspace P = detail::coordinate_space(F, 5, 1);
    for (const auto& line : enumerate_subspaces(F, 5, 2))
        if (detail::through(P, line)) ms.add(line);
    for (const auto& spread : find_disjoint_line_spreads(F, q + 1))
        for (const auto& ell : spread) {
            Subspace plane = detail::lift_through_e1(F, ell);
            for (const auto& line : subspaces_of(plane, 2))
                if (!detail::through(P, line)) ms.add(line);
        }
    return ms;
}

// q^2-fold blocking set of size q^6+q^4+q^3+q^2: q^2 copies of every line
// of a fixed plane E plus the q^6 lines disjoint from E.
inline SpaceMultiset q2_fold(const Field& F) {
    const int q = F.q();
    SpaceMultiset ms;
    ms.F = &F;
    ms.r = 5;
    ms.h = 2;
    Subspace E = detail::coordinate_space(F, 5, 3);
    for (const auto& line : subspaces_of(E, 2)) ms.add(line, q * q);
    for (const auto& line : enumerate_subspaces(F, 5, 2))
        if (meet_join_dims(line, E).first == 0) ms.add(line);
    return ms;
}

// (q^2+q)-fold blocking set of size q^6+q^5+q^4+2q^3+2q^2+q: a line L
// with multiplicity q^2+q, q copies of every line of a solid S meeting L
// in a point, and the lines meeting S in a point off L.
inline SpaceMultiset q2q_fold(const Field& F) {
    const int q = F.q();
    SpaceMultiset ms;
    ms.F = &F;
    ms.r = 5;
    ms.h = 2;
    Subspace L = detail::coordinate_space(F, 5, 2);
    Subspace S = detail::coordinate_space(F, 5, 4);
    ms.add(L, q * q + q);
    for (const auto& line : subspaces_of(S, 2))
        if (!(line == L) && meet_join_dims(line, L).first == 1) ms.add(line, q);
    for (const auto& line : enumerate_subspaces(F, 5, 2)) {
        if (meet_join_dims(line, S).first != 1) continue;
        if (meet_join_dims(line, L).first == 0) ms.add(line);
    }
    return ms;
}

// q^2-fold blocking set of lines w.r.t. planes in PG(n,q), n >= 4: q^2
// copies of every line of a fixed (n-2)-space S plus the lines disjoint
// from S. Specializes to q2_fold at n=4.
inline SpaceMultiset q2_fold_general(const Field& F, int n) {
    if (n < 4) throw std::domain_error("q2_fold_general: require ambient PG(n,q), n >= 4");
    const int q = F.q();
    const int r = n + 1;
    SpaceMultiset ms;
    ms.F = &F;
    ms.r = r;
    ms.h = 2;
    Subspace S = detail::coordinate_space(F, r, r - 2);
    for (const auto& line : subspaces_of(S, 2)) ms.add(line, q * q);
    for (const auto& line : enumerate_subspaces(F, r, 2))
        if (meet_join_dims(line, S).first == 0) ms.add(line);
    return ms;
}

struct SolomonStifflerParams {
    int sigma = 1;
    std::map<int, int> epsilon;  // vector dim i -> eps_i, h+f <= i <= r-1
};

// sigma copies of every (h-1)-space minus eps_i copies of those inside
// the coordinate i-space, for each i. Returns the guaranteed system
// level s = sigma*gbin(r-f,h,q) - sum eps_i*gbin(i-f,h,q).
inline std::pair<SpaceMultiset, long long> solomon_stiffler(const Field& F, int r, int h, int f,
                                                            const SolomonStifflerParams& params) {
    int eps_total = 0;
    for (const auto& [i, eps] : params.epsilon) {
        if (i < h + f || i > r - 1)
            throw std::domain_error("solomon_stiffler: epsilon index out of range");
        if (eps < 0) throw std::domain_error("solomon_stiffler: negative epsilon");
        eps_total += eps;
    }
    if (params.sigma < eps_total)
        throw std::domain_error("solomon_stiffler: sigma < sum of epsilons");

    SpaceMultiset ms;
    ms.F = &F;
    ms.r = r;
    ms.h = h;
    for (const auto& H : enumerate_subspaces(F, r, h)) ms.mult[H.key()] = params.sigma;
    for (const auto& [i, eps] : params.epsilon) {
        if (eps == 0) continue;
        Subspace Si = detail::coordinate_space(F, r, i);
        for (const auto& H : subspaces_of(Si, h)) {
            int& c = ms.mult[H.key()];
            c -= eps;
            if (c < 0) throw std::domain_error("solomon_stiffler: negative multiplicity");
            if (c == 0) ms.mult.erase(H.key());
        }
    }
    BigInt s = BigInt(params.sigma) * gbin(r - f, h, F.q());
    for (const auto& [i, eps] : params.epsilon) s -= BigInt(eps) * gbin(i - f, h, F.q());
    return {ms, static_cast<long long>(s)};
}

struct SubspaceCodeParams {
    int r = 0, h = 0, delta = 1;
};

// Lifted Gabidulin code: the q^{(r-h)(h-delta+1)} spaces with generator
// [I_h | M], M running over evaluations of linearized polynomials
// sum a_i x^{q^i} of q-degree <= h-delta over GF(q^{r-h}) at the basis
// points 1, x, x^2, .... Every codim-(r-h-delta+1) space contains at
// most one of them; span(e_{h+1},...,e_r) is disjoint from all of them.
inline SpaceMultiset lmrd_lift(const Field& F, const SubspaceCodeParams& p) {
    if (F.e() != 1) throw capability_error("lmrd_lift: base field must be prime");
    const int q = F.q();
    const int m = p.r - p.h;
    if (p.h < 1 || p.h > 3 || m < 1 || m > 3 || p.r < 2 * p.h)
        throw capability_error("lmrd_lift: unsupported (r,h)");
    if (p.delta < 1 || p.delta > p.h) throw std::domain_error("lmrd_lift: require 1 <= delta <= h");
    const Field& E = m == 1 ? F : field(F.p(), m);

    // Basis points 1, x, x^2 of GF(q^m) in the digit encoding.
    std::vector<int> basis(p.h);
    for (int j = 0; j < p.h; ++j) basis[j] = detail::ipow(q, j);

    const int ncoef = p.h - p.delta + 1;
    std::vector<int> a(ncoef, 0);
    SpaceMultiset ms;
    ms.F = &F;
    ms.r = p.r;
    ms.h = p.h;
    for (;;) {
        std::vector<int> rows(static_cast<size_t>(p.h) * p.r, 0);
        for (int j = 0; j < p.h; ++j) {
            rows[static_cast<size_t>(j) * p.r + j] = 1;
            int val = 0;  // f(basis[j]) = sum a_i * basis[j]^{q^i}
            for (int i = 0; i < ncoef; ++i)
                val = E.add(val, E.mul(a[i], E.pow(basis[j], detail::ipow(q, i))));
            for (int d = 0; d < m; ++d)
                rows[static_cast<size_t>(j) * p.r + p.h + d] = E.digit(val, d);
        }
        ms.add(canonical_form_checked(F, std::move(rows), p.h, p.r, p.h));

        size_t t = 0;
        while (t < a.size() && ++a[t] == E.q()) a[t++] = 0;
        if (t == a.size()) break;
    }
    return ms;
}

// Maximum partial line spread of PG(4,q): the q^3 lifted-Gabidulin lines
// plus one line inside the plane they all miss; q^3+1 pairwise-disjoint
// lines.
inline SpaceMultiset max_partial_spread_pg4(const Field& F) {
    SpaceMultiset ms = lmrd_lift(F, SubspaceCodeParams{5, 2, 2});
    std::vector<int> rows(static_cast<size_t>(3) * 5, 0);
    for (int i = 0; i < 3; ++i) rows[static_cast<size_t>(i) * 5 + 2 + i] = 1;
    Subspace missed = canonical_form(F, std::move(rows), 3, 5);
    ms.add(subspaces_of(missed, 2).front());
    return ms;
}

struct FlagOrbitResult {
    std::vector<int> alpha;
    BigInt cardinality = 0;
    SpaceMultiset multiset;
};

// Minimize sum alpha_i * |H_i| over alpha_i in 0..s subject to
// sum_i alpha_i * beta[j][i] >= s for every plane class j; realizes the
// optimum as a multiset of lines (alpha_i copies of each line of class i).
inline FlagOrbitResult flag_orbit_search(const Field& F, int s,
                                         const FlagClassification* fc_in = nullptr) {
    FlagClassification local;
    const FlagClassification* fc = fc_in;
    if (!fc) {
        local = classify_flag(F);
        fc = &local;
    }
    const size_t u = fc->line_classes.size();
    const size_t v = fc->plane_classes.size();
    std::vector<BigInt> sizes(u);
    for (size_t i = 0; i < u; ++i) sizes[i] = BigInt(fc->line_classes[i].members.size());

    // Max coverage constraint j can still gain from classes i..u-1.
    std::vector<std::vector<long long>> rest(v, std::vector<long long>(u + 1, 0));
    for (size_t j = 0; j < v; ++j)
        for (size_t i = u; i-- > 0;)
            rest[j][i] = rest[j][i + 1] + static_cast<long long>(s) * fc->beta[j][i];

    std::vector<int> alpha(u, 0), best_alpha(u, s);
    BigInt best = 0;  // seeded with the feasible all-alpha=s solution
    for (size_t i = 0; i < u; ++i) best += BigInt(s) * sizes[i];
    std::vector<long long> cover(v, 0);
    BigInt cost = 0;
    std::function<void(size_t)> dfs = [&](size_t i) {
        if (cost >= best) return;
        for (size_t j = 0; j < v; ++j)
            if (cover[j] + rest[j][i] < s) return;
        if (i == u) {
            best = cost;
            best_alpha = alpha;
            return;
        }
        for (int val = 0; val <= s; ++val) {
            alpha[i] = val;
            cost += BigInt(val) * sizes[i];
            for (size_t j = 0; j < v; ++j) cover[j] += static_cast<long long>(val) * fc->beta[j][i];
            dfs(i + 1);
            for (size_t j = 0; j < v; ++j) cover[j] -= static_cast<long long>(val) * fc->beta[j][i];
            cost -= BigInt(val) * sizes[i];
            alpha[i] = 0;
        }
    };
    dfs(0);

    FlagOrbitResult res;
    res.alpha = best_alpha;
    res.cardinality = best;
    res.multiset.F = &F;
    res.multiset.r = 5;
    res.multiset.h = 2;
    for (size_t i = 0; i < u; ++i) {
        if (best_alpha[i] == 0) continue;
        for (int li : fc->line_classes[i].members)
            res.multiset.add(fc->lines[li], best_alpha[i]);
    }
    return res;
}

}  // namespace gb
