#pragma once

#include <functional>
#include <map>
#include <vector>

#include "gb/subspace.hpp"

namespace gb {

namespace detail {

// The regular spread of PG(3,q): identify GF(q)^4 with GF(q^2)^2 via the
// digit encoding and take the q^2+1 points of the projective line over
// GF(q^2) as lines.
inline std::vector<Subspace> regular_spread(const Field& F) {
    const Field& E = field(F.p(), 2 * F.e());
    const int q2 = E.q();
    auto line_of = [&](int a, int b) {
        // Rows span {(x*a, x*b) : x in GF(q^2)}; x = 1 and x = the
        // polynomial generator suffice.
        int t = F.q();  // encoding of the indeterminate in GF(q^2)
        std::vector<int> rows(8, 0);
        int vals[2][2] = {{a, b}, {E.mul(t, a), E.mul(t, b)}};
        for (int i = 0; i < 2; ++i)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d) {
                    // GF(q^2) digit d of the coordinate, as e digits of GF(q)
                    int qdigit = vals[i][c] / detail::ipow(F.p(), d * F.e()) %
                                 detail::ipow(F.p(), F.e());
                    rows[static_cast<size_t>(i) * 4 + c * 2 + d] = qdigit;
                }
        return canonical_form_checked(F, std::move(rows), 2, 4, 2);
    };
    std::vector<Subspace> spread;
    for (int b = 0; b < q2; ++b) spread.push_back(line_of(1, b));
    spread.push_back(line_of(0, 1));
    std::sort(spread.begin(), spread.end());
    return spread;
}

}  // namespace detail

// `count` spreads of PG(3,q), each q^2+1 pairwise-disjoint lines covering
// every point, and pairwise line-disjoint across spreads. The first is
// the regular spread; the rest come from deterministic exact-cover
// backtracking (smallest uncovered point first, lines in canonical order).
inline std::vector<std::vector<Subspace>> find_disjoint_line_spreads(const Field& F, int count) {
    if (count < 1 || count > F.q() + 1)
        throw std::domain_error("find_disjoint_line_spreads: require 1 <= count <= q+1");

    std::vector<Subspace> points = enumerate_subspaces(F, 4, 1);
    std::vector<Subspace> lines = enumerate_subspaces(F, 4, 2);
    std::map<std::string, int> point_pos, line_pos;
    for (size_t i = 0; i < points.size(); ++i) point_pos[points[i].key()] = static_cast<int>(i);
    for (size_t i = 0; i < lines.size(); ++i) line_pos[lines[i].key()] = static_cast<int>(i);

    std::vector<std::vector<int>> line_points(lines.size());
    std::vector<std::vector<int>> point_lines(points.size());
    for (size_t li = 0; li < lines.size(); ++li) {
        for (const auto& P : subspaces_of(lines[li], 1)) {
            int pi = point_pos.at(P.key());
            line_points[li].push_back(pi);
            point_lines[pi].push_back(static_cast<int>(li));
        }
    }

    std::vector<char> line_used(lines.size(), 0);
    std::vector<std::vector<Subspace>> spreads;

    // Seed with the regular spread.
    std::vector<Subspace> first = detail::regular_spread(F);
    for (const auto& L : first) line_used[line_pos.at(L.key())] = 1;
    spreads.push_back(std::move(first));

    const int spread_size = F.q() * F.q() + 1;
    while (static_cast<int>(spreads.size()) < count) {
        std::vector<char> covered(points.size(), 0);
        std::vector<int> chosen;
        std::function<bool()> search = [&]() -> bool {
            int target = -1;
            for (size_t p = 0; p < points.size(); ++p)
                if (!covered[p]) {
                    target = static_cast<int>(p);
                    break;
                }
            if (target < 0) return true;
            for (int li : point_lines[target]) {
                if (line_used[li]) continue;
                bool clash = false;
                for (int p : line_points[li])
                    if (covered[p]) {
                        clash = true;
                        break;
                    }
                if (clash) continue;
                for (int p : line_points[li]) covered[p] = 1;
                chosen.push_back(li);
                if (search()) return true;
                chosen.pop_back();
                for (int p : line_points[li]) covered[p] = 0;
            }
            return false;
        };
        if (!search())
            throw construction_unavailable("find_disjoint_line_spreads: backtracking exhausted");
        if (static_cast<int>(chosen.size()) != spread_size)
            throw internal_error("find_disjoint_line_spreads: wrong spread size");
        std::vector<Subspace> spread;
        for (int li : chosen) {
            line_used[li] = 1;
            spread.push_back(lines[li]);
        }
        std::sort(spread.begin(), spread.end());
        spreads.push_back(std::move(spread));
    }
    return spreads;
}

}  // namespace gb
