#pragma once

#include <map>
#include <string>
#include <vector>

#include "gb/subspace.hpp"

namespace gb {

// Enumerated (h-1)-spaces and codim-f spaces of PG(r-1,q) together with
// the containment map. Both lists are in canonical ascending order, so
// indices double as LP variable / constraint numbers.
struct GeometryIndex {
    const Field* F = nullptr;
    int r = 0, h = 0, f = 0;
    std::vector<Subspace> H;  // vector dimension h
    std::vector<Subspace> C;  // vector dimension r-f
    std::vector<std::vector<int>> contain;  // per C-member: sorted H indices inside it
    std::map<std::string, int> h_index;     // key() -> position in H

    int index_of(const Subspace& s) const {
        auto it = h_index.find(s.key());
        if (it == h_index.end())
            throw std::domain_error("GeometryIndex: subspace not of dimension h");
        return it->second;
    }
};

inline GeometryIndex build_index(const Field& F, int r, int h, int f) {
    if (h + f > r) throw std::domain_error("build_index: require h + f <= r");
    GeometryIndex gi;
    gi.F = &F;
    gi.r = r;
    gi.h = h;
    gi.f = f;
    gi.H = enumerate_subspaces(F, r, h);
    gi.C = enumerate_subspaces(F, r, r - f);
    BigInt cells = BigInt(gi.H.size()) * BigInt(gi.C.size());
    if (cells > cell_limit(100'000'000))
        throw limit_error("build_index: incidence table too large");
    for (size_t i = 0; i < gi.H.size(); ++i) gi.h_index[gi.H[i].key()] = static_cast<int>(i);
    gi.contain.resize(gi.C.size());
    for (size_t j = 0; j < gi.C.size(); ++j) {
        // Enumerate h-subspaces inside C[j] and look them up; cheaper than
        // testing every member of H against every member of C.
        for (const auto& sub : subspaces_of(gi.C[j], h))
            gi.contain[j].push_back(gi.h_index.at(sub.key()));
        std::sort(gi.contain[j].begin(), gi.contain[j].end());
    }
    return gi;
}

}  // namespace gb
