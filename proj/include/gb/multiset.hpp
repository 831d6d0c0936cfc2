#pragma once

#include <cstdio>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <tuple>
#include <string>
#include <vector>

#include "gb/geometry.hpp"

namespace gb {

// Multiset of (h-1)-spaces of PG(r-1,q), keyed by the canonical digit
// string of each space. Map order coincides with enumeration order, so
// iteration is canonical.
struct SpaceMultiset {
    const Field* F = nullptr;
    int r = 0, h = 0;
    std::map<std::string, int> mult;

    long long n() const {
        long long total = 0;
        for (const auto& [k, c] : mult) total += c;
        return total;
    }
    int max_multiplicity() const {
        int m = 0;
        for (const auto& [k, c] : mult) m = std::max(m, c);
        return m;
    }
    void add(const Subspace& s, int count = 1) {
        if (s.r != r || s.k != h)
            throw std::domain_error("SpaceMultiset: entry dimension mismatch");
        if (count < 0) throw std::domain_error("SpaceMultiset: negative multiplicity");
        if (count == 0) return;
        mult[s.key()] += count;
    }
    Subspace entry(const std::string& key) const {
        std::vector<int> rows(key.size());
        for (size_t i = 0; i < key.size(); ++i) rows[i] = key[i] - '0';
        return canonical_form_checked(*F, std::move(rows), h, r, h);
    }
};

enum class VerifyMode { blocking, system };

struct VerifyReport {
    VerifyMode mode{};
    int f = 0, s = 0;
    long long n = 0;
    long long min_count = 0, max_count = 0;
    std::string argmin_key, argmax_key;  // first extremal codim-f space
    int max_multiplicity = 0;
    long long mu = -1;  // max entries through an (f-1)-space; -1 = not computed
    bool verified = false;
};

// Process-wide cache of incidence indices; these are expensive to build
// and immutable, so verifications share them.
inline const GeometryIndex& shared_index(const Field& F, int r, int h, int f) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, int, int>, std::unique_ptr<GeometryIndex>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(F.q(), r, h, f);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_unique<GeometryIndex>(build_index(F, r, h, f))).first;
    return *it->second;
}

// Count the members (with multiplicity) in every codim-f space and judge
// the multiset as an s-fold blocking set (min count >= s) or a projective
// system (max count <= s).
inline VerifyReport verify(const SpaceMultiset& ms, int f, VerifyMode mode, int s,
                           bool compute_mu = false) {
    if (ms.h + f > ms.r) throw std::domain_error("verify: require h + f <= r");
    const GeometryIndex& gi = shared_index(*ms.F, ms.r, ms.h, f);

    std::vector<long long> weight(gi.H.size(), 0);
    for (const auto& [key, c] : ms.mult) {
        auto it = gi.h_index.find(key);
        if (it == gi.h_index.end())
            throw std::domain_error("verify: entry is not an (h-1)-space of this geometry");
        weight[it->second] = c;
    }

    VerifyReport rep;
    rep.mode = mode;
    rep.f = f;
    rep.s = s;
    rep.n = ms.n();
    rep.max_multiplicity = ms.max_multiplicity();
    rep.min_count = -1;
    rep.max_count = -1;
    for (size_t j = 0; j < gi.C.size(); ++j) {
        long long count = 0;
        for (int hi : gi.contain[j]) count += weight[hi];
        if (rep.min_count < 0 || count < rep.min_count) {
            rep.min_count = count;
            rep.argmin_key = gi.C[j].key();
        }
        if (rep.max_count < 0 || count > rep.max_count) {
            rep.max_count = count;
            rep.argmax_key = gi.C[j].key();
        }
    }
    rep.verified = mode == VerifyMode::blocking ? rep.min_count >= s : rep.max_count <= s;

    if (compute_mu) {
        if (f > ms.h) throw std::domain_error("verify: mu needs f <= h");
        rep.mu = 0;
        for (const auto& S : enumerate_subspaces(*ms.F, ms.r, f)) {
            long long through = 0;
            for (const auto& [key, c] : ms.mult)
                if (contains(S, ms.entry(key))) through += c;
            rep.mu = std::max(rep.mu, through);
        }
    }
    return rep;
}

// Multiplicity-lambda complement: every (h-1)-space gets multiplicity
// lambda - mult(H). Cardinality lambda*gbin(r,h,q) - n.
inline SpaceMultiset complement(const SpaceMultiset& ms, int lambda) {
    if (ms.max_multiplicity() > lambda)
        throw std::domain_error("complement: multiplicity exceeds lambda");
    SpaceMultiset out;
    out.F = ms.F;
    out.r = ms.r;
    out.h = ms.h;
    for (const auto& H : enumerate_subspaces(*ms.F, ms.r, ms.h)) {
        auto it = ms.mult.find(H.key());
        int c = lambda - (it == ms.mult.end() ? 0 : it->second);
        if (c > 0) out.mult[H.key()] = c;
    }
    return out;
}

inline SpaceMultiset multiset_sum(const SpaceMultiset& a, const SpaceMultiset& b) {
    if (a.F != b.F || a.r != b.r || a.h != b.h)
        throw std::domain_error("multiset_sum: parameter mismatch");
    SpaceMultiset out = a;
    for (const auto& [key, c] : b.mult) out.mult[key] += c;
    return out;
}

// Certificate text: header `q=<int> r=<int> h=<int>`, then one entry per
// line as h digit rows of length r joined by '/'; repetition encodes
// multiplicity; '#' starts a comment.
inline SpaceMultiset parse_certificate(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    bool have_header = false;
    SpaceMultiset ms;
    int q = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        size_t b = raw.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        size_t e = raw.find_last_not_of(" \t\r");
        std::string line = raw.substr(b, e - b + 1);
        if (!have_header) {
            int r = 0, h = 0;
            if (std::sscanf(line.c_str(), "q=%d r=%d h=%d", &q, &r, &h) != 3)
                throw parse_error("certificate: bad header", lineno);
            ms.F = &field_of_order(q);
            ms.r = r;
            ms.h = h;
            have_header = true;
            continue;
        }
        std::vector<int> rows;
        rows.reserve(static_cast<size_t>(ms.h) * ms.r);
        int row_count = 1;
        for (char c : line)
            if (c == '/') ++row_count;
        if (row_count != ms.h) throw parse_error("certificate: expected " + std::to_string(ms.h) +
                                                 " rows", lineno);
        size_t pos = 0;
        for (int i = 0; i < ms.h; ++i) {
            size_t next = line.find('/', pos);
            std::string row = line.substr(pos, next == std::string::npos ? next : next - pos);
            if (static_cast<int>(row.size()) != ms.r)
                throw parse_error("certificate: row length != r", lineno);
            for (char c : row) {
                if (c < '0' || c >= '0' + q)
                    throw parse_error("certificate: digit out of range for the field", lineno);
                rows.push_back(c - '0');
            }
            pos = next == std::string::npos ? line.size() : next + 1;
        }
        Subspace s = canonical_form(*ms.F, std::move(rows), ms.h, ms.r);
        if (s.k != ms.h)
            throw parse_error("certificate: rows do not span an (h-1)-space", lineno);
        ms.mult[s.key()] += 1;
    }
    if (!have_header) throw parse_error("certificate: missing header");
    return ms;
}

inline std::string emit_certificate(const SpaceMultiset& ms) {
    std::ostringstream out;
    out << "q=" << ms.F->q() << " r=" << ms.r << " h=" << ms.h << "\n";
    for (const auto& [key, c] : ms.mult) {
        std::string line;
        for (int i = 0; i < ms.h; ++i) {
            if (i) line += '/';
            line += key.substr(static_cast<size_t>(i) * ms.r, ms.r);
        }
        for (int t = 0; t < c; ++t) out << line << "\n";
    }
    return out.str();
}

}  // namespace gb
