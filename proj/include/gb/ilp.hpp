#pragma once

#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "gb/multiset.hpp"

namespace gb {

enum class IlpProblem { blocking_min, system_max };

struct IlpConstraint {
    std::string name;
    std::vector<int> vars;  // ascending indices, unit coefficients
    char sense = 'G';       // 'G' >=, 'L' <=, 'E' =
    long long rhs = 0;
};

// The covering/packing model over the (h-1)-spaces of PG(r-1,q): one
// all-ones objective variable per space, one constraint per codim-f
// space. Variable indices are GeometryIndex positions.
struct IlpModel {
    IlpProblem problem = IlpProblem::blocking_min;
    int q = 0, r = 0, h = 0, f = 0, s = 0;
    long long nvars = 0;
    std::vector<long long> lb, ub;
    std::vector<IlpConstraint> constraints;

    std::string lp_text() const {
        std::ostringstream out;
        out << (problem == IlpProblem::blocking_min ? "Minimize" : "Maximize") << "\n obj:";
        for (long long i = 0; i < nvars; ++i) out << (i ? " + x" : " x") << i;
        out << "\nSubject To\n";
        for (const auto& c : constraints) {
            out << " " << c.name << ":";
            for (size_t t = 0; t < c.vars.size(); ++t)
                out << (t ? " + x" : " x") << c.vars[t];
            out << (c.sense == 'G' ? " >= " : c.sense == 'L' ? " <= " : " = ") << c.rhs << "\n";
        }
        out << "Bounds\n";
        for (long long i = 0; i < nvars; ++i) {
            if (lb[i] == ub[i])
                out << " x" << i << " = " << lb[i] << "\n";
            else
                out << " " << lb[i] << " <= x" << i << " <= " << ub[i] << "\n";
        }
        out << "General\n";
        for (long long i = 0; i < nvars; ++i) out << (i ? " x" : " x") << i;
        out << "\nEnd\n";
        return out.str();
    }
};

// Build the model for b (minimize, every codim-f space covered >= s) or
// n (maximize, every codim-f space packed <= s). Default multiplicity
// cap m = s; optional variable fixings and a cardinality equality.
inline IlpModel emit_model(const Field& F, int r, int h, int f, int s, IlpProblem problem,
                           long long m = -1, const std::map<long long, long long>& fixings = {},
                           long long cardinality = -1) {
    const GeometryIndex& gi = shared_index(F, r, h, f);
    IlpModel model;
    model.problem = problem;
    model.q = F.q();
    model.r = r;
    model.h = h;
    model.f = f;
    model.s = s;
    model.nvars = static_cast<long long>(gi.H.size());
    if (m < 0) m = s;
    model.lb.assign(model.nvars, 0);
    model.ub.assign(model.nvars, m);
    for (const auto& [i, v] : fixings) {
        if (i < 0 || i >= model.nvars) throw std::domain_error("emit_model: fixing index range");
        model.lb[i] = model.ub[i] = v;
    }
    const char sense = problem == IlpProblem::blocking_min ? 'G' : 'L';
    for (size_t j = 0; j < gi.contain.size(); ++j)
        model.constraints.push_back(
            {"c" + std::to_string(j), gi.contain[j], sense, s});
    if (cardinality >= 0) {
        IlpConstraint card;
        card.name = "card";
        card.vars.resize(gi.H.size());
        for (size_t i = 0; i < gi.H.size(); ++i) card.vars[i] = static_cast<int>(i);
        card.sense = 'E';
        card.rhs = cardinality;
        model.constraints.push_back(std::move(card));
    }
    return model;
}

struct Solution {
    std::map<long long, long long> values;  // var index -> value; missing = 0
    long long objective = 0;                // recomputed, never read from file

    long long at(long long i) const {
        auto it = values.find(i);
        return it == values.end() ? 0 : it->second;
    }
};

// Solution file: one `x<index> <integer>` per line; '#' comments.
inline Solution parse_solution(const std::string& text, long long nvars) {
    Solution sol;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::string name;
        if (!(ls >> name)) continue;
        long long value;
        if (!(ls >> value)) throw parse_error("solution: missing integer value", lineno);
        std::string extra;
        if (ls >> extra) throw parse_error("solution: trailing tokens", lineno);
        if (name.size() < 2 || name[0] != 'x' ||
            name.find_first_not_of("0123456789", 1) != std::string::npos)
            throw parse_error("solution: unknown variable name '" + name + "'", lineno);
        long long idx = std::stoll(name.substr(1));
        if (idx >= nvars) throw parse_error("solution: variable index out of range", lineno);
        sol.values[idx] = value;
    }
    sol.objective = 0;
    for (const auto& [i, v] : sol.values) sol.objective += v;
    return sol;
}

inline SpaceMultiset solution_to_multiset(const Solution& sol, const Field& F, int r, int h) {
    std::vector<Subspace> H = enumerate_subspaces(F, r, h);
    SpaceMultiset ms;
    ms.F = &F;
    ms.r = r;
    ms.h = h;
    for (const auto& [i, v] : sol.values) {
        if (i < 0 || i >= static_cast<long long>(H.size()))
            throw std::domain_error("solution_to_multiset: index out of range");
        if (v < 0) throw std::domain_error("solution_to_multiset: negative value");
        if (v > 0) ms.add(H[static_cast<size_t>(i)], static_cast<int>(v));
    }
    return ms;
}

struct SolveResult {
    bool feasible = false;
    long long optimum = 0;
    Solution solution;
};

// Exact branch-and-bound for micro instances: variables in index order,
// values tried large-to-small, pruned by constraint slack and a
// max-deficit objective bound. Deterministic.
inline SolveResult solve_tiny(const IlpModel& model, long long node_cap = 20'000'000) {
    const long long nv = model.nvars;
    std::vector<std::vector<int>> var_cons(nv);
    for (size_t j = 0; j < model.constraints.size(); ++j)
        for (int i : model.constraints[j].vars) var_cons[i].push_back(static_cast<int>(j));

    const size_t nc = model.constraints.size();
    std::vector<long long> cursum(nc, 0);
    // For >= / = constraints: how much the still-unassigned variables can add.
    std::vector<long long> capacity(nc, 0);
    for (size_t j = 0; j < nc; ++j)
        for (int i : model.constraints[j].vars) capacity[j] += model.ub[i];

    const bool minimize = model.problem == IlpProblem::blocking_min;
    std::vector<long long> assign(nv, 0);
    long long ub_rest_total = 0;
    for (long long i = 0; i < nv; ++i) ub_rest_total += model.ub[i];

    SolveResult best;
    long long nodes = 0;
    long long cost = 0;

    std::function<void(long long, long long)> dfs = [&](long long i, long long ub_rest) {
        if (++nodes > node_cap) throw incomplete_search("solve_tiny: node cap exceeded");
        // prune: constraint feasibility
        for (size_t j = 0; j < nc; ++j) {
            const auto& c = model.constraints[j];
            if (c.sense != 'L' && cursum[j] + capacity[j] < c.rhs) return;
            if (c.sense != 'G' && cursum[j] > c.rhs) return;
        }
        // prune: objective bound
        if (best.feasible) {
            if (minimize) {
                long long lb = cost;
                for (size_t j = 0; j < nc; ++j) {
                    const auto& c = model.constraints[j];
                    if (c.sense == 'L') continue;
                    long long need = c.rhs - cursum[j];
                    if (cost + need > lb) lb = cost + need;
                }
                if (lb >= best.optimum) return;
            } else {
                if (cost + ub_rest <= best.optimum) return;
            }
        }
        if (i == nv) {
            for (size_t j = 0; j < nc; ++j) {
                const auto& c = model.constraints[j];
                if (c.sense == 'E' && cursum[j] != c.rhs) return;
                if (c.sense == 'G' && cursum[j] < c.rhs) return;
                if (c.sense == 'L' && cursum[j] > c.rhs) return;
            }
            best.feasible = true;
            best.optimum = cost;
            best.solution.values.clear();
            for (long long t = 0; t < nv; ++t)
                if (assign[t] != 0) best.solution.values[t] = assign[t];
            best.solution.objective = cost;
            return;
        }
        for (long long v = model.ub[i]; v >= model.lb[i]; --v) {
            assign[i] = v;
            cost += v;
            for (int j : var_cons[i]) {
                cursum[j] += v;
                capacity[j] -= model.ub[i];
            }
            dfs(i + 1, ub_rest - model.ub[i]);
            for (int j : var_cons[i]) {
                cursum[j] -= v;
                capacity[j] += model.ub[i];
            }
            cost -= v;
            assign[i] = 0;
        }
    };
    dfs(0, ub_rest_total);
    return best;
}

}  // namespace gb
