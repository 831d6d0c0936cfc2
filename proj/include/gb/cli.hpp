#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gb/bounds.hpp"
#include "gb/codes.hpp"
#include "gb/constructions.hpp"
#include "gb/ilp.hpp"

namespace gb::cli {

namespace detail {

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_out(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) {
        out << text;
    } else {
        std::ofstream f(path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write file: " + path);
        f << text;
    }
}

inline SpaceMultiset all_spaces(const Field& F, int r, int h) {
    SpaceMultiset ms;
    ms.F = &F;
    ms.r = r;
    ms.h = h;
    for (const auto& s : enumerate_subspaces(F, r, h)) ms.add(s);
    return ms;
}

struct VerifySummary {
    VerifyReport rep;
    std::string line;
};

inline VerifySummary verify_summary(const SpaceMultiset& ms, int f, VerifyMode mode, int s,
                                    bool mu) {
    VerifySummary vs;
    vs.rep = verify(ms, f, mode, s, mu);
    std::ostringstream o;
    o << "n=" << vs.rep.n << " min_count=" << vs.rep.min_count << " max_count=" << vs.rep.max_count
      << " max_mult=" << vs.rep.max_multiplicity;
    if (mu) o << " mu=" << vs.rep.mu;
    o << " verified=" << (vs.rep.verified ? "true" : "false");
    vs.line = o.str();
    return vs;
}

}  // namespace detail

// All command logic; returns the process exit code. 0 = success/verified,
// 1 = verification failed, 2 = usage or input error, 3 = capability limit.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"generalized blocking sets and projective systems in PG(r-1,q)"};
    app.require_subcommand(1);
    // -h is used as the dimension flag --h below, so help is --help only
    app.set_help_flag("--help", "print help");
    auto add_sub = [](CLI::App* parent, const std::string& name, const std::string& desc) {
        auto* sc = parent->add_subcommand(name, desc);
        sc->set_help_flag("--help", "print help");
        return sc;
    };

    int q = 2, r = 5, h = 2, f = 2, s = 1, k = 2, d = 1, delta = 1, v = 5;
    int l = 3, sigma = 1, n_amb = 4, mm = 1;
    long long bval = 0, mult_L = 0, max_mult = -1, cardinality = -1;
    std::string file, ofile, mode = "blocking", dir = "lower", problem = "b", fix_file,
                fix_zero_file, eps_spec;
    bool want_mu = false, list_flag = false;
    int max_s = 7;

    // enum
    auto* c_enum = add_sub(&app, "enum", "enumerate subspaces of PG(r-1,q)");
    c_enum->add_option("--q", q)->required();
    c_enum->add_option("--r", r)->required();
    c_enum->add_option("--k", k)->required();
    c_enum->add_flag("--list", list_flag, "print every subspace key");

    // construct <name>
    auto* c_cons = add_sub(&app, "construct", "build a named construction");
    std::string cname;
    c_cons->add_option("name", cname)->required();
    c_cons->add_option("--q", q);
    c_cons->add_option("--r", r);
    c_cons->add_option("--h", h);
    c_cons->add_option("--f", f);
    c_cons->add_option("--s", s);
    c_cons->add_option("--l", l);
    c_cons->add_option("--delta", delta);
    c_cons->add_option("--n", n_amb, "ambient projective dimension (q2_fold_general)");
    c_cons->add_option("--sigma", sigma);
    c_cons->add_option("--eps", eps_spec, "comma list i=v for solomon_stiffler");
    c_cons->add_option("-o", ofile);

    // verify
    auto* c_ver = add_sub(&app, "verify", "verify a certificate file");
    c_ver->add_option("--mode", mode)->check(CLI::IsMember({"blocking", "system"}));
    c_ver->add_option("--f", f)->required();
    c_ver->add_option("--s", s)->required();
    c_ver->add_flag("--mu", want_mu);
    c_ver->add_option("file", file)->required();

    // bound <name>
    auto* c_bnd = add_sub(&app, "bound", "evaluate a named bound");
    std::string bname;
    c_bnd->add_option("name", bname)->required();
    c_bnd->add_option("--q", q);
    c_bnd->add_option("--r", r);
    c_bnd->add_option("--h", h);
    c_bnd->add_option("--f", f);
    c_bnd->add_option("--s", s);
    c_bnd->add_option("--k", k);
    c_bnd->add_option("--d", d);
    c_bnd->add_option("--v", v);
    c_bnd->add_option("--delta", delta);
    c_bnd->add_option("--m", mm);
    c_bnd->add_option("--b", bval);
    c_bnd->add_option("--mult-L", mult_L);
    c_bnd->add_option("--dir", dir)->check(CLI::IsMember({"lower", "upper"}));

    // table
    auto* c_tab = add_sub(&app, "table", "print the exact-value table");
    std::string tname = "b";
    c_tab->add_option("name", tname)->check(CLI::IsMember({"b"}));
    c_tab->add_option("--q", q);
    c_tab->add_option("--max-s", max_s);

    // ilp emit / check
    auto* c_ilp = add_sub(&app, "ilp", "ILP model emission and checking");
    c_ilp->require_subcommand(1);
    auto* c_emit = add_sub(c_ilp, "emit", "write an LP model");
    c_emit->add_option("--q", q)->required();
    c_emit->add_option("--r", r)->required();
    c_emit->add_option("--h", h)->required();
    c_emit->add_option("--f", f)->required();
    c_emit->add_option("--s", s)->required();
    c_emit->add_option("--problem", problem)->check(CLI::IsMember({"b", "n"}));
    c_emit->add_option("--max-mult", max_mult);
    c_emit->add_option("--fix", fix_file, "certificate; fix listed variables to their multiplicities");
    c_emit->add_option("--fix-zero", fix_zero_file, "certificate; fix listed variables to zero");
    c_emit->add_option("--cardinality", cardinality);
    c_emit->add_option("-o", ofile);
    auto* c_chk = add_sub(c_ilp, "check", "verify a solver solution file");
    c_chk->add_option("--q", q)->required();
    c_chk->add_option("--r", r)->required();
    c_chk->add_option("--h", h)->required();
    c_chk->add_option("--f", f)->required();
    c_chk->add_option("--s", s)->required();
    c_chk->add_option("--problem", problem)->check(CLI::IsMember({"b", "n"}));
    c_chk->add_option("file", file)->required();

    // code ghw / mindist
    auto* c_code = add_sub(&app, "code", "expanded-code weight computations");
    c_code->require_subcommand(1);
    auto* c_ghw = add_sub(c_code, "ghw", "generalized Hamming weight");
    c_ghw->add_option("--f", f)->required();
    c_ghw->add_option("file", file)->required();
    auto* c_mind = add_sub(c_code, "mindist", "minimum distance");
    c_mind->add_option("file", file)->required();

    // flag-classes
    auto* c_flag = add_sub(&app, "flag-classes", "line/plane classes of a maximal flag");
    c_flag->add_option("--q", q)->required();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (*c_enum) {
            const Field& F = field_of_order(q);
            auto spaces = enumerate_subspaces(F, r, k);
            out << "count=" << spaces.size() << "\n";
            if (list_flag)
                for (const auto& sp : spaces) out << sp.key() << "\n";
            return 0;
        }

        if (*c_cons) {
            const Field& F = field_of_order(q);
            SpaceMultiset ms;
            VerifyMode vmode = VerifyMode::blocking;
            int vf = 2, vs = 0;
            if (cname == "subspace_blocking") {
                ms = subspace_blocking(F, r, h, f);
                vf = f;
                vs = 1;
            } else if (cname == "eisfeld") {
                ms = eisfeld(F, l);
                vf = 2;
                vs = 1;
            } else if (cname == "q_fold") {
                ms = q_fold(F);
                vf = 2;
                vs = q;
            } else if (cname == "qp1_fold") {
                ms = qp1_fold(F);
                vf = 2;
                vs = q + 1;
            } else if (cname == "q2_fold") {
                ms = q2_fold(F);
                vf = 2;
                vs = q * q;
            } else if (cname == "q2q_fold") {
                ms = q2q_fold(F);
                vf = 2;
                vs = q * q + q;
            } else if (cname == "q2_fold_general") {
                ms = q2_fold_general(F, n_amb);
                vf = n_amb - 2;
                vs = q * q;
            } else if (cname == "solomon_stiffler") {
                SolomonStifflerParams p;
                p.sigma = sigma;
                std::stringstream ss(eps_spec);
                std::string item;
                while (std::getline(ss, item, ',')) {
                    auto eq = item.find('=');
                    if (eq == std::string::npos)
                        throw std::domain_error("--eps expects i=v entries");
                    p.epsilon[std::stoi(item.substr(0, eq))] = std::stoi(item.substr(eq + 1));
                }
                auto [built, level] = solomon_stiffler(F, r, h, f, p);
                ms = built;
                vmode = VerifyMode::system;
                vf = f;
                vs = static_cast<int>(level);
            } else if (cname == "lmrd_lift") {
                ms = lmrd_lift(F, SubspaceCodeParams{r, h, delta});
                vmode = VerifyMode::system;
                vf = r - h - delta + 1;
                vs = 1;
            } else if (cname == "max_partial_spread") {
                ms = max_partial_spread_pg4(F);
                vmode = VerifyMode::system;
                vf = 2;
                vs = 1;
            } else if (cname == "flag_orbit") {
                ms = flag_orbit_search(F, s).multiset;
                vf = 2;
                vs = s;
            } else if (cname == "all_lines") {
                ms = detail::all_spaces(F, r, h);
                vf = f;
                // every codim-f space holds exactly gbin(r-f,h,q) entries
                vs = static_cast<int>(gbin(r - f, h, q));
            } else {
                err << "unknown construction: " << cname << "\n";
                return 2;
            }
            auto vsum = detail::verify_summary(ms, vf, vmode, vs, false);
            err << cname << " " << (vmode == VerifyMode::blocking ? "blocking" : "system")
                << " f=" << vf << " s=" << vs << " " << vsum.line << "\n";
            detail::write_out(ofile, emit_certificate(ms), out);
            return vsum.rep.verified ? 0 : 1;
        }

        if (*c_ver) {
            SpaceMultiset ms = parse_certificate(detail::slurp(file));
            VerifyMode vmode = mode == "blocking" ? VerifyMode::blocking : VerifyMode::system;
            auto vsum = detail::verify_summary(ms, f, vmode, s, want_mu);
            out << vsum.line << "\n";
            return vsum.rep.verified ? 0 : 1;
        }

        if (*c_bnd) {
            BoundDirection bd = dir == "lower" ? BoundDirection::lower : BoundDirection::upper;
            if (bname == "counting") {
                auto rep = counting_bound(q, r, h, f, s, bd);
                out << rep.value << "\n";
            } else if (bname == "double_count") {
                auto rep = double_count_bound(q, r, f, s, mult_L, bd);
                out << rep.value << "\n";
            } else if (bname == "anticode") {
                out << anticode_bound(q, v, k, delta).value << "\n";
            } else if (bname == "griesmer") {
                out << griesmer(q, k, d) << "\n";
            } else if (bname == "griesmer_decompose") {
                auto g = griesmer_decompose(q, k, d);
                out << "sigma=" << g.sigma << " eps=";
                for (size_t i = 0; i < g.epsilon.size(); ++i)
                    out << (i ? "," : "") << g.epsilon[i];
                out << " n=" << g.equality_length << "\n";
            } else if (bname == "additive_griesmer") {
                out << additive_griesmer(q, h, r, d) << "\n";
            } else if (bname == "ghw_griesmer") {
                out << ghw_griesmer(q, k, f, d) << "\n";
            } else if (bname == "duality") {
                out << duality_transfer(q, mm, bval) << "\n";
            } else {
                err << "unknown bound: " << bname << "\n";
                return 2;
            }
            return 0;
        }

        if (*c_tab) {
            if (q != 2) throw capability_error("table: exact base values are built for q=2 only");
            const Field& F = field_of_order(q);
            std::map<int, BigInt> base;
            base[1] = eisfeld(F, 3).n();
            base[2] = q_fold(F).n();
            base[3] = qp1_fold(F).n();
            base[4] = q2_fold(F).n();
            base[5] = multiset_sum(eisfeld(F, 3), q2_fold(F)).n();
            base[6] = q2q_fold(F).n();
            base[7] = detail::all_spaces(F, 5, 2).n();
            auto tab = extend_periodic_table(q, base, true, max_s);
            for (const auto& [ts, cell] : tab) {
                int s0 = (ts - 1) % 7 + 1;
                const char* src = (s0 == 4 || s0 == 6)   ? "construction+double_count"
                                  : s0 == 7              ? "construction+counting"
                                                         : "construction+ilp";
                out << "s=" << ts << " b=" << cell.b << " [" << src
                    << (ts > 7 ? (cell.workhorse ? "+periodic" : "+periodic(ad-hoc base)") : "")
                    << "]\n";
            }
            return 0;
        }

        if (*c_emit) {
            const Field& F = field_of_order(q);
            std::map<long long, long long> fixings;
            if (!fix_file.empty()) {
                SpaceMultiset fx = parse_certificate(detail::slurp(fix_file));
                const GeometryIndex& gi = shared_index(F, r, h, f);
                for (const auto& [key, c] : fx.mult) fixings[gi.h_index.at(key)] = c;
            }
            if (!fix_zero_file.empty()) {
                SpaceMultiset fx = parse_certificate(detail::slurp(fix_zero_file));
                const GeometryIndex& gi = shared_index(F, r, h, f);
                for (const auto& [key, c] : fx.mult) fixings[gi.h_index.at(key)] = 0;
            }
            IlpProblem pb = problem == "b" ? IlpProblem::blocking_min : IlpProblem::system_max;
            IlpModel model = emit_model(F, r, h, f, s, pb, max_mult, fixings, cardinality);
            detail::write_out(ofile, model.lp_text(), out);
            err << "vars=" << model.nvars << " constraints=" << model.constraints.size() << "\n";
            return 0;
        }

        if (*c_chk) {
            const Field& F = field_of_order(q);
            long long nvars = static_cast<long long>(gbin(r, h, q));
            Solution sol = parse_solution(detail::slurp(file), nvars);
            SpaceMultiset ms = solution_to_multiset(sol, F, r, h);
            VerifyMode vmode = problem == "b" ? VerifyMode::blocking : VerifyMode::system;
            auto vsum = detail::verify_summary(ms, f, vmode, s, false);
            out << "objective=" << sol.objective << " " << vsum.line << "\n";
            return vsum.rep.verified ? 0 : 1;
        }

        if (*c_ghw || *c_mind) {
            SpaceMultiset ms = parse_certificate(detail::slurp(file));
            ExpandedCode code = expand(ms);
            if (*c_ghw)
                out << "d_" << f << "=" << ghw(code, f) << "\n";
            else
                out << "d=" << min_distance(code) << "\n";
            return 0;
        }

        if (*c_flag) {
            const Field& F = field_of_order(q);
            auto fc = classify_flag(F);
            out << "line classes:\n";
            for (size_t i = 0; i < fc.line_classes.size(); ++i) {
                const auto& c = fc.line_classes[i];
                out << " " << i + 1 << ": sig=(" << c.signature[0] << "," << c.signature[1] << ","
                    << c.signature[2] << "," << c.signature[3] << ") size=" << c.members.size()
                    << " table=" << c.tabulated_size << "\n";
            }
            out << "plane classes:\n";
            for (size_t i = 0; i < fc.plane_classes.size(); ++i) {
                const auto& c = fc.plane_classes[i];
                out << " " << i + 1 << ": sig=(" << c.signature[0] << "," << c.signature[1] << ","
                    << c.signature[2] << "," << c.signature[3] << ") size=" << c.members.size()
                    << " table=" << c.tabulated_size << "\n";
            }
            out << "beta:\n";
            for (const auto& row : fc.beta) {
                out << " ";
                for (size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
                out << "\n";
            }
            for (int i : fc.line_size_discrepancies)
                out << "discrepancy: line class " << i + 1 << " enumerates to "
                    << fc.line_classes[i].members.size() << ", reference table says "
                    << fc.line_classes[i].tabulated_size << "\n";
            for (int i : fc.plane_size_discrepancies)
                out << "discrepancy: plane class " << i + 1 << " enumerates to "
                    << fc.plane_classes[i].members.size() << ", reference table says "
                    << fc.plane_classes[i].tabulated_size << "\n";
            return 0;
        }

        err << "no subcommand\n";
        return 2;
    } catch (const capability_error& e) {
        err << "capability: " << e.what() << "\n";
        return 3;
    } catch (const limit_error& e) {
        err << "limit: " << e.what() << "\n";
        return 3;
    } catch (const incomplete_search& e) {
        err << "incomplete search: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace gb::cli
