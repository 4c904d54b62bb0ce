#pragma once

#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "dacs/algebra.hpp"
#include "dacs/coherent.hpp"
#include "dacs/conjugate.hpp"
#include "dacs/report.hpp"
#include "dacs/representation.hpp"

namespace dacs {

// Max-entry norm of (AB - BA - target) over the leading trust x trust block.
inline double commutator_residual(const operator_matrix& a, const operator_matrix& b,
                                  const operator_matrix& target, Eigen::Index trust) {
    if (a.dim() != b.dim()) throw dimension_mismatch(a.dim(), b.dim());
    if (a.dim() != target.dim()) throw dimension_mismatch(a.dim(), target.dim());
    return max_abs_block(commutator(a.mat, b.mat) - target.mat, trust);
}

// Relative eigenvalue residual ||op psi - lambda psi|| / ||psi||, excluding
// the top (trust-boundary) component.
inline double eigen_residual(const cmatrix& op, const cvector& psi, complexd lambda) {
    cvector r = op * psi - lambda * psi;
    return r.head(r.size() - 1).norm() / psi.norm();
}

struct suite_options {
    double tail_ceiling = default_tail_ceiling;
    double bracket_tol = 1e-10;
    double scalar_tol = 1e-10;
    double eigen_tol = 1e-7;
    double norm_tol = 1e-12;
    std::optional<double> epsilon{}; // lie-map constant; default boundary-consistent
};

namespace detail {

inline std::string pnum(int i) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%02d", i);
    return buf;
}

} // namespace detail

// Runs the full residual suite for one (algebra, h0, dim) instance:
// fg-consistency, rep brackets, Casimir constancy, conjugate and dual
// brackets (noncompact only), lie-map brackets for b = +-1, then
// AOCS/dual/Perelomov residuals for each state parameter.  Construction
// failures become failed entries; checks that do not exist in the given
// regime (conjugate on compact reps, non-normalizable dual series) are
// reported as explicit skips.
inline verification_report run_suite(const algebra_spec& spec, double h0, int dim,
                                     const std::vector<complexd>& state_params,
                                     const suite_options& opt = {}) {
    verification_report report;
    const std::string base_ctx = spec.name() + " h0=" + std::to_string(h0);

    // 01: scalar identity f(h) = g(h) - g(h-1)
    {
        verification_report fg = check_fg_consistency(spec, default_probe_grid(), opt.scalar_tol);
        report.add("01_" + fg.entries[0].name, fg.entries[0].residual, fg.entries[0].tolerance,
                   fg.entries[0].context);
    }

    representation rep;
    bool have_rep = false;
    try {
        rep = build_lowest_weight_rep(spec, h0, dim);
        have_rep = true;
        report.add("02_rep_build", 0.0, 0.0,
                   base_ctx + " dim=" + std::to_string(rep.dim) +
                       (rep.compact() ? " finite_exact" : " infinite_truncated"));
    } catch (const error& e) {
        report.add_failure("02_rep_build", base_ctx + " : " + e.what());
    }

    const auto unavailable = [&](const std::string& name) {
        report.add_skip(name, base_ctx + " : unavailable; rep construction failed");
    };

    if (!have_rep) {
        for (const char* name :
             {"03_bracket_h_eplus", "04_bracket_h_eminus", "05_bracket_eplus_eminus",
              "06_casimir_constancy", "07_conjugate_bracket", "08_dual_bracket",
              "09_liemap_bracket_su11", "10_liemap_bracket_su2"})
            unavailable(name);
        report.sort_by_name();
        return report;
    }

    const std::string ctx = base_ctx + " dim=" + std::to_string(rep.dim);
    const Eigen::Index btrust = rep.compact() ? rep.dim : rep.dim - 2;

    report.add("03_bracket_h_eplus",
               commutator_residual(rep.h, rep.eplus, rep.eplus, btrust), opt.bracket_tol, ctx);
    report.add("04_bracket_h_eminus",
               commutator_residual(rep.h, rep.eminus, {-rep.eminus.mat, btrust}, btrust),
               opt.bracket_tol, ctx);
    {
        cmatrix f = cmatrix::Zero(rep.dim, rep.dim);
        for (int n = 0; n < rep.dim; ++n) f(n, n) = structure_f(spec, rep.h0 + n);
        report.add("05_bracket_eplus_eminus",
                   commutator_residual(rep.eplus, rep.eminus, {std::move(f), btrust}, btrust),
                   opt.bracket_tol, ctx);
    }
    {
        const operator_matrix cas = casimir_matrix(rep);
        const cmatrix dev =
            cas.mat - rep.c * cmatrix::Identity(rep.dim, rep.dim);
        report.add("06_casimir_constancy", max_abs_block(dev, cas.trust_rows), opt.bracket_tol,
                   ctx + " c=" + std::to_string(rep.c));
    }

    conjugate_pair pair;
    bool have_pair = false;
    if (rep.compact()) {
        report.add_skip("07_conjugate_bracket", ctx + " : skipped-by-design; compact rep");
        report.add_skip("08_dual_bracket", ctx + " : skipped-by-design; compact rep");
    } else {
        try {
            pair = conjugate_raising(rep);
            have_pair = true;
            const operator_matrix id{cmatrix::Identity(rep.dim, rep.dim), btrust};
            report.add("07_conjugate_bracket",
                       commutator_residual(rep.eminus, pair.etilde_plus, id, btrust),
                       opt.bracket_tol, ctx + " alpha=" + std::to_string(pair.alpha));
            report.add("08_dual_bracket",
                       commutator_residual(dual_conjugate(pair), rep.eplus, id, btrust),
                       opt.bracket_tol, ctx);
        } catch (const error& e) {
            report.add_failure("07_conjugate_bracket", ctx + " : " + e.what());
            report.add_failure("08_dual_bracket", ctx + " : " + e.what());
        }
    }

    for (int b : {1, -1}) {
        const std::string name = b == 1 ? "09_liemap_bracket_su11" : "10_liemap_bracket_su2";
        try {
            const lie_map map = map_to_lie(rep, b, opt.epsilon);
            report.add(name,
                       commutator_residual(rep.eplus, map.ebar_minus,
                                           {-2.0 * b * rep.h.mat, btrust}, btrust),
                       opt.bracket_tol,
                       ctx + " b=" + std::to_string(b) + " eps=" + std::to_string(map.epsilon));
        } catch (const error& e) {
            report.add_failure(name, ctx + " : " + e.what());
        }
    }

    int index = 11;
    for (std::size_t i = 0; i < state_params.size(); ++i) {
        const complexd p = state_params[i];
        const std::string suffix = "_p" + detail::pnum(static_cast<int>(i));
        const std::string pctx = ctx + " param=" + std::to_string(p.real()) + "+" +
                                 std::to_string(p.imag()) + "i";

        const std::string aocs_name = detail::pnum(index++) + "_aocs_eigen" + suffix;
        if (!have_pair) {
            report.add_skip(aocs_name, pctx + " : skipped-by-design; no canonical conjugate");
        } else {
            try {
                const coherent_state st = aocs(pair, p, true, opt.tail_ceiling);
                report.add(aocs_name, eigen_residual(rep.eminus.mat, st.coeffs, p), opt.eigen_tol,
                           pctx + " tail=" + std::to_string(st.tail_mass));
            } catch (const error& e) {
                report.add_failure(aocs_name, pctx + " : " + e.what());
            }
        }

        const std::string dual_name = detail::pnum(index++) + "_dual_eigen" + suffix;
        if (rep.compact()) {
            report.add_skip(dual_name, pctx + " : skipped-by-design; compact rep");
        } else {
            try {
                const coherent_state st = dual_cs(rep, p, true, opt.tail_ceiling);
                report.add(dual_name,
                           eigen_residual(dual_conjugate(pair).mat, st.coeffs, p), opt.eigen_tol,
                           pctx + " tail=" + std::to_string(st.tail_mass));
            } catch (const truncation_error& e) {
                // dual series non-normalizable at this truncation: structural,
                // reported like the compact-rep skips
                report.add_skip(dual_name, pctx + " : " + e.what());
            } catch (const error& e) {
                report.add_failure(dual_name, pctx + " : " + e.what());
            }
        }

        const std::string per_name = detail::pnum(index++) + "_perelomov_norm" + suffix;
        try {
            const coherent_state st = perelomov_cs(rep, p);
            report.add(per_name, std::abs(st.coeffs.norm() - 1.0), opt.norm_tol,
                       pctx + " tail=" + std::to_string(st.tail_mass));
        } catch (const error& e) {
            report.add_failure(per_name, pctx + " : " + e.what());
        }
    }

    report.sort_by_name();
    return report;
}

} // namespace dacs
