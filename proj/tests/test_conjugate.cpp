#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "dacs/conjugate.hpp"
#include "dacs/representation.hpp"

using namespace dacs;

namespace {

const std::vector<std::pair<algebra_spec, double>> noncompact_grid = {
    {algebra_spec::su11(), 0.25},
    {algebra_spec::su11(), 0.75},
    {algebra_spec::quadratic(-1.0), 2.5},
    {algebra_spec::higgs(-1.0, -0.05), 1.0},
    {algebra_spec::q_deformed(1.2), -33.25},
};

} // namespace

TEST_CASE("alpha is fixed by the vacuum condition") {
    CHECK(solve_alpha(algebra_spec::su11(), 0.25) == 0.75);
    CHECK(solve_alpha(algebra_spec::su11(), 0.75) == 0.25);
    CHECK(solve_alpha(algebra_spec::higgs(-1.0, 0.0), 1.0) == 0.0);
}

TEST_CASE("conjugate raising operator of the su(1,1) vacuum sector") {
    const representation rep = build_lowest_weight_rep(algebra_spec::su11(), 0.25, 16);
    const conjugate_pair pair = conjugate_raising(rep);
    CHECK(pair.alpha == 0.75);
    // <1|Etilde+|0> = 1/sqrt(1/2) = sqrt(2)
    CHECK(pair.etilde_plus.mat(1, 0).real() == Catch::Approx(std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("conjugate raising entries are (n+1)/sqrt(c - g(h0+n))") {
    const algebra_spec spec = algebra_spec::higgs(-1.0, -0.05);
    const representation rep = build_lowest_weight_rep(spec, 1.0, 16);
    const conjugate_pair pair = conjugate_raising(rep);
    for (int n = 0; n < rep.dim - 1; ++n) {
        const double expected = (n + 1.0) / std::sqrt(rep.c - structure_g(spec, 1.0 + n));
        CHECK(pair.etilde_plus.mat(n + 1, n).real() == Catch::Approx(expected).epsilon(1e-13));
    }
    // strictly lower-bidiagonal: raises by exactly one
    cmatrix off = pair.etilde_plus.mat;
    for (int n = 0; n < rep.dim - 1; ++n) off(n + 1, n) = 0.0;
    CHECK(max_abs(off) == 0.0);
}

TEST_CASE("[E-, Etilde+] = 1 on trusted rows across the grid") {
    for (const auto& [spec, h0] : noncompact_grid) {
        INFO(spec.name() << " h0=" << h0);
        const representation rep = build_lowest_weight_rep(spec, h0, 64);
        const conjugate_pair pair = conjugate_raising(rep);
        const Eigen::Index t = rep.dim - 2;
        const cmatrix dev = commutator(rep.eminus.mat, pair.etilde_plus.mat) -
                            cmatrix::Identity(rep.dim, rep.dim);
        CHECK(max_abs_block(dev, t) <= 1e-10);
    }
}

TEST_CASE("dual conjugate satisfies [Etilde+^dag, E+] = 1 and lowers by one") {
    for (const auto& [spec, h0] : noncompact_grid) {
        const representation rep = build_lowest_weight_rep(spec, h0, 32);
        const conjugate_pair pair = conjugate_raising(rep);
        const operator_matrix dual = dual_conjugate(pair);

        const cmatrix dev =
            commutator(dual.mat, rep.eplus.mat) - cmatrix::Identity(rep.dim, rep.dim);
        CHECK(max_abs_block(dev, rep.dim - 2) <= 1e-10);

        cmatrix off = dual.mat;
        for (int n = 0; n < rep.dim - 1; ++n) off(n, n + 1) = 0.0;
        CHECK(max_abs(off) == 0.0);
    }
}

TEST_CASE("conjugate refuses compact representations") {
    const representation fin = build_lowest_weight_rep(algebra_spec::quadratic(0.0), -2.0, 16);
    REQUIRE(fin.kind == rep_kind::finite_exact);
    CHECK_THROWS_AS(conjugate_raising(fin), compact_rep_error);
}

TEST_CASE("telescoping scalar identity F(c,h)(c-g(h)) - F(c,h-1)(c-g(h-1)) = 1") {
    for (const auto& [spec, h0] : noncompact_grid) {
        const double c = casimir_lowest_weight(spec, h0);
        const double alpha = solve_alpha(spec, h0);
        const auto fw = [&](double h) {
            const double w = c - structure_g(spec, h);
            return (h + alpha) / w * w;
        };
        for (double h : default_probe_grid()) {
            if (std::abs(c - structure_g(spec, h)) < 1e-6) continue;
            if (std::abs(c - structure_g(spec, h - 1.0)) < 1e-6) continue;
            INFO(spec.name() << " h=" << h);
            CHECK(std::abs(fw(h) - fw(h - 1.0) - 1.0) <= 1e-10);
        }
    }
}

TEST_CASE("lie map bracket [E+, Ebar-] = -2bH for any epsilon") {
    for (const auto& [spec, h0] : noncompact_grid) {
        const representation rep = build_lowest_weight_rep(spec, h0, 48);
        for (int b : {1, -1})
            for (double eps : {0.0, 1.7, -0.4}) {
                INFO(spec.name() << " b=" << b << " eps=" << eps);
                const lie_map map = map_to_lie(rep, b, eps);
                const cmatrix dev =
                    commutator(rep.eplus.mat, map.ebar_minus.mat) + 2.0 * b * rep.h.mat;
                CHECK(max_abs_block(dev, rep.dim - 2) <= 1e-10);
            }
    }
}

TEST_CASE("lie map on a compact rep holds on all rows") {
    const representation fin = build_lowest_weight_rep(algebra_spec::higgs(1.0, 0.1), -4.0, 16);
    REQUIRE(fin.kind == rep_kind::finite_exact);
    const lie_map map = map_to_lie(fin, -1, 0.0);
    // d = -1: [M+, Mbar-] = +2 M0, exact in finite dimension
    const cmatrix dev = commutator(fin.eplus.mat, map.ebar_minus.mat) - 2.0 * fin.h.mat;
    CHECK(max_abs(dev) <= 1e-12);
}

TEST_CASE("epsilon = c makes the undeformed su(1,1) map the identity") {
    const representation rep = build_lowest_weight_rep(algebra_spec::su11(), 0.25, 32);
    const lie_map map = map_to_lie(rep, 1, rep.c);
    CHECK(max_abs(map.ebar_minus.mat - rep.eminus.mat) <= 1e-12);
}

TEST_CASE("degenerate denominators are refused") {
    representation rep = build_lowest_weight_rep(algebra_spec::su11(), 0.25, 16);
    // force c - g(h0 + 3 - 1) = 0: the denominator of G at level 3
    rep.c = structure_g(rep.spec, rep.h0 + 2.0);
    CHECK_THROWS_AS(map_to_lie(rep, 1, 0.0), degenerate_denominator);
    CHECK_THROWS_AS(map_to_lie(rep, 2, 0.0), std::invalid_argument);
}
