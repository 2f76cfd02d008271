#include <cmath>
#include <vector>

#include "doctest.h"
#include "wlil/markov.hpp"

using namespace wlil;

TEST_CASE("branches expand to explicit hybrid polynomials") {
    NodeSystem xs = make_system(SystemKind::Hybrid, {0.0, 1.0});
    WeightFamily w = WeightFamily::exponential();

    HybridPoly p2 = branch_as_hybrid_poly(xs, 2);
    REQUIRE(p2.p.size() == 2);
    CHECK(p2.p[0] == doctest::Approx(-2.0).epsilon(1e-13));
    CHECK(p2.p[1] == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(p2.c == doctest::Approx(1.0));

    HybridPoly p1 = branch_as_hybrid_poly(xs, 1);
    REQUIRE(p1.p.size() == 2);
    CHECK(p1.p[0] == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(p1.p[1] == doctest::Approx(2.0 * std::exp(1.0) - 2.0).epsilon(1e-13));
    CHECK(p1.c == doctest::Approx(-1.0));

    for (int i : {1, 2})
        for (double t : {0.0, 0.3, 1.1, 2.7, 5.0}) {
            HybridPoly h = branch_as_hybrid_poly(xs, i);
            CHECK(h.eval(t) ==
                  doctest::Approx(eval_branch(w, xs, i, t)).epsilon(1e-13));
        }

    HybridPoly n1 = normalized_branch(xs, 1);
    CHECK(n1.c == doctest::Approx(1.0));
    CHECK(n1.p[0] == doctest::Approx(-2.0).epsilon(1e-13));
    CHECK(n1.p[1] == doctest::Approx(2.0 - 2.0 * std::exp(1.0)).epsilon(1e-13));

    NodeSystem pure = make_system(SystemKind::YnHalfline, {0.0, 1.0});
    CHECK_THROWS_AS(branch_as_hybrid_poly(pure, 1), error);
    CHECK_THROWS_AS(branch_as_hybrid_poly(xs, 0), error);
    CHECK_THROWS_AS(branch_as_hybrid_poly(xs, 3), error);
}

TEST_CASE("pair plans cover the case table") {
    CHECK(plan_branch_pair(1, 2, 2, false).case_label == 1);
    CHECK(plan_branch_pair(1, 2, 2, false).swap);
    CHECK(plan_branch_pair(1, 2, 2, true).case_label == 2);
    CHECK_FALSE(plan_branch_pair(1, 2, 2, true).swap);
    CHECK(plan_branch_pair(1, 3, 2, false).case_label == 3);
    CHECK(plan_branch_pair(1, 3, 2, true).case_label == 3);
    CHECK(plan_branch_pair(2, 3, 2, true).case_label == 4);
    CHECK(plan_branch_pair(2, 3, 2, true).swap);
    CHECK(plan_branch_pair(2, 3, 2, false).case_label == 3);
    CHECK(plan_branch_pair(3, 4, 2, false).case_label == 5);
    CHECK(plan_branch_pair(3, 4, 2, true).case_label == 5);
    CHECK_THROWS_AS(plan_branch_pair(2, 2, 2, false), error);
    CHECK_THROWS_AS(plan_branch_pair(3, 1, 2, false), error);
}

TEST_CASE("the known pair whose derivative roots refuse to interlace") {
    HybridPoly f{{10.0, -10.0}, 1.0};
    HybridPoly g{{400.0, -300.0, 50.0}, 1.0};
    auto mv = verify_markov_pair(f, g);

    REQUIRE(mv.u.size() == 2);
    REQUIRE(mv.v.size() == 2);
    CHECK(mv.u[0] == doctest::Approx(1.4093151075636654).epsilon(1e-9));
    CHECK(mv.u[1] == doctest::Approx(2.9914462029240516).epsilon(1e-9));
    CHECK(mv.v[0] == doctest::Approx(2.0838725733341201).epsilon(1e-9));
    CHECK(mv.v[1] == doctest::Approx(3.5506864321568594).epsilon(1e-9));
    CHECK(mv.zeros_interlace);

    REQUIRE(mv.xi.size() == 1);
    REQUIRE(mv.eta.size() == 2);
    CHECK(mv.xi[0] == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(mv.eta[0] == doctest::Approx(4.0 - std::sqrt(2.0)).epsilon(1e-9));
    CHECK(mv.eta[1] == doctest::Approx(4.0 + std::sqrt(2.0)).epsilon(1e-9));

    // both derivative roots of g sit to the right of the single root of f':
    // inheritance fails and no case of the taxonomy applies
    CHECK_FALSE(mv.derivatives_inherit);
    CHECK(mv.case_label == 0);
    CHECK_FALSE(mv.degenerate);
}

TEST_CASE("adjacent branch pairs of genuine systems do inherit") {
    // two-node system, pair (1,2): both leading coefficients live, case 3
    {
        NodeSystem xs = make_system(SystemKind::Hybrid, {0.0, 1.0});
        auto cr = leading_a(xs);
        auto plan = plan_branch_pair(1, 2, cr.r, cr.a_r_zero);
        CHECK(plan.case_label == 3);
        CHECK_FALSE(plan.swap);
        HybridPoly f = normalized_branch(xs, 1);
        HybridPoly g = normalized_branch(xs, 2);
        auto mv = verify_markov_pair(f, g);
        CHECK(mv.zeros_interlace);
        CHECK(mv.derivatives_inherit);
        CHECK(mv.case_label == 3);
        CHECK(mv.phi_sign_constant);
    }
    // four-node system, pair (1,2) with r=3: swapped order, case 1
    {
        NodeSystem xs = make_system(SystemKind::Hybrid, {0.0, 1.0, 2.5, 4.0});
        auto cr = leading_a(xs);
        auto plan = plan_branch_pair(1, 2, cr.r, cr.a_r_zero);
        CHECK(plan.case_label == 1);
        CHECK(plan.swap);
        HybridPoly f = normalized_branch(xs, 2);
        HybridPoly g = normalized_branch(xs, 1);
        auto mv = verify_markov_pair(f, g);
        CHECK(mv.zeros_interlace);
        CHECK(mv.derivatives_inherit);
        CHECK(mv.case_label == 1);
    }
    // degenerate-leading-coefficient system, pair (1,2): case 2
    {
        NodeSystem xs =
            make_system(SystemKind::Hybrid, {0.0, 0.5, 1.7564312086261697});
        auto cr = leading_a(xs);
        REQUIRE(cr.a_r_zero);
        auto plan = plan_branch_pair(1, 2, cr.r, cr.a_r_zero);
        CHECK(plan.case_label == 2);
        CHECK_FALSE(plan.swap);
        HybridPoly f = normalized_branch(xs, 1);
        HybridPoly g = normalized_branch(xs, 2);
        auto mv = verify_markov_pair(f, g);
        CHECK(mv.zeros_interlace);
        CHECK(mv.derivatives_inherit);
        CHECK(mv.case_label == 2);
    }
}

TEST_CASE("root count against the product of leading and constant signs") {
    // degree 1, two roots: needs sign(a c) < 0
    auto s1 = coeff_sign_law(HybridPoly{{10.0, -10.0}, 1.0});
    CHECK(s1.degree == 1);
    CHECK(s1.root_count == 2);
    CHECK(s1.sign_ac == -1);
    CHECK(s1.law_holds);
    CHECK_FALSE(s1.inconsistent);

    // degree 2, two roots: needs sign(a c) >= 0
    auto s2 = coeff_sign_law(HybridPoly{{400.0, -300.0, 50.0}, 1.0});
    CHECK(s2.degree == 2);
    CHECK(s2.root_count == 2);
    CHECK(s2.sign_ac == 1);
    CHECK(s2.law_holds);

    // pure polynomial (c = 0): sign product is zero, full count allowed
    auto s3 = coeff_sign_law(HybridPoly{{-1.0, 0.0, 1.0}, 0.0});
    CHECK(s3.degree == 2);
    CHECK(s3.root_count == 2);
    CHECK(s3.sign_ac == 0);
    CHECK(s3.law_holds);

    CHECK_THROWS_AS(coeff_sign_law(HybridPoly{{}, 1.0}), error);
    CHECK_THROWS_AS(coeff_sign_law(HybridPoly{{1.0, 0.0}, 1.0}), error);
}
