#include <cmath>

#include "doctest.h"
#include "wlil/basis.hpp"
#include "wlil/rootfind.hpp"

using namespace wlil;

TEST_CASE("weight values and domains") {
    WeightFamily e = WeightFamily::exponential();
    WeightFamily h = WeightFamily::hermite();
    WeightFamily s = WeightFamily::sqrt_exponential();
    WeightFamily u = WeightFamily::unit(-1.0, 1.0);

    CHECK(eval_weight(e, 1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
    CHECK(eval_weight(h, 1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
    CHECK(eval_weight(s, 4.0) == doctest::Approx(std::exp(-2.0)).epsilon(1e-15));
    CHECK(eval_weight(u, 0.3) == 1.0);

    CHECK_THROWS_AS(eval_weight(e, -0.5), error);
    CHECK_THROWS_AS(eval_weight(u, 2.0), error);
    CHECK(eval_weight_extended(e, -0.5) ==
          doctest::Approx(std::exp(0.5)).epsilon(1e-15));
    CHECK(eval_weight_extended(h, -3.0) ==
          doctest::Approx(std::exp(-9.0)).epsilon(1e-15));
    CHECK_THROWS_AS(eval_weight_extended(s, -1.0), error);
}

TEST_CASE("log derivatives match closed forms and finite differences") {
    WeightFamily e = WeightFamily::exponential();
    WeightFamily h = WeightFamily::hermite();
    WeightFamily s = WeightFamily::sqrt_exponential();
    WeightFamily u = WeightFamily::unit(0.0, 1.0);

    CHECK(eval_log_derivative(e, 2.0) == -1.0);
    CHECK(eval_log_second(e, 2.0) == 1.0);
    CHECK(eval_log_derivative(h, 0.7) == doctest::Approx(-1.4).epsilon(1e-15));
    CHECK(eval_log_second(h, 0.7) ==
          doctest::Approx(4.0 * 0.49 - 2.0).epsilon(1e-14));
    CHECK(eval_log_derivative(s, 4.0) == doctest::Approx(-0.25).epsilon(1e-15));
    CHECK(eval_log_second(s, 4.0) ==
          doctest::Approx(1.0 / 16.0 + 1.0 / 32.0).epsilon(1e-14));
    CHECK(eval_log_derivative(u, 0.5) == 0.0);
    CHECK(eval_log_second(u, 0.5) == 0.0);

    for (WeightFamily w : {e, h, s}) {
        double t = 1.7;
        Fn lw = [&](double x) { return std::log(eval_weight(w, x)); };
        double fd = central_derivative(lw, t, 0.1);
        CHECK(eval_log_derivative(w, t) == doctest::Approx(fd).epsilon(1e-9));
    }
}

TEST_CASE("lagrange basis is an exact cardinal basis at the nodes") {
    NodeSystem xs = make_system(SystemKind::Hybrid, {0.0, 1.0, 2.5, 4.0});
    for (int k = 0; k <= xs.n(); ++k)
        for (int m = 0; m <= xs.n(); ++m)
            CHECK(eval_ell(xs, k, xs.x[m]) == (k == m ? 1.0 : 0.0));
}

TEST_CASE("lagrange derivative formulas agree with finite differences") {
    NodeSystem xs = make_system(SystemKind::Hybrid, {0.0, 1.0, 2.5, 4.0});
    for (int k = 0; k <= xs.n(); ++k) {
        for (double t : {0.3, 1.9, 3.4}) {
            Fn f = [&](double x) { return eval_ell(xs, k, x); };
            Fn g = [&](double x) { return eval_ell_deriv(xs, k, x); };
            CHECK(eval_ell_deriv(xs, k, t) ==
                  doctest::Approx(central_derivative(f, t, 0.2)).epsilon(1e-9));
            CHECK(eval_ell_deriv2(xs, k, t) ==
                  doctest::Approx(central_derivative(g, t, 0.2)).epsilon(1e-9));
        }
    }
}

TEST_CASE("leading coefficients of the cardinal polynomials") {
    NodeSystem xs = make_system(SystemKind::YnHalfline, {0.0, 1.0, 4.0});
    std::vector<double> b = leading_b(xs);
    REQUIRE(b.size() == 3);
    CHECK(b[0] == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(b[1] == doctest::Approx(-1.0 / 3.0).epsilon(1e-15));
    CHECK(b[2] == doctest::Approx(1.0 / 12.0).epsilon(1e-15));
}

TEST_CASE("weighted fundamental functions hit exact node values") {
    WeightFamily w = WeightFamily::exponential();
    NodeSystem xs = make_system(SystemKind::YnHalfline, {0.0, 1.0, 4.0});
    for (int k = 0; k <= xs.n(); ++k)
        for (int m = 0; m <= xs.n(); ++m)
            CHECK(eval_h(w, xs, k, xs.x[m]) == (k == m ? 1.0 : 0.0));

    // frozen value for the sqrt weight on nodes (0, 1)
    WeightFamily s = WeightFamily::sqrt_exponential();
    NodeSystem x01 = make_system(SystemKind::YnHalfline, {0.0, 1.0});
    CHECK(eval_h(s, x01, 0, 0.25) ==
          doctest::Approx(0.45489799478447507).epsilon(1e-14));
}

TEST_CASE("fundamental function derivatives agree with finite differences") {
    WeightFamily w = WeightFamily::exponential();
    NodeSystem xs = make_system(SystemKind::Hybrid, {0.0, 1.0, 2.5, 4.0});
    for (int k = 0; k <= xs.n(); ++k) {
        for (double t : {0.4, 2.0, 3.2, 5.0}) {
            Fn f = [&](double x) { return eval_h(w, xs, k, x); };
            Fn g = [&](double x) { return eval_h_deriv(w, xs, k, x); };
            CHECK(eval_h_deriv(w, xs, k, t) ==
                  doctest::Approx(central_derivative(f, t, 0.2)).epsilon(1e-8));
            CHECK(eval_h_deriv2(w, xs, k, t) ==
                  doctest::Approx(central_derivative(g, t, 0.2)).epsilon(1e-7));
        }
    }
}

TEST_CASE("hybrid tail complements the fundamental functions") {
    WeightFamily w = WeightFamily::exponential();
    NodeSystem xs = make_system(SystemKind::Hybrid, {0.0, 1.0, 2.5, 4.0});
    for (int m = 0; m <= xs.n(); ++m)
        CHECK(eval_h_hybrid_tail(w, xs, xs.x[m]) == 0.0);
    CHECK(std::abs(eval_h_hybrid_tail(w, xs, 40.0) - 1.0) < 1e-12);

    for (double t : {0.4, 3.2}) {
        double sum = eval_h_hybrid_tail(w, xs, t);
        for (int k = 0; k <= xs.n(); ++k) sum += eval_h(w, xs, k, t);
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-14));
        Fn f = [&](double x) { return eval_h_hybrid_tail(w, xs, x); };
        CHECK(eval_h_hybrid_tail_deriv(w, xs, t) ==
              doctest::Approx(central_derivative(f, t, 0.2)).epsilon(1e-8));
    }

    NodeSystem plain = make_system(SystemKind::YnHalfline, {0.0, 1.0, 4.0});
    CHECK_THROWS_AS(eval_h_hybrid_tail(w, plain, 0.5), error);
}

TEST_CASE("node systems validate their input") {
    CHECK_THROWS_AS(make_system(SystemKind::Hybrid, {0.0}), error);
    CHECK_THROWS_AS(make_system(SystemKind::Hybrid, {0.0, 1.0, 1.0}), error);
    CHECK_THROWS_AS(make_system(SystemKind::Hybrid, {0.5, 1.0}), error);
    CHECK_THROWS_AS(make_system(SystemKind::YnHalfline, {1.0, 2.0}), error);
    CHECK_NOTHROW(make_system(SystemKind::HermiteLine, {-2.0, 0.0, 2.0}));

    NodeSystem xs = make_system(SystemKind::Hybrid, {0.0, 1.0, 4.0});
    CHECK(first_interval(xs) == 1);
    CHECK(last_interval(xs) == 3);
    CHECK(interval_of(xs, 0.5) == 1);
    CHECK(interval_of(xs, 10.0) == 3);
    Interval tail = interval_bounds(xs, 3);
    CHECK(tail.lo == 4.0);
    CHECK(!tail.bounded());

    NodeSystem hm = make_system(SystemKind::HermiteLine, {-2.0, 0.0, 2.0});
    CHECK(first_interval(hm) == 0);
    CHECK(interval_of(hm, -5.0) == 0);
}
