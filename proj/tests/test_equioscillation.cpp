#include <cmath>
#include <vector>

#include "doctest.h"
#include "wlil/equioscillation.hpp"

using namespace wlil;

static WeightFamily expw() { return WeightFamily::exponential(); }

TEST_CASE("level-the-maxima solver lands on the known optima") {
    struct Known {
        int n;
        std::vector<double> x;  // full node vector
        double level;
    };
    std::vector<Known> known = {
        {1, {0.0, 1.0075467086623064}, 1.2666234534112593},
        {2, {0.0, 0.67951005483922111, 2.3109456949528697}, 1.4523120075104741},
        {3,
         {0.0, 0.52320911760613953, 1.6721773907319482, 3.763583792697299},
         1.597483473012923},
    };
    for (const auto& k : known) {
        auto rep = solve_equioscillation(expw(), k.n);
        REQUIRE(rep.converged);
        CHECK(rep.residual <= 1e-10);
        REQUIRE(rep.x.size() == k.x.size());
        for (std::size_t i = 0; i < k.x.size(); ++i)
            CHECK(rep.x[i] == doctest::Approx(k.x[i]).epsilon(1e-8));
        CHECK(rep.level == doctest::Approx(k.level).epsilon(1e-8));
        CHECK(rep.jac_det != 0.0);

        // the objective really is leveled there
        NodeSystem xs = make_system(SystemKind::Hybrid, rep.x);
        auto g = gamma_value(expw(), xs);
        REQUIRE(static_cast<int>(g.size()) == k.n);
        for (double gi : g) CHECK(std::abs(gi) <= 1e-10);
    }
}

TEST_CASE("solver answer does not depend on the start") {
    int n = 2;
    auto base = solve_equioscillation(expw(), n);
    REQUIRE(base.converged);
    for (int s = 0; s < 3; ++s) {
        NodeSystem xs = sample_system(n, trial_seed(11, s));
        std::vector<double> start(xs.x.begin() + 1, xs.x.end());
        auto rep = solve_equioscillation(expw(), n, &start);
        REQUIRE(rep.converged);
        for (std::size_t i = 0; i < rep.x.size(); ++i)
            CHECK(rep.x[i] == doctest::Approx(base.x[i]).epsilon(1e-8));
    }
}

TEST_CASE("derivative-free oracle corroborates the solver at n = 1") {
    std::vector<double> nodes;
    double val = minimax_oracle(expw(), 1, 42, &nodes);
    REQUIRE(nodes.size() == 1);
    CHECK(val == doctest::Approx(1.2666234534112593).epsilon(1e-6));
    CHECK(nodes[0] == doctest::Approx(1.0075467086623064).epsilon(1e-6));
}

TEST_CASE("random systems are reproducible and respect the gap floor") {
    NodeSystem a = sample_system(3, 1234);
    NodeSystem b = sample_system(3, 1234);
    CHECK(a.x == b.x);  // bitwise
    NodeSystem c = sample_system(3, 1235);
    CHECK(a.x != c.x);

    CHECK(a.x[0] == 0.0);
    for (std::size_t i = 1; i < a.x.size(); ++i) {
        CHECK(a.x[i] - a.x[i - 1] >= 1e-3);
        CHECK(a.x[i] <= 12.0);
    }
}

TEST_CASE("sandwich and intertwining hold on random batches") {
    auto sw = sandwich_check(expw(), 2, 50, 42);
    CHECK(sw.ok());
    CHECK(sw.trials == 50);
    auto iw = intertwining_check(expw(), 2, 50, 42);
    CHECK(iw.ok());

    // threading only reorders the work, not the outcome
    auto sw4 = sandwich_check(expw(), 2, 50, 42, 4);
    CHECK(sw4.passes == sw.passes);
    CHECK(sw4.failures == sw.failures);
    CHECK(sw4.failure_notes == sw.failure_notes);
    auto iw4 = intertwining_check(expw(), 2, 50, 42, 4);
    CHECK(iw4.passes == iw.passes);
    CHECK(iw4.failure_notes == iw.failure_notes);
}

TEST_CASE("nearby targets are reachable from scattered starts") {
    std::vector<std::vector<double>> targets = {
        {0.0, 0.0}, {0.1, 0.0}, {0.0, -0.1}};
    auto probes = gamma_surjectivity_probe(expw(), 2, targets, 3, 42);
    REQUIRE(probes.size() == 3);
    for (const auto& p : probes) {
        CHECK(p.solved);
        CHECK(p.residual <= 1e-10);
        CHECK(p.scatter < 1e-8);
        REQUIRE(p.x.size() == 2);
    }
}

TEST_CASE("the map blows up along the shrinking-gap path") {
    auto path = properness_probe(expw(), 20);
    REQUIRE(path.size() == 20);
    for (const auto& pt : path) CHECK(pt.gap == std::ldexp(1.0, -pt.p));
    bool crossed = false;
    for (const auto& pt : path)
        if (pt.gamma_norm > 1e3) crossed = true;
    CHECK(crossed);
    CHECK(path.back().gamma_norm > 1e3);
}

TEST_CASE("solver input validation") {
    CHECK_THROWS_AS(solve_gamma(expw(), 0, {}), error);
    CHECK_THROWS_AS(solve_gamma(expw(), 2, {0.0}), error);
    std::vector<double> bad_start = {1.0};
    CHECK_THROWS_AS(solve_gamma(expw(), 2, {0.0, 0.0}, &bad_start), error);
}
