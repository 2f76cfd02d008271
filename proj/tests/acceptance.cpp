// Turnkey acceptance gate: each numbered criterion runs standalone and prints
// exactly one line "criterion N: PASS/FAIL (T s)" with the failing sub-checks
// joined after a dash. Exit 0 on pass, 1 on fail, 2 on usage error. Wall-time
// budgets are part of the pass condition.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include "wlil/counterexamples.hpp"
#include "wlil/equioscillation.hpp"
#include "wlil/interlacing.hpp"
#include "wlil/jacobian.hpp"
#include "wlil/markov.hpp"

using namespace wlil;

namespace {

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct Checker {
    std::vector<std::string> fails;
    void check(bool ok, const std::string& what) {
        if (!ok) fails.push_back(what);
    }
};

// 1. Outer-slope demonstration on the pure halfline system (0, 1, 4): the
// computed tail slope disagrees with the pinned reference constant; the
// diagnostics show the computed value is the correct one.
void crit1(Checker& c) {
    WeightFamily w = WeightFamily::exponential();
    NodeSystem xs = make_system(SystemKind::YnHalfline, {0.0, 1.0, 4.0});

    double slope = eval_branch_deriv(w, xs, 3, 4.0);
    const double pinned = -0.3531, tol = 5e-4;
    if (std::abs(slope - pinned) > tol) {
        Fn branch3 = [&](double t) { return eval_branch(w, xs, 3, t); };
        double fd = central_derivative(branch3, 4.0, 0.5);
        double series_as_pinned =
            -1.0 + 0.75 * std::exp(-4.0) + std::exp(-3.0) + 0.25 + 1.0 / 3.0;
        double series_reweighted =
            series_as_pinned + (4.0 / 3.0 - 1.0) * std::exp(-3.0);
        c.check(false,
                "tail slope at t=4: computed " + num(slope) + " vs pinned " +
                    num(pinned) + " (tol 5e-4); an independent extrapolated "
                    "difference gives " + num(fd) + " (agrees with computed to " +
                    num(std::abs(fd - slope)) + "); the pinned constant equals "
                    "the closed-form sum " + num(series_as_pinned) +
                    " with unit weight on its e^-3 term, and reweighting that "
                    "term by 4/3 yields " + num(series_reweighted) +
                    ", exactly the computed slope");
    }

    auto m3 = interval_maximum(w, xs, 3);
    c.check(m3.m == 1.0 && m3.location == MaxLocation::LeftEndpoint,
            "tail maximum not pinned at the endpoint with value 1");
    double sup = 0.0;
    for (int j = 1; j <= 2; ++j)
        sup = std::max(sup, std::abs(fd_partial_m(w, xs, 3, j, 1e-6)));
    c.check(sup < 1e-8, "FD gradient of the tail maximum is " + num(sup) +
                            ", expected < 1e-8");
    auto b = build_bundle(w, xs);
    c.check(b.singular_a[0], "minor without row 1 should be singular");
    c.check(b.singular_a[1], "minor without row 2 should be singular");
    c.check(!b.singular_a[2], "minor without row 3 should be regular");
}

// 2. Square-root weight pair (0, 1): stationary points of the first branch and
// the flat top of its interval.
void crit2(Checker& c) {
    WeightFamily w = WeightFamily::sqrt_exponential();
    NodeSystem xs = make_system(SystemKind::YnHalfline, {0.0, 1.0});
    Fn d = [&](double t) { return eval_branch_deriv(w, xs, 1, t); };
    Fn d2 = [&](double t) { return eval_branch_deriv2(w, xs, 1, t); };

    double t1 = bisect_polished(d, d2, 1e-4, 0.5, 1e-13);
    double t2 = bisect_polished(d, d2, 1.1, 10.0, 1e-13);
    c.check(std::abs(t1 - 0.12493) <= 1e-4,
            "inner stationary point " + num(t1) + " not within 1e-4 of 0.12493");
    c.check(std::abs(t2 - 2.71112) <= 1e-4,
            "outer stationary point " + num(t2) + " not within 1e-4 of 2.71112");
    c.check(std::abs(eval_branch(w, xs, 1, 0.0) - 1.0) <= 1e-12,
            "branch value at node 0 is not 1");
    c.check(std::abs(eval_branch(w, xs, 1, 1.0) - 1.0) <= 1e-12,
            "branch value at node 1 is not 1");
    auto m1 = interval_maximum(w, xs, 1);
    c.check(m1.location != MaxLocation::Interior && std::abs(m1.m - 1.0) <= 1e-12,
            "maximum on [0,1] should sit at the ends with value 1");
}

// 3. Symmetric whole-line system: solve for the node scale, then the center
// branch coincides with its mirror image and every gradient row vanishes.
void crit3(Checker& c) {
    Fn g = [](double u) { return std::exp(u) - 4.0 * u + 1.0; };
    double B = bisect(g, 1.25, 50.0, 1e-13);
    double resid = std::abs(std::exp(-B) * (4.0 * B - 1.0) - 1.0);
    c.check(resid < 1e-12, "node-scale residual " + num(resid));

    double b = std::sqrt(B);
    WeightFamily w = WeightFamily::hermite();
    NodeSystem xs = make_system(SystemKind::HermiteLine, {-b, 0.0, b});
    c.check(std::abs(eval_branch(w, xs, 3, -b) - 1.0) <= 1e-10 &&
                std::abs(eval_branch(w, xs, 3, 0.0) + 1.0) <= 1e-10 &&
                std::abs(eval_branch(w, xs, 3, b) - 1.0) <= 1e-10,
            "outer branch node values are not (1, -1, 1)");

    for (int i : {0, 3}) {
        double sup = 0.0;
        for (int j = 0; j <= 2; ++j)
            sup = std::max(sup, std::abs(fd_partial_m(w, xs, i, j, 1e-6)));
        c.check(sup < 1e-8, "FD gradient of tail maximum " + std::to_string(i) +
                                " is " + num(sup));
    }
    auto bundle = build_bundle(w, xs);
    for (std::size_t k = 0; k < bundle.singular_a.size(); ++k)
        c.check(bundle.singular_a[k],
                "minor " + std::to_string(k) + " should be singular");
    c.check(bundle.singular_a.size() == 4, "expected four row minors");
}

// 4. Interlacing pair whose derivative roots land in the wrong order.
void crit4(Checker& c) {
    HybridPoly f{{10.0, -10.0}, 1.0};
    HybridPoly g{{400.0, -300.0, 50.0}, 1.0};
    auto mv = verify_markov_pair(f, g);
    bool sizes = mv.u.size() == 2 && mv.v.size() == 2 && mv.xi.size() == 1 &&
                 mv.eta.size() == 2;
    c.check(sizes, "unexpected root counts");
    if (!sizes) return;
    c.check(mv.u[0] < mv.v[0] && mv.v[0] < mv.u[1] && mv.u[1] < mv.v[1],
            "zeros fail to alternate");
    c.check(std::abs(mv.xi[0] - 2.0) <= 1e-9,
            "derivative zero of f is " + num(mv.xi[0]) + ", expected 2");
    c.check(std::abs(mv.eta[0] - (4.0 - std::sqrt(2.0))) <= 1e-9 &&
                std::abs(mv.eta[1] - (4.0 + std::sqrt(2.0))) <= 1e-9,
            "derivative zeros of g are off the closed forms 4 -+ sqrt(2)");
    c.check(mv.xi[0] < mv.eta[0] && mv.eta[0] < mv.eta[1],
            "expected both derivative zeros of g to the right of f's");
    c.check(!mv.derivatives_inherit,
            "inheritance verdict should be negative for this pair");
}

// 5. Randomized structure battery: sign tables, root orderings, window counts,
// quotient-function properties and minor regularity on 200 systems.
void crit5(Checker& c) {
    WeightFamily w = WeightFamily::exponential();
    int bad = 0;
    std::string first;
    for (int t = 0; t < 200; ++t) {
        int n = 2 + t % 5;
        NodeSystem xs = sample_system(n, trial_seed(42, t));
        std::string why;

        bool signs = true;
        for (int i = 1; i <= n + 1 && signs; ++i)
            for (int k = 0; k <= n; ++k)
                if (eval_branch(w, xs, i, xs.x[k]) != sign_eps(k, i)) {
                    signs = false;
                    break;
                }
        if (!signs) why = "sign table";

        if (why.empty()) {
            auto rt = branch_roots(w, xs);
            if (!verify_ordering(xs, rt).ok) why = "total ordering";
            else if (!verify_pairwise(xs, rt).ok) why = "pairwise ordering";
            else {
                auto mx = all_maxima(w, xs);
                auto dt = deriv_roots(w, xs, rt, mx);
                if (!verify_w_order(dt).ok) why = "derivative-root order";
                else if (!verify_window_counts(dt, xs).ok) why = "window counts";
                else if (!check_q_properties(w, xs, dt, mx).all())
                    why = "quotient-function properties";
                else {
                    auto b = build_bundle(w, xs);
                    if (b.mode_used != JacobianMode::Analytic) why = "gradient mode";
                    else if (!b.has_q) why = "quotient matrix missing";
                    for (std::size_t k = 0; k < b.singular_q.size() && why.empty(); ++k)
                        if (b.singular_q[k]) why = "singular quotient minor";
                }
            }
        }
        if (!why.empty()) {
            if (bad == 0) first = "trial " + std::to_string(t) + ": " + why;
            ++bad;
        }
    }
    c.check(bad == 0, std::to_string(bad) + " of 200 systems failed (" + first + ")");
}

// 6. Analytic gradient vs extrapolated finite differences on 50 systems.
void crit6(Checker& c) {
    WeightFamily w = WeightFamily::exponential();
    double worst = 0.0;
    std::string where;
    for (int t = 0; t < 50; ++t) {
        int n = 2 + t % 5;
        NodeSystem xs = sample_system(n, trial_seed(42, t));
        auto mx = all_maxima(w, xs);
        for (int i = 1; i <= n + 1; ++i)
            for (int j = 1; j <= n; ++j) {
                double a = partial_m(w, xs, mx, i, j);
                double f = fd_partial_m_extrapolated(w, xs, i, j);
                double rel = std::abs(a - f) / std::max(std::abs(a), std::abs(f));
                if (rel > worst) {
                    worst = rel;
                    where = "trial " + std::to_string(t) + " entry (" +
                            std::to_string(i) + "," + std::to_string(j) + ")";
                }
            }
    }
    c.check(worst <= 1e-6, "worst relative deviation " + num(worst) + " at " +
                               where + ", expected <= 1e-6");
}

// 7. Newton solver vs the derivative-free oracle, plus start independence.
void crit7(Checker& c) {
    WeightFamily w = WeightFamily::exponential();
    for (int n = 1; n <= 3; ++n) {
        auto rep = solve_equioscillation(w, n);
        c.check(rep.converged && rep.residual <= 1e-10,
                "n=" + std::to_string(n) + ": solver residual " +
                    num(rep.residual));
        if (!rep.converged) continue;

        std::vector<double> nodes;
        double val = minimax_oracle(w, n, 42, &nodes);
        c.check(std::abs(val - rep.level) <= 1e-6,
                "n=" + std::to_string(n) + ": oracle level " + num(val) +
                    " vs solver " + num(rep.level));
        bool coords = static_cast<int>(nodes.size()) == n;
        for (int i = 0; i < n && coords; ++i)
            coords = std::abs(nodes[i] - rep.x[i + 1]) <= 1e-6;
        c.check(coords, "n=" + std::to_string(n) +
                            ": oracle nodes drift past 1e-6 from the solver");

        for (int s = 0; s < 3; ++s) {
            NodeSystem xs = sample_system(n, trial_seed(42, s));
            std::vector<double> start(xs.x.begin() + 1, xs.x.end());
            auto r2 = solve_equioscillation(w, n, &start);
            bool same = r2.converged;
            for (std::size_t i = 0; i < rep.x.size() && same; ++i)
                same = std::abs(r2.x[i] - rep.x[i]) <= 1e-8;
            c.check(same, "n=" + std::to_string(n) + ": start " +
                              std::to_string(s) + " lands elsewhere");
        }
    }
}

// 8. Monte-Carlo sandwich and intertwining batches.
void crit8(Checker& c) {
    WeightFamily w = WeightFamily::exponential();
    int workers = static_cast<int>(
        std::max(1u, std::thread::hardware_concurrency()));
    auto sw = sandwich_check(w, 2, 1000, 42, workers);
    c.check(sw.ok(), "sandwich: " + std::to_string(sw.failures) + " of " +
                         std::to_string(sw.trials) + " trials failed" +
                         (sw.failure_notes.empty()
                              ? std::string()
                              : "; first: " + sw.failure_notes.front()));
    auto iw = intertwining_check(w, 2, 1000, 42, workers);
    c.check(iw.ok(), "intertwining: " + std::to_string(iw.failures) + " of " +
                         std::to_string(iw.trials) + " trials failed");
}

// 9. The consecutive-difference map blows up along the shrinking-gap path.
void crit9(Checker& c) {
    auto path = properness_probe(WeightFamily::exponential(), 20);
    bool crossed = false;
    double best = 0.0;
    for (const auto& pt : path) {
        if (pt.p <= 19 && pt.gamma_norm > 1e3) crossed = true;
        best = std::max(best, pt.gamma_norm);
    }
    c.check(crossed, "norm never exceeded 1e3 before gap 2^-20 (max " +
                         num(best) + ")");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::fprintf(stderr, "usage: acceptance <criterion 1..9>\n");
        return 2;
    }
    char* end = nullptr;
    long k = std::strtol(argv[1], &end, 10);
    if (end == argv[1] || *end != '\0' || k < 1 || k > 9) {
        std::fprintf(stderr, "usage: acceptance <criterion 1..9>\n");
        return 2;
    }

    const double budget[10] = {0, 1.0, 1.0, 1.0, 1.0, 60.0, 30.0, 30.0, 60.0, 10.0};

    Checker c;
    auto t0 = std::chrono::steady_clock::now();
    switch (k) {
        case 1: crit1(c); break;
        case 2: crit2(c); break;
        case 3: crit3(c); break;
        case 4: crit4(c); break;
        case 5: crit5(c); break;
        case 6: crit6(c); break;
        case 7: crit7(c); break;
        case 8: crit8(c); break;
        case 9: crit9(c); break;
    }
    auto t1 = std::chrono::steady_clock::now();
    double secs = std::chrono::duration<double>(t1 - t0).count();
    if (secs > budget[k])
        c.fails.push_back("runtime " + num(secs) + " s exceeded the " +
                          num(budget[k]) + " s budget");

    bool pass = c.fails.empty();
    std::string line = "criterion " + std::to_string(k) + ": " +
                       (pass ? "PASS" : "FAIL");
    char t[32];
    std::snprintf(t, sizeof t, " (%.2f s)", secs);
    line += t;
    if (!pass) {
        line += " — ";
        for (std::size_t i = 0; i < c.fails.size(); ++i) {
            if (i) line += "; ";
            line += c.fails[i];
        }
    }
    std::printf("%s\n", line.c_str());
    return pass ? 0 : 1;
}
