#include "wlil/equioscillation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <thread>

#include "wlil/rootfind.hpp"

namespace wlil {

namespace {

NodeSystem hybrid_from_free(const std::vector<double>& free_nodes) {
    std::vector<double> x;
    x.reserve(free_nodes.size() + 1);
    x.push_back(0.0);
    for (double t : free_nodes) x.push_back(t);
    return make_system(SystemKind::Hybrid, x);
}

double inf_norm(const std::vector<double>& v) {
    double m = 0.0;
    for (double t : v) m = std::max(m, std::abs(t));
    return m;
}

bool feasible_free(const std::vector<double>& free_nodes, double min_gap) {
    double prev = 0.0;
    for (double t : free_nodes) {
        if (!(t - prev >= min_gap)) return false;
        prev = t;
    }
    return true;
}

std::vector<double> maxima_values(const WeightFamily& w, const NodeSystem& xs) {
    std::vector<double> m;
    for (const auto& mx : all_maxima(w, xs)) m.push_back(mx.m);
    return m;
}

}  // namespace

std::vector<double> gamma_value(const WeightFamily& w, const NodeSystem& xs) {
    std::vector<double> m = maxima_values(w, xs);
    std::vector<double> g(m.size() - 1);
    for (size_t i = 0; i + 1 < m.size(); ++i) g[i] = m[i + 1] - m[i];
    return g;
}

Mat gamma_jacobian(const WeightFamily& w, const NodeSystem& xs) {
    std::vector<IntervalMaximum> maxima = all_maxima(w, xs);
    bool all_interior = true;
    for (const auto& mx : maxima)
        if (mx.location != MaxLocation::Interior) all_interior = false;

    const int rows = static_cast<int>(maxima.size()) - 1;
    const int col_lo = (xs.system == SystemKind::HermiteLine) ? 0 : 1;
    const int cols = xs.n() - col_lo + 1;
    Mat J(rows, cols);
    for (int r = 0; r < rows; ++r) {
        int i_lo = maxima[r].i, i_hi = maxima[r + 1].i;
        for (int c = 0; c < cols; ++c) {
            int j = col_lo + c;
            double lo, hi;
            if (all_interior) {
                lo = partial_m(w, xs, maxima, i_lo, j);
                hi = partial_m(w, xs, maxima, i_hi, j);
            } else {
                lo = fd_partial_m(w, xs, i_lo, j, 1e-6);
                hi = fd_partial_m(w, xs, i_hi, j, 1e-6);
            }
            J.at(r, c) = hi - lo;
        }
    }
    return J;
}

SolveReport solve_gamma(const WeightFamily& w, int n,
                        const std::vector<double>& target,
                        const std::vector<double>* start) {
    if (n < 1) throw error("solve_gamma: n must be positive");
    if (static_cast<int>(target.size()) != n)
        throw error("solve_gamma: target needs one entry per node gap");

    std::vector<double> free_nodes(n);
    if (start) {
        if (static_cast<int>(start->size()) != n)
            throw error("solve_gamma: start needs n free nodes");
        free_nodes = *start;
    } else {
        double c = 2.0 * std::log(static_cast<double>(n) + 2.0) / (n + 1);
        for (int i = 0; i < n; ++i) free_nodes[i] = c * (i + 1);
    }

    const double kMinGap = 1e-6;
    const double kTol = 1e-10;
    const int kMaxIter = 200;

    SolveReport rep;
    auto residual_of = [&](const std::vector<double>& fn, std::vector<double>* g_out) {
        NodeSystem xs = hybrid_from_free(fn);
        std::vector<double> g = gamma_value(w, xs);
        for (int i = 0; i < n; ++i) g[i] -= target[i];
        if (g_out) *g_out = g;
        return inf_norm(g);
    };

    std::vector<double> g;
    double res = residual_of(free_nodes, &g);

    for (int it = 0; it < kMaxIter; ++it) {
        rep.iterations = it;
        if (res <= kTol) {
            rep.converged = true;
            break;
        }
        NodeSystem xs = hybrid_from_free(free_nodes);
        Mat J = gamma_jacobian(w, xs);
        rep.jac_det = lu_det(J);
        std::vector<double> step = lu_solve(J, g);

        double lambda = 1.0;
        std::vector<double> trial(n);
        auto apply = [&](double lam) {
            for (int i = 0; i < n; ++i) trial[i] = free_nodes[i] - lam * step[i];
        };
        apply(lambda);
        int guard = 0;
        while (!feasible_free(trial, kMinGap) && guard++ < 80) {
            lambda *= 0.5;
            apply(lambda);
        }
        if (!feasible_free(trial, kMinGap)) {
            rep.trace.push_back("iter " + std::to_string(it) + ": step blocked by feasibility");
            break;
        }

        double best_res = residual_of(trial, nullptr);
        std::vector<double> best = trial;
        int halvings = 0;
        while (best_res >= res && halvings++ < 30) {
            lambda *= 0.5;
            apply(lambda);
            if (!feasible_free(trial, kMinGap)) continue;
            double r2 = residual_of(trial, nullptr);
            if (r2 < best_res) {
                best_res = r2;
                best = trial;
            }
        }
        if (best_res >= res) {
            rep.trace.push_back("iter " + std::to_string(it) + ": no decrease, residual " +
                                std::to_string(res));
            break;
        }
        free_nodes = best;
        res = residual_of(free_nodes, &g);
        std::ostringstream os;
        os << "iter " << it << ": residual " << res << ", lambda " << lambda;
        rep.trace.push_back(os.str());
    }
    if (res <= kTol) rep.converged = true;

    NodeSystem xs = hybrid_from_free(free_nodes);
    std::vector<double> m = maxima_values(w, xs);
    rep.level = std::accumulate(m.begin(), m.end(), 0.0) / m.size();
    rep.residual = res;
    rep.x = xs.x;
    return rep;
}

SolveReport solve_equioscillation(const WeightFamily& w, int n,
                                  const std::vector<double>* start) {
    return solve_gamma(w, n, std::vector<double>(n, 0.0), start);
}

double nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                   std::vector<double>& x, double scale, int max_iter,
                   double tol_diam, double tol_spread) {
    const double alpha = 1.0, gamma = 2.0, rho = 0.5, sigma = 0.5;
    const size_t d = x.size();
    std::vector<std::vector<double>> pts(d + 1, x);
    for (size_t i = 0; i < d; ++i) pts[i + 1][i] += scale;
    std::vector<double> fv(d + 1);
    for (size_t i = 0; i <= d; ++i) fv[i] = f(pts[i]);

    auto sort_simplex = [&]() {
        std::vector<size_t> idx(d + 1);
        std::iota(idx.begin(), idx.end(), size_t{0});
        std::stable_sort(idx.begin(), idx.end(),
                         [&](size_t a, size_t b) { return fv[a] < fv[b]; });
        std::vector<std::vector<double>> p2;
        std::vector<double> f2;
        for (size_t i : idx) {
            p2.push_back(pts[i]);
            f2.push_back(fv[i]);
        }
        pts = std::move(p2);
        fv = std::move(f2);
    };

    for (int it = 0; it < max_iter; ++it) {
        sort_simplex();
        double diam = 0.0;
        for (size_t i = 1; i <= d; ++i)
            for (size_t k = 0; k < d; ++k)
                diam = std::max(diam, std::abs(pts[i][k] - pts[0][k]));
        if (diam < tol_diam && fv[d] - fv[0] < tol_spread) break;

        std::vector<double> centroid(d, 0.0);
        for (size_t i = 0; i < d; ++i)
            for (size_t k = 0; k < d; ++k) centroid[k] += pts[i][k] / d;

        auto combo = [&](double c) {
            std::vector<double> p(d);
            for (size_t k = 0; k < d; ++k) p[k] = centroid[k] + c * (centroid[k] - pts[d][k]);
            return p;
        };
        std::vector<double> xr = combo(alpha);
        double fr = f(xr);
        if (fr < fv[0]) {
            std::vector<double> xe = combo(gamma);
            double fe = f(xe);
            if (fe < fr) {
                pts[d] = xe;
                fv[d] = fe;
            } else {
                pts[d] = xr;
                fv[d] = fr;
            }
        } else if (fr < fv[d - 1]) {
            pts[d] = xr;
            fv[d] = fr;
        } else {
            std::vector<double> xc = (fr < fv[d]) ? combo(rho) : combo(-rho);
            double fc = f(xc);
            if (fc < std::min(fr, fv[d])) {
                pts[d] = xc;
                fv[d] = fc;
            } else {
                for (size_t i = 1; i <= d; ++i) {
                    for (size_t k = 0; k < d; ++k)
                        pts[i][k] = pts[0][k] + sigma * (pts[i][k] - pts[0][k]);
                    fv[i] = f(pts[i]);
                }
            }
        }
    }
    sort_simplex();
    x = pts[0];
    return fv[0];
}

double minimax_oracle(const WeightFamily& w, int n, uint64_t seed,
                      std::vector<double>* nodes_out) {
    auto objective = [&](const std::vector<double>& free_nodes) {
        if (!feasible_free(free_nodes, 1e-9)) {
            double pen = 0.0;
            double prev = 0.0;
            for (double t : free_nodes) {
                pen += std::max(0.0, prev + 1e-9 - t);
                prev = t;
            }
            return 1e6 + pen;
        }
        try {
            NodeSystem xs = hybrid_from_free(free_nodes);
            std::vector<double> m = maxima_values(w, xs);
            return *std::max_element(m.begin(), m.end());
        } catch (const error&) {
            return 1e6;
        }
    };

    if (n == 1) {
        Fn f = [&](double t) { return objective({t}); };
        double t = golden_min(f, 1e-6, 30.0, 1e-12);
        if (nodes_out) *nodes_out = {t};
        return f(t);
    }

    double best = std::numeric_limits<double>::infinity();
    std::vector<double> best_x;
    for (int s = 0; s < 20; ++s) {
        NodeSystem xs = sample_system(n, trial_seed(seed, static_cast<uint64_t>(s)));
        std::vector<double> x(xs.x.begin() + 1, xs.x.end());
        double scale = 0.25 * xs.x[1];
        for (int i = 1; i <= n; ++i) scale = std::min(scale, 0.25 * (xs.x[i] - xs.x[i - 1]));
        scale = std::max(scale, 1e-3);
        double v = nelder_mead(objective, x, scale, 5000, 1e-10, 1e-13);
        if (v < best) {
            best = v;
            best_x = x;
        }
    }
    if (nodes_out) *nodes_out = best_x;
    return best;
}

NodeSystem sample_system(int n, uint64_t seed) {
    SplitMix64 g(seed);
    std::vector<double> x(static_cast<size_t>(n) + 1, 0.0);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        for (int i = 1; i <= n; ++i) x[i] = 4.0 * n * g.uniform();
        std::sort(x.begin() + 1, x.end());
        bool ok = true;
        for (int i = 1; i <= n; ++i)
            if (x[i] - x[i - 1] < 1e-3) ok = false;
        if (ok) return make_system(SystemKind::Hybrid, x);
    }
    throw error("sample_system: rejection sampling failed");
}

namespace {

MonteCarloReport run_trials(int trials, int workers,
                            const std::function<std::string(int)>& one_trial) {
    MonteCarloReport rep;
    rep.trials = trials;
    std::vector<std::string> notes(static_cast<size_t>(trials));
    std::vector<char> failed(static_cast<size_t>(trials), 0);
    auto worker = [&](int lane, int lanes) {
        for (int t = lane; t < trials; t += lanes) {
            std::string note = one_trial(t);
            if (!note.empty()) {
                failed[static_cast<size_t>(t)] = 1;
                notes[static_cast<size_t>(t)] = note;
            }
        }
    };
    if (workers <= 1) {
        worker(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (int k = 0; k < workers; ++k) pool.emplace_back(worker, k, workers);
        for (auto& th : pool) th.join();
    }
    for (int t = 0; t < trials; ++t) {
        if (failed[static_cast<size_t>(t)]) {
            rep.failures++;
            rep.failure_notes.push_back("trial " + std::to_string(t) + ": " +
                                        notes[static_cast<size_t>(t)]);
        } else {
            rep.passes++;
        }
    }
    return rep;
}

}  // namespace

MonteCarloReport sandwich_check(const WeightFamily& w, int n, int trials,
                                uint64_t seed, int workers) {
    SolveReport opt = solve_equioscillation(w, n);
    if (!opt.converged) throw error("sandwich_check: optimal level unavailable");
    const double level = opt.level;
    auto one = [&](int t) -> std::string {
        NodeSystem xs = sample_system(n, trial_seed(seed, static_cast<uint64_t>(t)));
        std::vector<double> m = maxima_values(w, xs);
        bool below = false, above = false;
        for (double v : m) {
            if (v < level * (1.0 - 1e-12)) below = true;
            if (v > level * (1.0 + 1e-12)) above = true;
        }
        if (below && above) return "";
        std::ostringstream os;
        os << (below ? "no maximum above" : "no maximum below") << " the optimal level "
           << level;
        return os.str();
    };
    return run_trials(trials, workers, one);
}

MonteCarloReport intertwining_check(const WeightFamily& w, int n, int trials,
                                    uint64_t seed, int workers) {
    auto one = [&](int t) -> std::string {
        uint64_t base = 2 * static_cast<uint64_t>(t);
        NodeSystem xa = sample_system(n, trial_seed(seed, base));
        NodeSystem xb = sample_system(n, trial_seed(seed, base + 1));
        std::vector<double> ma = maxima_values(w, xa);
        std::vector<double> mb = maxima_values(w, xb);
        bool a_wins = false, b_wins = false;
        for (size_t i = 0; i < ma.size(); ++i) {
            if (ma[i] > mb[i] * (1.0 + 1e-12)) a_wins = true;
            if (mb[i] > ma[i] * (1.0 + 1e-12)) b_wins = true;
        }
        if (a_wins && b_wins) return "";
        return "one maxima vector dominates the other";
    };
    return run_trials(trials, workers, one);
}

std::vector<TargetProbe> gamma_surjectivity_probe(
    const WeightFamily& w, int n, const std::vector<std::vector<double>>& targets,
    int starts, uint64_t seed) {
    std::vector<TargetProbe> out;
    for (size_t ti = 0; ti < targets.size(); ++ti) {
        TargetProbe probe;
        probe.target = targets[ti];
        std::vector<std::vector<double>> answers;
        bool all_ok = true;
        double worst = 0.0;
        for (int s = 0; s < starts; ++s) {
            NodeSystem xs = sample_system(
                n, trial_seed(seed, 1000 * static_cast<uint64_t>(ti) +
                                        static_cast<uint64_t>(s)));
            std::vector<double> start(xs.x.begin() + 1, xs.x.end());
            SolveReport rep = solve_gamma(w, n, targets[ti], &start);
            worst = std::max(worst, rep.residual);
            if (!rep.converged) {
                all_ok = false;
                continue;
            }
            answers.emplace_back(rep.x.begin() + 1, rep.x.end());
        }
        probe.solved = all_ok && !answers.empty();
        probe.residual = worst;
        for (size_t a = 0; a < answers.size(); ++a)
            for (size_t b = a + 1; b < answers.size(); ++b)
                for (size_t k = 0; k < answers[a].size(); ++k)
                    probe.scatter =
                        std::max(probe.scatter, std::abs(answers[a][k] - answers[b][k]));
        if (!answers.empty()) probe.x = answers.front();
        out.push_back(std::move(probe));
    }
    return out;
}

std::vector<PropernessPoint> properness_probe(const WeightFamily& w, int pmax) {
    std::vector<PropernessPoint> out;
    for (int p = 1; p <= pmax; ++p) {
        PropernessPoint pt;
        pt.p = p;
        pt.gap = std::ldexp(1.0, -p);
        NodeSystem xs = make_system(SystemKind::Hybrid, {0.0, pt.gap, 2.0});
        pt.gamma_norm = inf_norm(gamma_value(w, xs));
        out.push_back(pt);
    }
    return out;
}

}  // namespace wlil
