#include "wlil/jacobian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "wlil/markov.hpp"
#include "wlil/rootfind.hpp"

namespace wlil {

namespace {

const IntervalMaximum& maximum_for(const std::vector<IntervalMaximum>& maxima, int i) {
    for (const auto& m : maxima)
        if (m.i == i) return m;
    throw error("no recorded maximum for interval " + std::to_string(i));
}

double max_with_node_at(const WeightFamily& w, const NodeSystem& xs, int i, int j,
                        double pos) {
    std::vector<double> moved = xs.x;
    moved[j] = pos;
    NodeSystem sys = make_system(xs.system, moved);
    return interval_maximum(w, sys, i).m;
}

double min_gap_around(const NodeSystem& xs, int j) {
    double g = std::numeric_limits<double>::infinity();
    if (j > 0) g = std::min(g, xs.x[j] - xs.x[j - 1]);
    if (j < xs.n()) g = std::min(g, xs.x[j + 1] - xs.x[j]);
    if (!std::isfinite(g)) g = 1.0;
    return g;
}

}  // namespace

double partial_m(const WeightFamily& w, const NodeSystem& xs,
                 const std::vector<IntervalMaximum>& maxima, int i, int j) {
    const IntervalMaximum& mx = maximum_for(maxima, i);
    if (mx.location != MaxLocation::Interior)
        throw error("interval " + std::to_string(i) +
                    ": maximum is not interior, no analytic gradient");
    return -eval_h(w, xs, j, mx.z) * eval_branch_deriv(w, xs, i, xs.x[j]);
}

double fd_partial_m(const WeightFamily& w, const NodeSystem& xs, int i, int j,
                    double step) {
    double xj = xs.x[j];
    double up = max_with_node_at(w, xs, i, j, xj + step);
    double dn = max_with_node_at(w, xs, i, j, xj - step);
    return (up - dn) / (2.0 * step);
}

double fd_partial_m_extrapolated(const WeightFamily& w, const NodeSystem& xs,
                                 int i, int j) {
    double h0 = min_gap_around(xs, j) / 4.0;
    Fn f = [&](double pos) { return max_with_node_at(w, xs, i, j, pos); };
    return central_derivative(f, xs.x[j], h0);
}

JacobianBundle build_bundle(const WeightFamily& w, const NodeSystem& xs,
                            JacobianMode mode) {
    if (xs.system == SystemKind::FiniteInterval)
        throw error("build_bundle: needs an unbounded domain");

    JacobianBundle b;
    const int n = xs.n();
    const int row_lo = first_interval(xs);
    const int col_lo = (xs.system == SystemKind::HermiteLine) ? 0 : 1;
    for (int i = row_lo; i <= n + 1; ++i) b.row_index.push_back(i);
    for (int j = col_lo; j <= n; ++j) b.col_index.push_back(j);

    b.maxima = all_maxima(w, xs);

    bool all_interior = true;
    for (const auto& m : b.maxima)
        if (m.location != MaxLocation::Interior) all_interior = false;

    bool analytic;
    switch (mode) {
        case JacobianMode::Analytic:
            analytic = true;
            break;
        case JacobianMode::FiniteDifference:
            analytic = false;
            break;
        default:
            analytic = xs.hybrid() && all_interior;
            break;
    }
    b.mode_used = analytic ? JacobianMode::Analytic : JacobianMode::FiniteDifference;

    const int rows = static_cast<int>(b.row_index.size());
    const int cols = static_cast<int>(b.col_index.size());
    const double fd_step = 1e-6;
    b.A = Mat(rows, cols);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            int i = b.row_index[r], j = b.col_index[c];
            b.A.at(r, c) = analytic ? partial_m(w, xs, b.maxima, i, j)
                                    : fd_partial_m(w, xs, i, j, fd_step);
        }
    }

    for (int r = 0; r < rows; ++r) {
        Mat minor = b.A.drop_row(r);
        double det = lu_det(minor);
        b.det_a.push_back(det);
        b.cond_a.push_back(cond_inf(minor));
        b.singular_a.push_back(singular_by_relative_det(det, hadamard_rows(minor)));
    }

    if (xs.hybrid() && all_interior) {
        b.has_q = true;
        b.Q = Mat(n, n + 1);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c <= n; ++c)
                b.Q.at(r, c) = eval_q(w, xs, b.maxima, c + 1, xs.x[r + 1]);
        for (int k = 0; k <= n; ++k) {
            Mat minor = b.Q.drop_col(k);
            double det = lu_det(minor);
            b.det_q.push_back(det);
            b.singular_q.push_back(singular_by_relative_det(det, hadamard_rows(minor)));
        }
    }
    return b;
}

double eval_q(const WeightFamily& w, const NodeSystem& xs,
              const std::vector<IntervalMaximum>& maxima, int i, double t) {
    const IntervalMaximum& mx = maximum_for(maxima, i);
    if (mx.location != MaxLocation::Interior)
        throw error("interval " + std::to_string(i) +
                    ": quotient needs an interior maximum");
    if (std::abs(t - mx.z) < 1e-8) return eval_branch_deriv2(w, xs, i, mx.z);
    return eval_branch_deriv(w, xs, i, t) / (t - mx.z);
}

QPropertyReport check_q_properties(const WeightFamily& w, const NodeSystem& xs,
                                   const DerivRootTable& dt,
                                   const std::vector<IntervalMaximum>& maxima) {
    QPropertyReport rep;
    const int n = dt.n;
    const double res = ordering_resolution(xs);
    const double inf = std::numeric_limits<double>::infinity();

    for (int i = 1; i <= n + 1; ++i) {
        // Roots of the quotient: the derivative roots of branch i with the one
        // at the interval-i maximum cancelled away.
        std::vector<double> roots;
        for (double t : dt.W[i]) {
            if (dt.augmented && i == dt.r && t == dt.synthetic) continue;
            roots.push_back(t);
        }
        const double zi = dt.z[i];
        if (!roots.empty()) {
            size_t nearest = 0;
            for (size_t m = 1; m < roots.size(); ++m)
                if (std::abs(roots[m] - zi) < std::abs(roots[nearest] - zi)) nearest = m;
            roots.erase(roots.begin() + static_cast<std::ptrdiff_t>(nearest));
        }

        // Nonvanishing of q_i at every argmax, tested on the weight-stripped
        // derivative s = p' - p (so (P_i)' = e^{-t} s, and (P_i)'' = e^{-t}
        // (s' - s) covers the cancelled zero at z_i). A value counts as
        // nonzero when it clears the roundoff scale of its own evaluation;
        // the raw q_i values decay like e^{-t}, so one shared row scale
        // would misread genuinely nonzero tail entries.
        HybridPoly hp = branch_as_hybrid_poly(xs, i);
        std::vector<double> s = hp.deriv_poly();
        std::vector<double> s2 = HybridPoly{s, 0.0}.deriv_poly();
        auto eval_with_scale = [](const std::vector<double>& poly, double t,
                                  double& scale) {
            double val = 0.0, pw = 1.0;
            scale = 0.0;
            for (double c : poly) {
                val += c * pw;
                scale += std::abs(c * pw);
                pw *= t;
            }
            return val;
        };
        for (int j = 1; j <= n + 1; ++j) {
            double scale = 0.0;
            double val = eval_with_scale(j == i ? s2 : s, dt.z[j], scale);
            if (val == 0.0) {
                // a bitwise zero is as definite as floating point gets
                rep.values_nonzero = false;
                rep.witnesses.push_back("q_" + std::to_string(i) + "(z_" +
                                        std::to_string(j) + ") is exactly zero");
            } else if (std::abs(val) <= 1e-10 * scale) {
                // nonzero but too small to certify against its own roundoff
                // (tightly clustered nodes shrink these margins without bound);
                // recorded as a tie, the same treatment the ordering checks
                // give comparisons below the working resolution
                ++rep.ties;
                rep.witnesses.push_back("q_" + std::to_string(i) + "(z_" +
                                        std::to_string(j) +
                                        ") below evaluation resolution");
            }
        }

        for (int j = 1; j <= n; ++j) {
            if (j == i - 1 || j == i) continue;
            double lo = dt.z[j], hi = dt.z[j + 1];
            int strict = 0, border = 0;
            for (double t : roots) {
                if (t > lo + res && t < hi - res)
                    ++strict;
                else if (t >= lo - res && t <= hi + res)
                    ++border;
            }
            rep.ties += border;
            if (!(strict <= 1 && 1 <= strict + border)) {
                rep.one_root_per_window = false;
                rep.witnesses.push_back("q_" + std::to_string(i) + ": window [z_" +
                                        std::to_string(j) + ", z_" +
                                        std::to_string(j + 1) + "] holds " +
                                        std::to_string(strict) + " roots");
            }
        }

        double lo = (i >= 2) ? dt.z[i - 1] : -inf;
        double hi = (i <= n) ? dt.z[i + 1] : inf;
        for (double t : roots) {
            if (t > lo + res && t < hi - res) {
                rep.diagonal_window_clean = false;
                rep.witnesses.push_back("q_" + std::to_string(i) +
                                        ": unexpected root near its own maximum at t=" +
                                        std::to_string(t));
            }
        }
    }
    return rep;
}

}  // namespace wlil
