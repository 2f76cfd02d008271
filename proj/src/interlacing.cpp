#include "wlil/interlacing.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "wlil/rootfind.hpp"

namespace wlil {

namespace {

constexpr double kRelTol = 1e-10;

double nan_val() { return std::numeric_limits<double>::quiet_NaN(); }

}  // namespace

double ordering_resolution(const NodeSystem& xs) {
    return 1e-10 * std::max(1.0, std::abs(xs.x.back()));
}

CoefficientReport leading_a(const NodeSystem& xs) {
    if (!xs.hybrid()) throw error("leading_a: hybrid system required");
    const int n = xs.n();
    CoefficientReport cr;
    cr.b = leading_b(xs);
    std::vector<double> bw(n + 1);  // |b_k| e^{x_k}
    for (int k = 0; k <= n; ++k) {
        bw[k] = std::abs(cr.b[k]) * std::exp(xs.x[k]);
        cr.scale += bw[k];
    }
    cr.a.assign(n + 2, 0.0);
    for (int i = 1; i <= n + 1; ++i) {
        // Only basis elements whose sign differs from the tail's contribute,
        // which is the parity split below; each contributes 2 b_k e^{x_k}.
        double s = 0.0;
        for (int k = 0; k < i; ++k)
            if (((k - n) % 2 + 2) % 2 == 1) s += bw[k];
        for (int k = i; k <= n; ++k)
            if (((k - n) % 2 + 2) % 2 == 0) s -= bw[k];
        cr.a[i] = 2.0 * sign_eps(n + 1, i) * s;
    }
    // c_i = (-1)^(n+1+i) a_i increases strictly; r is the last index where it
    // is still non-positive (within the relative tolerance).
    cr.r = 1;
    for (int i = 1; i <= n; ++i) {
        double c = ((n + 1 + i) % 2 ? -1.0 : 1.0) * cr.a[i];
        if (c <= kRelTol * cr.scale) cr.r = i;
    }
    cr.a_r_zero = std::abs(cr.a[cr.r]) <= kRelTol * cr.scale;
    return cr;
}

std::vector<int> index_set(const CoefficientReport& cr, int i, int n) {
    std::vector<int> J;
    bool with_left = (i < cr.r) || (i == cr.r && !cr.a_r_zero);
    for (int k = with_left ? 0 : 1; k <= n + 1; ++k)
        if (k != i) J.push_back(k);
    return J;
}

namespace {

// One root of branch i inside interval k, bracketed per the index-set
// guarantees and refined by bisection plus one Newton polish.
double locate_branch_root(const WeightFamily& w, const NodeSystem& xs,
                          const CoefficientReport& cr, int i, int k) {
    const int n = xs.n();
    const double width = 1e-13 * std::max(1.0, std::abs(xs.x.back()));
    const double cap = 65536.0 * (1.0 + std::abs(xs.x.back()));
    auto F = [&](double t) { return eval_branch(w, xs, i, t); };
    auto Fp = [&](double t) { return eval_branch_deriv(w, xs, i, t); };

    if (k >= 1 && k <= n) {
        // Node values alternate in sign across I_k whenever k != i.
        return bisect_polished(F, Fp, xs.x[k - 1], xs.x[k], width);
    }
    if (k == n + 1) {
        // The value at x_n and the limit at +infinity have opposite signs.
        double hi = 0.0;
        if (!expand_bracket_right(F, xs.x[n], 8.0, cap, hi)) {
            std::ostringstream msg;
            msg << "branch_roots: no sign change right of x_n for branch " << i
                << "; P(" << xs.x[n] << ")=" << F(xs.x[n]);
            for (double s = 8.0; s <= 4096.0; s *= 4.0)
                msg << " P(" << xs.x[n] + s << ")=" << F(xs.x[n] + s);
            throw error(msg.str());
        }
        return bisect_polished(F, Fp, xs.x[n], hi, width);
    }
    // k == 0: the sign of P_i far to the left is (-1)^n sign(a_i).
    double lo = 0.0;
    if (!expand_bracket_left(F, xs.x[0], 8.0, cap, lo)) {
        std::ostringstream msg;
        msg << "branch_roots: no sign change left of x_0 for branch " << i
            << " (leading coefficient " << cr.a[i] << "); P(" << xs.x[0]
            << ")=" << F(xs.x[0]);
        for (double s = 8.0; s <= 4096.0; s *= 4.0)
            msg << " P(" << xs.x[0] - s << ")=" << F(xs.x[0] - s);
        throw error(msg.str());
    }
    return bisect_polished(F, Fp, lo, xs.x[0], width);
}

}  // namespace

RootTable branch_roots(const WeightFamily& w, const NodeSystem& xs) {
    if (!xs.hybrid()) throw error("branch_roots: hybrid system required");
    const int n = xs.n();
    RootTable rt;
    rt.n = n;
    rt.coeff = leading_a(xs);
    rt.J.assign(n + 2, {});
    rt.y.assign(n + 2, std::vector<double>(n + 2, nan_val()));
    for (int i = 1; i <= n + 1; ++i) {
        rt.J[i] = index_set(rt.coeff, i, n);
        for (int k : rt.J[i]) rt.y[i][k] = locate_branch_root(w, xs, rt.coeff, i, k);
    }
    return rt;
}

DerivRootTable deriv_roots(const WeightFamily& w, const NodeSystem& xs,
                           const RootTable& rt,
                           const std::vector<IntervalMaximum>& maxima) {
    if (!xs.hybrid()) throw error("deriv_roots: hybrid system required");
    const int n = xs.n();
    const double width = 1e-13 * std::max(1.0, std::abs(xs.x.back()));
    const double cap = 65536.0 * (1.0 + std::abs(xs.x.back()));

    DerivRootTable dt;
    dt.n = n;
    dt.r = rt.coeff.r;
    dt.W.assign(n + 2, {});
    dt.z.assign(n + 2, nan_val());
    for (const auto& mx : maxima) dt.z[mx.i] = mx.z;

    for (int i = 1; i <= n + 1; ++i) {
        auto G = [&](double t) { return eval_branch_deriv(w, xs, i, t); };
        auto G2 = [&](double t) { return eval_branch_deriv2(w, xs, i, t); };
        std::vector<double> roots;
        for (int k : rt.J[i])
            if (rt.has(i, k)) roots.push_back(rt.y[i][k]);
        std::sort(roots.begin(), roots.end());
        std::vector<double>& Wi = dt.W[i];
        // One stationary point strictly between consecutive branch roots; the
        // branch derivative has opposite signs at simple roots flanking a
        // single hump.
        for (size_t m = 0; m + 1 < roots.size(); ++m)
            Wi.push_back(bisect_polished(G, G2, roots[m], roots[m + 1], width));
        // Branches with only n roots pick up one trailing stationary point
        // past the last root (the branch still has to turn around to reach
        // its limit at +infinity).
        bool oscillating = (i < dt.r) || (i == dt.r && !rt.coeff.a_r_zero);
        if (!oscillating && !roots.empty() && !(i == dt.r && rt.coeff.a_r_zero)) {
            double hi = 0.0;
            if (!expand_bracket_right(G, roots.back(), 8.0, cap, hi))
                throw error("deriv_roots: trailing stationary point of branch " +
                            std::to_string(i) + " not bracketed");
            Wi.push_back(bisect_polished(G, G2, roots.back(), hi, width));
        }
        std::sort(Wi.begin(), Wi.end());
    }
    if (rt.coeff.a_r_zero) {
        // Pad the short sequence with an element below everything; only its
        // position in the order matters.
        double lo = std::numeric_limits<double>::infinity();
        for (int i = 1; i <= n + 1; ++i)
            for (double v : dt.W[i]) lo = std::min(lo, v);
        dt.synthetic = lo - 1.0;
        dt.W[dt.r].insert(dt.W[dt.r].begin(), dt.synthetic);
        dt.augmented = true;
    }
    return dt;
}

namespace {

struct Comparer {
    OrderingVerdict* v;
    double res;

    void expect_less(double a, double b, const std::string& what) {
        ++v->comparisons;
        double d = b - a;
        if (d > res) {
            v->min_margin = std::min(v->min_margin, d);
        } else if (d >= -res) {
            ++v->ties;
            std::ostringstream os;
            os << "tie (" << d << "): " << what;
            v->notes.push_back(os.str());
        } else {
            ++v->violations;
            v->ok = false;
            std::ostringstream os;
            os << "violation (" << d << "): " << what;
            v->notes.push_back(os.str());
        }
    }
};

std::string root_name(int i, int k) {
    return "y[" + std::to_string(i) + "][" + std::to_string(k) + "]";
}

// Branch indices in their left-to-right root order inside interval k.
std::vector<int> chain_for_interval(int k, int n, int r) {
    std::vector<int> order;
    if (k == 0) {
        for (int i = r; i >= 1; --i) order.push_back(i);
    } else if (k == n + 1) {
        for (int i = n; i >= 1; --i) order.push_back(i);
    } else {
        for (int i = k - 1; i >= 1; --i) order.push_back(i);
        for (int i = n + 1; i >= k + 1; --i) order.push_back(i);
    }
    return order;
}

}  // namespace

OrderingVerdict verify_ordering(const NodeSystem& xs, const RootTable& rt) {
    OrderingVerdict v;
    v.resolution = ordering_resolution(xs);
    Comparer cmp{&v, v.resolution};
    const int n = rt.n;
    const int r = rt.coeff.r;

    double prev = -std::numeric_limits<double>::infinity();
    std::string prev_name = "-inf";
    auto step = [&](double t, const std::string& name) {
        if (std::isfinite(prev)) cmp.expect_less(prev, t, prev_name + " < " + name);
        prev = t;
        prev_name = name;
    };

    for (int k = 0; k <= n + 1; ++k) {
        for (int i : chain_for_interval(k, n, r))
            if (rt.has(i, k)) step(rt.y[i][k], root_name(i, k));
        if (k <= n) step(xs.x[k], "x[" + std::to_string(k) + "]");
    }
    return v;
}

OrderingVerdict verify_pairwise(const NodeSystem& xs, const RootTable& rt) {
    OrderingVerdict v;
    v.resolution = ordering_resolution(xs);
    Comparer cmp{&v, v.resolution};
    const int n = rt.n;
    for (int i = 1; i <= n + 1; ++i) {
        for (int j = i + 1; j <= n + 1; ++j) {
            for (int k = 0; k <= n + 1; ++k) {
                if (!rt.has(i, k) || !rt.has(j, k)) continue;
                bool i_first = (i < k && k < j);
                double a = i_first ? rt.y[i][k] : rt.y[j][k];
                double b = i_first ? rt.y[j][k] : rt.y[i][k];
                cmp.expect_less(a, b,
                                root_name(i_first ? i : j, k) + " < " +
                                    root_name(i_first ? j : i, k));
            }
        }
    }
    return v;
}

OrderingVerdict verify_w_order(const DerivRootTable& dt) {
    OrderingVerdict v;
    double scale = 1.0;
    for (const auto& Wi : dt.W)
        for (double t : Wi) scale = std::max(scale, std::abs(t));
    v.resolution = 1e-10 * scale;
    const int n = dt.n;
    std::vector<int> order;
    for (int i = dt.r; i >= 1; --i) order.push_back(i);
    for (int i = n + 1; i >= dt.r + 1; --i) order.push_back(i);

    // Pairwise: if u comes before w in the cyclic listing then their sorted
    // root sequences strictly intertwine, u[m] < w[m] < u[m+1].
    Comparer cmp{&v, v.resolution};
    for (size_t p = 0; p < order.size(); ++p) {
        for (size_t q = p + 1; q < order.size(); ++q) {
            const std::vector<double>& U = dt.W[order[p]];
            const std::vector<double>& W = dt.W[order[q]];
            size_t m = std::min(U.size(), W.size());
            for (size_t t = 0; t < m; ++t) {
                cmp.expect_less(U[t], W[t],
                                "W[" + std::to_string(order[p]) + "][" + std::to_string(t) +
                                    "] < W[" + std::to_string(order[q]) + "][" +
                                    std::to_string(t) + "]");
                if (t + 1 < U.size())
                    cmp.expect_less(W[t], U[t + 1],
                                    "W[" + std::to_string(order[q]) + "][" + std::to_string(t) +
                                        "] < W[" + std::to_string(order[p]) + "][" +
                                        std::to_string(t + 1) + "]");
            }
        }
    }
    return v;
}

OrderingVerdict verify_window_counts(const DerivRootTable& dt, const NodeSystem& xs) {
    OrderingVerdict v;
    v.resolution = ordering_resolution(xs);
    const int n = dt.n;
    std::vector<double> all;
    for (int i = 1; i <= n + 1; ++i)
        for (double t : dt.W[i])
            if (!(dt.augmented && i == dt.r && t == dt.synthetic)) all.push_back(t);

    for (int j = 1; j <= n; ++j) {
        double lo = dt.z[j], hi = dt.z[j + 1];
        int strict = 0, border = 0;
        for (double t : all) {
            if (t > lo + v.resolution && t < hi - v.resolution)
                ++strict;
            else if (t > lo - v.resolution && t < hi + v.resolution)
                ++border;
        }
        ++v.comparisons;
        v.ties += border;
        if (!(strict <= n + 1 && n + 1 <= strict + border)) {
            v.ok = false;
            ++v.violations;
            std::ostringstream os;
            os << "window [z" << j << ", z" << j + 1 << "] holds " << strict
               << " (+" << border << " borderline) derivative roots, expected " << n + 1;
            v.notes.push_back(os.str());
        }
    }
    return v;
}

OrderingVerdict verify_simple_roots(const WeightFamily& w, const NodeSystem& xs,
                                    const RootTable& rt) {
    OrderingVerdict v;
    v.resolution = ordering_resolution(xs);
    const int n = rt.n;
    for (int i = 1; i <= n + 1; ++i) {
        for (int k : rt.J[i]) {
            if (!rt.has(i, k)) continue;
            double rho = rt.y[i][k];
            // Mean-slope scale: node values are +-1, so the branch sweeps a
            // range of 2 over the local interval width.
            double width;
            if (k >= 1 && k <= n)
                width = xs.x[k] - xs.x[k - 1];
            else if (k == 0)
                width = std::max(1e-6, xs.x[0] - rho);
            else
                width = std::max(1e-6, rho - xs.x[n]);
            double scale = 2.0 / width;
            double d = std::abs(eval_branch_deriv(w, xs, i, rho));
            ++v.comparisons;
            if (d <= 1e-8 * scale) {
                v.ok = false;
                ++v.violations;
                std::ostringstream os;
                os << "root " << root_name(i, k) << " nearly double: |P'| = " << d
                   << " vs scale " << scale;
                v.notes.push_back(os.str());
            }
        }
    }
    return v;
}

}  // namespace wlil
