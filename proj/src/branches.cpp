#include "wlil/branches.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "wlil/rootfind.hpp"

namespace wlil {

namespace {

void check_branch_index(const NodeSystem& xs, int i) {
    int lo = xs.system == SystemKind::HermiteLine ? 0 : 1;
    if (i < lo || i > xs.n() + 1)
        throw error("branch index " + std::to_string(i) + " out of range for " +
                    std::string(system_name(xs.system)));
}

}  // namespace

double eval_branch(const WeightFamily& w, const NodeSystem& xs, int i, double t) {
    check_branch_index(xs, i);
    const int n = xs.n();
    double s = 0.0;
    for (int k = 0; k <= n; ++k) s += sign_eps(k, i) * eval_h(w, xs, k, t);
    if (xs.hybrid()) s += sign_eps(n + 1, i) * eval_h_hybrid_tail(w, xs, t);
    return s;
}

double eval_branch_deriv(const WeightFamily& w, const NodeSystem& xs, int i, double t) {
    check_branch_index(xs, i);
    const int n = xs.n();
    double s = 0.0;
    for (int k = 0; k <= n; ++k) s += sign_eps(k, i) * eval_h_deriv(w, xs, k, t);
    if (xs.hybrid()) s += sign_eps(n + 1, i) * eval_h_hybrid_tail_deriv(w, xs, t);
    return s;
}

double eval_branch_deriv2(const WeightFamily& w, const NodeSystem& xs, int i, double t) {
    check_branch_index(xs, i);
    const int n = xs.n();
    double s = 0.0;
    for (int k = 0; k <= n; ++k) s += sign_eps(k, i) * eval_h_deriv2(w, xs, k, t);
    if (xs.hybrid()) s += sign_eps(n + 1, i) * eval_h_hybrid_tail_deriv2(w, xs, t);
    return s;
}

double branch_limit_at_infinity(const NodeSystem& xs, int i) {
    check_branch_index(xs, i);
    return xs.hybrid() ? sign_eps(xs.n() + 1, i) : 0.0;
}

double eval_lebesgue(const WeightFamily& w, const NodeSystem& xs, double t) {
    const int n = xs.n();
    double s = 0.0;
    for (int k = 0; k <= n; ++k) s += std::abs(eval_h(w, xs, k, t));
    if (xs.hybrid()) s += std::abs(eval_h_hybrid_tail(w, xs, t));
    return s;
}

namespace {

struct Candidate {
    double z = 0.0;
    double value = 0.0;
    MaxLocation kind = MaxLocation::Interior;
};

// Interior stationary points of branch i on (lo, hi), located by a uniform
// derivative scan plus bisection. `samples` interior points; the ends are
// excluded so singular weight derivatives (sqrt weight at 0) never get hit.
std::vector<double> scan_stationary(const WeightFamily& w, const NodeSystem& xs,
                                    int i, double lo, double hi, int samples,
                                    double width) {
    auto G = [&](double t) { return eval_branch_deriv(w, xs, i, t); };
    auto G2 = [&](double t) { return eval_branch_deriv2(w, xs, i, t); };
    std::vector<double> out;
    double prev_t = 0.0, prev_g = 0.0;
    bool have_prev = false;
    for (int j = 1; j <= samples; ++j) {
        double t = lo + (hi - lo) * (static_cast<double>(j) / (samples + 1));
        double g = G(t);
        if (have_prev) {
            if (g == 0.0) {
                out.push_back(t);
            } else if (prev_g != 0.0 && ((prev_g > 0) != (g > 0))) {
                out.push_back(bisect_polished(G, G2, prev_t, t, width));
            }
        } else if (g == 0.0) {
            out.push_back(t);
        }
        prev_t = t;
        prev_g = g;
        have_prev = true;
    }
    return out;
}

IntervalMaximum pick_best(const NodeSystem& xs, int i,
                          const std::vector<Candidate>& cands) {
    // Highest value wins; on a value tie a finite endpoint beats an interior
    // point, and the earlier-listed endpoint (the left one) beats the later.
    IntervalMaximum best;
    best.i = i;
    bool first = true;
    for (const auto& c : cands) {
        bool better = first || c.value > best.m;
        if (!better && c.value == best.m && best.location == MaxLocation::Interior &&
            c.kind == MaxLocation::LeftEndpoint)
            better = true;
        if (better) {
            best.m = c.value;
            best.z = c.z;
            best.location = c.kind;
            first = false;
        }
    }
    int near = 0;
    for (const auto& c : cands)
        if (c.value >= best.m - 1e-8 * std::max(1.0, std::abs(best.m))) ++near;
    best.nonunique_risk = near >= 2;
    return best;
}

}  // namespace

IntervalMaximum interval_maximum(const WeightFamily& w, const NodeSystem& xs, int i) {
    if (i < first_interval(xs) || i > last_interval(xs))
        throw error("interval_maximum: interval " + std::to_string(i) +
                    " not meaningful for " + std::string(system_name(xs.system)));
    const Interval iv = interval_bounds(xs, i);
    const double width = 1e-13 * std::max(1.0, std::abs(xs.x.back()));
    auto F = [&](double t) { return eval_branch(w, xs, i, t); };
    auto G = [&](double t) { return eval_branch_deriv(w, xs, i, t); };
    auto G2 = [&](double t) { return eval_branch_deriv2(w, xs, i, t); };

    std::vector<Candidate> cands;

    if (iv.bounded()) {
        cands.push_back({iv.lo, F(iv.lo), MaxLocation::LeftEndpoint});
        cands.push_back({iv.hi, F(iv.hi), MaxLocation::LeftEndpoint});
        for (double z : scan_stationary(w, xs, i, iv.lo, iv.hi, 512, width))
            cands.push_back({z, F(z), MaxLocation::Interior});
        return pick_best(xs, i, cands);
    }

    // Unbounded interval: classify by the derivative sign at the finite
    // endpoint (tolerance relative to the local curvature scale), then chase
    // the single stationary point with a doubling window when it exists.
    const bool right_unbounded = std::isinf(iv.hi);
    const double e = right_unbounded ? iv.lo : iv.hi;
    const double d_end = G(e);
    const double tol = 1e-10 * std::max(1.0, std::abs(G2(e)));
    const double limit = std::abs(branch_limit_at_infinity(xs, i));
    const double cap = 65536.0 * (1.0 + std::abs(xs.x.back()));

    cands.push_back({e, F(e), MaxLocation::LeftEndpoint});
    double inf = std::numeric_limits<double>::infinity();
    cands.push_back({right_unbounded ? inf : -inf, limit, MaxLocation::AtInfinityFlat});

    const bool inward = right_unbounded ? (d_end > tol) : (d_end < -tol);
    if (inward) {
        // The branch keeps climbing into the interval, so a stationary point
        // exists out there; bracket it by doubling the span from 8.
        double other = 0.0;
        bool ok = right_unbounded ? expand_bracket_right(G, e, 8.0, cap, other)
                                  : expand_bracket_left(G, e, 8.0, cap, other);
        if (!ok) {
            std::ostringstream msg;
            msg << "interval_maximum: no derivative sign change on the unbounded side of "
                << "interval " << i << "; samples:";
            double span = 8.0;
            for (int s = 0; s < 8; ++s, span *= 2.0) {
                double t = right_unbounded ? e + span : e - span;
                msg << " g(" << t << ")=" << G(t);
            }
            throw error(msg.str());
        }
        double lo = right_unbounded ? e : other;
        double hi = right_unbounded ? other : e;
        for (double z : scan_stationary(w, xs, i, lo, hi, 512, width))
            cands.push_back({z, F(z), MaxLocation::Interior});
        if (cands.size() == 2) {  // scan somehow missed it; take the bracket root
            double z = bisect_polished(G, G2, lo, hi, width);
            cands.push_back({z, F(z), MaxLocation::Interior});
        }
    } else {
        // Endpoint maximum expected; still sweep a modest window so a bump
        // beyond a flat start would be caught rather than assumed away.
        double span = 8.0;
        double lo = right_unbounded ? e : e - span;
        double hi = right_unbounded ? e + span : e;
        for (double z : scan_stationary(w, xs, i, lo, hi, 256, width))
            cands.push_back({z, F(z), MaxLocation::Interior});
    }
    return pick_best(xs, i, cands);
}

std::vector<IntervalMaximum> all_maxima(const WeightFamily& w, const NodeSystem& xs) {
    std::vector<IntervalMaximum> out;
    for (int i = first_interval(xs); i <= last_interval(xs); ++i)
        out.push_back(interval_maximum(w, xs, i));
    return out;
}

}  // namespace wlil
