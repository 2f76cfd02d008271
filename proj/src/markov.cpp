#include "wlil/markov.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace wlil {

namespace {

int sgn(double v) { return (v > 0.0) - (v < 0.0); }

// Coefficients (ascending) of prod_{j != k} (t - x_j).
std::vector<double> lagrange_numerator(const std::vector<double>& x, int k) {
    std::vector<double> c{1.0};
    for (size_t j = 0; j < x.size(); ++j) {
        if (static_cast<int>(j) == k) continue;
        std::vector<double> nc(c.size() + 1, 0.0);
        for (size_t m = 0; m < c.size(); ++m) {
            nc[m + 1] += c[m];
            nc[m] -= c[m] * x[j];
        }
        c = std::move(nc);
    }
    return c;
}

bool strictly_alternating(const std::vector<double>& first,
                          const std::vector<double>& second) {
    // Merge and demand strict increase with labels alternating, starting with
    // `first`. Sizes may differ by at most one.
    size_t nf = first.size(), ns = second.size();
    if (nf == 0 || ns == 0) return false;
    if (nf != ns && nf != ns + 1) return false;
    double prev = -std::numeric_limits<double>::infinity();
    for (size_t m = 0; m < nf + ns; ++m) {
        bool from_first = (m % 2 == 0);
        double t = from_first ? first[m / 2] : second[m / 2];
        if (!(t > prev)) return false;
        prev = t;
    }
    return true;
}

}  // namespace

HybridPoly branch_as_hybrid_poly(const NodeSystem& xs, int i) {
    if (!xs.hybrid()) throw error("branch_as_hybrid_poly: hybrid system required");
    const int n = xs.n();
    if (i < 1 || i > n + 1) throw error("branch_as_hybrid_poly: bad branch index");
    std::vector<double> b = leading_b(xs);
    HybridPoly f;
    f.c = sign_eps(n + 1, i);
    f.p.assign(n + 1, 0.0);
    for (int k = 0; k <= n; ++k) {
        double coef = (sign_eps(k, i) - sign_eps(n + 1, i)) * std::exp(xs.x[k]) * b[k];
        if (coef == 0.0) continue;
        std::vector<double> num = lagrange_numerator(xs.x, k);
        for (size_t m = 0; m < num.size(); ++m) f.p[m] += coef * num[m];
    }
    return f;
}

HybridPoly normalized_branch(const NodeSystem& xs, int i) {
    HybridPoly f = branch_as_hybrid_poly(xs, i);
    double s = ((xs.n() + 1 - i) % 2 + 2) % 2 ? -1.0 : 1.0;
    for (double& c : f.p) c *= s;
    f.c *= s;
    return f;
}

PairPlan plan_branch_pair(int i, int j, int r, bool a_r_zero) {
    if (!(i < j)) throw error("plan_branch_pair: needs i < j");
    if (j < r || (j == r && !a_r_zero)) return {1, true};
    if (j == r && a_r_zero) return {2, false};
    if (i < r || (i == r && !a_r_zero)) return {3, false};
    if (i == r && a_r_zero) return {4, true};
    return {5, true};
}

MarkovVerdict verify_markov_pair(const HybridPoly& f, const HybridPoly& g) {
    MarkovVerdict v;
    v.u = real_roots(f);
    v.v = real_roots(g);
    v.xi = poly_real_roots(f.deriv_poly());
    v.eta = poly_real_roots(g.deriv_poly());
    std::sort(v.xi.begin(), v.xi.end());
    std::sort(v.eta.begin(), v.eta.end());

    double span = 1.0;
    for (const auto* roots : {&v.u, &v.v, &v.xi, &v.eta})
        for (double t : *roots) span = std::max(span, std::abs(t));
    for (const auto* roots : {&v.u, &v.v}) {
        for (size_t m = 0; m + 1 < roots->size(); ++m)
            if ((*roots)[m + 1] - (*roots)[m] <= 1e-8 * span) v.degenerate = true;
    }

    v.zeros_interlace = strictly_alternating(v.u, v.v);
    v.derivatives_inherit = strictly_alternating(v.xi, v.eta);

    // Case taxonomy, stated for the common polynomial class of the pair with
    // the constants normalized positive.
    size_t np = std::max(f.p.size(), g.p.size());
    if (np > 0 && f.c != 0.0 && g.c != 0.0) {
        int N = static_cast<int>(np) - 1;
        auto lead_of = [&](const HybridPoly& q) {
            double raw = (q.p.size() == np) ? q.p.back() : 0.0;
            double mx = 0.0;
            for (double c : q.p) mx = std::max(mx, std::abs(c));
            if (std::abs(raw) <= 1e-12 * mx) raw = 0.0;
            return raw * (q.c > 0 ? 1.0 : -1.0);
        };
        double af = lead_of(f), ag = lead_of(g);
        int cf = static_cast<int>(v.u.size()), cg = static_cast<int>(v.v.size());
        bool osc_f = cf == N + 1, osc_g = cg == N + 1;
        bool near_f = cf == N, near_g = cg == N;
        if (osc_f && osc_g)
            v.case_label = 1;
        else if (osc_f && near_g && ag == 0.0)
            v.case_label = 2;
        else if (osc_f && near_g && ag > 0.0)
            v.case_label = 3;
        else if (near_f && near_g && af > 0.0 && ag == 0.0)
            v.case_label = 4;
        else if (near_f && near_g && ag > 0.0 && af >= ag)
            v.case_label = 5;
    }

    // Wronskian-style sign: phi = f' g - f g' sampled across all the action.
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (const auto* roots : {&v.u, &v.v, &v.xi, &v.eta}) {
        for (double t : *roots) {
            lo = std::min(lo, t);
            hi = std::max(hi, t);
        }
    }
    if (!std::isfinite(lo)) {
        lo = -1.0;
        hi = 1.0;
    }
    double pad = 0.2 * std::max(1.0, hi - lo);
    lo -= pad;
    hi += pad;
    int pos = 0, neg = 0;
    double mx = 0.0;
    std::vector<double> phi(1024);
    for (int s = 0; s < 1024; ++s) {
        double t = lo + (hi - lo) * s / 1023.0;
        phi[s] = f.eval_deriv(t) * g.eval(t) - f.eval(t) * g.eval_deriv(t);
        mx = std::max(mx, std::abs(phi[s]));
    }
    for (double p : phi) {
        if (std::abs(p) <= 1e-12 * mx) continue;
        (p > 0 ? pos : neg)++;
    }
    v.phi_sign_constant = !(pos > 0 && neg > 0);
    v.phi_sign = pos > 0 ? 1 : (neg > 0 ? -1 : 0);

    std::ostringstream os;
    os << "roots f: " << v.u.size() << ", g: " << v.v.size() << "; f': " << v.xi.size()
       << ", g': " << v.eta.size() << "; case " << v.case_label;
    v.detail = os.str();
    return v;
}

SignLawReport coeff_sign_law(const HybridPoly& f) {
    if (f.p.empty()) throw error("coeff_sign_law: empty polynomial part");
    SignLawReport rep;
    rep.degree = static_cast<int>(f.p.size()) - 1;
    rep.a = f.p.back();
    rep.c = f.c;
    if (rep.a == 0.0) throw error("coeff_sign_law: leading coefficient must be nonzero");
    rep.sign_ac = sgn(rep.a) * sgn(rep.c);
    std::vector<double> roots = real_roots(f);
    rep.root_count = static_cast<int>(roots.size());
    if (rep.root_count == rep.degree + 1)
        rep.law_holds = rep.sign_ac < 0;
    else if (rep.root_count == rep.degree)
        rep.law_holds = rep.sign_ac >= 0;
    else if (rep.root_count < rep.degree)
        rep.law_holds = true;  // nothing is asserted below n roots
    else
        rep.inconsistent = true;
    return rep;
}

}  // namespace wlil
