#include "wlil/basis.hpp"

#include <cmath>

namespace wlil {

namespace {

// w(t)/w(x_k), computed as one exponential of the log difference so the ratio
// is exactly 1.0 at t == x_k and never over/underflows prematurely.
double weight_ratio(const WeightFamily& w, double t, double xk) {
    switch (w.kind) {
        case Weight::Exponential: return std::exp(xk - t);
        case Weight::Hermite: return std::exp(xk * xk - t * t);
        case Weight::SqrtExponential:
            if (t < 0.0) throw error("weight_ratio: sqrt-exponential needs t >= 0");
            return std::exp(std::sqrt(xk) - std::sqrt(t));
        case Weight::Unit: return 1.0;
    }
    throw error("weight_ratio: bad weight kind");
}

}  // namespace

double eval_ell(const NodeSystem& xs, int k, double t) {
    const auto& x = xs.x;
    double p = 1.0;
    for (size_t j = 0; j < x.size(); ++j) {
        if (static_cast<int>(j) == k) continue;
        p *= (t - x[j]) / (x[k] - x[j]);
    }
    return p;
}

double eval_ell_deriv(const NodeSystem& xs, int k, double t) {
    const auto& x = xs.x;
    double s = 0.0;
    for (size_t m = 0; m < x.size(); ++m) {
        if (static_cast<int>(m) == k) continue;
        double p = 1.0 / (x[k] - x[m]);
        for (size_t l = 0; l < x.size(); ++l) {
            if (static_cast<int>(l) == k || l == m) continue;
            p *= (t - x[l]) / (x[k] - x[l]);
        }
        s += p;
    }
    return s;
}

double eval_ell_deriv2(const NodeSystem& xs, int k, double t) {
    const auto& x = xs.x;
    double s = 0.0;
    for (size_t m = 0; m < x.size(); ++m) {
        if (static_cast<int>(m) == k) continue;
        for (size_t q = 0; q < x.size(); ++q) {
            if (static_cast<int>(q) == k || q == m) continue;
            double p = 1.0 / ((x[k] - x[m]) * (x[k] - x[q]));
            for (size_t l = 0; l < x.size(); ++l) {
                if (static_cast<int>(l) == k || l == m || l == q) continue;
                p *= (t - x[l]) / (x[k] - x[l]);
            }
            s += p;
        }
    }
    return s;
}

std::vector<double> leading_b(const NodeSystem& xs) {
    const auto& x = xs.x;
    std::vector<double> b(x.size());
    for (size_t k = 0; k < x.size(); ++k) {
        double p = 1.0;
        for (size_t j = 0; j < x.size(); ++j) {
            if (j == k) continue;
            p /= (x[k] - x[j]);
        }
        b[k] = p;
    }
    return b;
}

double eval_h(const WeightFamily& w, const NodeSystem& xs, int k, double t) {
    return weight_ratio(w, t, xs.x[k]) * eval_ell(xs, k, t);
}

double eval_h_deriv(const WeightFamily& w, const NodeSystem& xs, int k, double t) {
    double d1 = eval_log_derivative(w, t);
    return weight_ratio(w, t, xs.x[k]) * (d1 * eval_ell(xs, k, t) + eval_ell_deriv(xs, k, t));
}

double eval_h_deriv2(const WeightFamily& w, const NodeSystem& xs, int k, double t) {
    double d1 = eval_log_derivative(w, t);
    double d2 = eval_log_second(w, t);
    return weight_ratio(w, t, xs.x[k]) *
           (d2 * eval_ell(xs, k, t) + 2.0 * d1 * eval_ell_deriv(xs, k, t) +
            eval_ell_deriv2(xs, k, t));
}

double eval_h_hybrid_tail(const WeightFamily& w, const NodeSystem& xs, double t) {
    if (!xs.hybrid()) throw error("hybrid tail element requested on a non-hybrid system");
    double s = 1.0;
    for (int k = 0; k <= xs.n(); ++k) s -= eval_h(w, xs, k, t);
    return s;
}

double eval_h_hybrid_tail_deriv(const WeightFamily& w, const NodeSystem& xs, double t) {
    if (!xs.hybrid()) throw error("hybrid tail element requested on a non-hybrid system");
    double s = 0.0;
    for (int k = 0; k <= xs.n(); ++k) s -= eval_h_deriv(w, xs, k, t);
    return s;
}

double eval_h_hybrid_tail_deriv2(const WeightFamily& w, const NodeSystem& xs, double t) {
    if (!xs.hybrid()) throw error("hybrid tail element requested on a non-hybrid system");
    double s = 0.0;
    for (int k = 0; k <= xs.n(); ++k) s -= eval_h_deriv2(w, xs, k, t);
    return s;
}

}  // namespace wlil
