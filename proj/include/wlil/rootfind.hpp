#pragma once

#include <functional>
#include <vector>

#include "wlil/weights.hpp"

namespace wlil {

using Fn = std::function<double(double)>;

// Bisection on a bracketing interval [lo, hi] (f(lo), f(hi) of opposite sign or
// zero at an end), refined to the given width, then one guarded Newton polish
// when a derivative is supplied. Throws wlil::error if the bracket is invalid.
double bisect(const Fn& f, double lo, double hi, double width);
double bisect_polished(const Fn& f, const Fn& fprime, double lo, double hi, double width);

// Expand hi rightward from lo (doubling the span, starting at `step`) until
// sign f(hi) differs from sign f(lo). Returns false if no sign change shows up
// before the span exceeds `limit`.
bool expand_bracket_right(const Fn& f, double lo, double step, double limit, double& hi);
bool expand_bracket_left(const Fn& f, double hi, double step, double limit, double& lo);

// Derivative of f at x by Richardson-extrapolated central differences
// (a Ridders-style tableau). err_out, when given, receives the error estimate.
double central_derivative(const Fn& f, double x, double h0, double* err_out = nullptr);

// Real roots of a polynomial with ascending coefficients, found by recursing on
// the derivative for monotone pieces (closed forms at degree <= 2). Sorted.
std::vector<double> poly_real_roots(std::vector<double> coeffs);

// Element of the hybrid space written explicitly: f(t) = exp(-t) p(t) + c,
// with p given by ascending coefficients.
struct HybridPoly {
    std::vector<double> p;
    double c = 0.0;

    int degree() const;
    double leading() const;  // coefficient of t^degree (0 for the zero poly)
    double eval(double t) const;
    double eval_deriv(double t) const;
    // f'(t) = exp(-t) (p' - p)(t): the polynomial part of the derivative.
    std::vector<double> deriv_poly() const;
};

// All real roots of a HybridPoly, sorted. Splits the line at the critical
// points (roots of p' - p) and bisects each monotone piece.
std::vector<double> real_roots(const HybridPoly& f);

// Golden-section minimizer on [lo, hi] for a unimodal objective.
double golden_min(const Fn& f, double lo, double hi, double tol);

}  // namespace wlil
