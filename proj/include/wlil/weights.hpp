#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace wlil {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Weight { Exponential, Hermite, SqrtExponential, Unit };

// A weight w(t) > 0 together with its natural domain. The kind is an enum on
// purpose: the root-counting guarantees downstream depend on which weight it is.
struct WeightFamily {
    Weight kind = Weight::Exponential;
    double lo = 0.0, hi = 1.0;  // finite domain, Unit only

    static WeightFamily exponential() { return {Weight::Exponential}; }
    static WeightFamily hermite() { return {Weight::Hermite}; }
    static WeightFamily sqrt_exponential() { return {Weight::SqrtExponential}; }
    static WeightFamily unit(double a, double b) { return {Weight::Unit, a, b}; }

    double domain_lo() const {
        switch (kind) {
            case Weight::Exponential:
            case Weight::SqrtExponential: return 0.0;
            case Weight::Hermite: return -std::numeric_limits<double>::infinity();
            case Weight::Unit: return lo;
        }
        return 0.0;
    }
    double domain_hi() const {
        switch (kind) {
            case Weight::Unit: return hi;
            default: return std::numeric_limits<double>::infinity();
        }
    }
    bool in_domain(double t) const { return t >= domain_lo() && t <= domain_hi(); }
    const char* name() const {
        switch (kind) {
            case Weight::Exponential: return "exp";
            case Weight::Hermite: return "hermite";
            case Weight::SqrtExponential: return "sqrtexp";
            case Weight::Unit: return "unit";
        }
        return "?";
    }
};

double eval_weight(const WeightFamily& w, double t);

// w'(t)/w(t); t must be interior (SqrtExponential is singular at t = 0).
double eval_log_derivative(const WeightFamily& w, double t);

// w''(t)/w(t), used by second derivatives of the fundamental functions.
double eval_log_second(const WeightFamily& w, double t);

// For derivative formulas the branches are evaluated on all of R, past the
// weight's natural domain. These variants extend w smoothly (exp(-t) on R,
// exp(-sqrt(t)) for t >= 0 only).
double eval_weight_extended(const WeightFamily& w, double t);

}  // namespace wlil
