#include "wlil/weights.hpp"

#include <cmath>

namespace wlil {

double eval_weight(const WeightFamily& w, double t) {
    if (!w.in_domain(t)) throw error("eval_weight: t outside the weight's domain");
    return eval_weight_extended(w, t);
}

double eval_weight_extended(const WeightFamily& w, double t) {
    switch (w.kind) {
        case Weight::Exponential: return std::exp(-t);
        case Weight::Hermite: return std::exp(-t * t);
        case Weight::SqrtExponential:
            if (t < 0.0) throw error("sqrt-exponential weight has no extension below 0");
            return std::exp(-std::sqrt(t));
        case Weight::Unit: return 1.0;
    }
    throw error("eval_weight_extended: bad weight kind");
}

double eval_log_derivative(const WeightFamily& w, double t) {
    switch (w.kind) {
        case Weight::Exponential: return -1.0;
        case Weight::Hermite: return -2.0 * t;
        case Weight::SqrtExponential:
            if (t <= 0.0) throw error("sqrt-exponential log-derivative is singular at 0");
            return -0.5 / std::sqrt(t);
        case Weight::Unit: return 0.0;
    }
    throw error("eval_log_derivative: bad weight kind");
}

double eval_log_second(const WeightFamily& w, double t) {
    switch (w.kind) {
        case Weight::Exponential: return 1.0;
        case Weight::Hermite: return 4.0 * t * t - 2.0;
        case Weight::SqrtExponential: {
            if (t <= 0.0) throw error("sqrt-exponential log-second is singular at 0");
            double rt = std::sqrt(t);
            return 0.25 / t + 0.25 / (t * rt);
        }
        case Weight::Unit: return 0.0;
    }
    throw error("eval_log_second: bad weight kind");
}

}  // namespace wlil
