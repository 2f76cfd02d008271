#pragma once

#include <string>
#include <vector>

#include "wlil/basis.hpp"

namespace wlil {

// Sign pattern eps_{k,i} = (-1)^(k+1-i+[i<=k]). Valid for k in 0..n+1 (k = n+1
// addresses the hybrid tail) and i in 0..n+1 (i = 0 is the left end interval of
// systems on the whole line).
inline double sign_eps(int k, int i) {
    int e = k + 1 - i + (i <= k ? 1 : 0);
    return (e % 2 + 2) % 2 ? -1.0 : 1.0;
}

// Branch P_i: the signed combination of fundamental functions that agrees with
// the Lebesgue function on I_i and extends to the whole line.
double eval_branch(const WeightFamily& w, const NodeSystem& xs, int i, double t);
double eval_branch_deriv(const WeightFamily& w, const NodeSystem& xs, int i, double t);
double eval_branch_deriv2(const WeightFamily& w, const NodeSystem& xs, int i, double t);

// Hybrid branches have the finite limit eps_{n+1,i} = (-1)^(n-i+1) at +inf.
double branch_limit_at_infinity(const NodeSystem& xs, int i);

// Lebesgue function: sum of |h_k| (plus |h_{n+1}| for hybrid).
double eval_lebesgue(const WeightFamily& w, const NodeSystem& xs, double t);

enum class MaxLocation { Interior, LeftEndpoint, AtInfinityFlat };

inline const char* location_name(MaxLocation l) {
    switch (l) {
        case MaxLocation::Interior: return "interior";
        case MaxLocation::LeftEndpoint: return "endpoint";
        case MaxLocation::AtInfinityFlat: return "at-infinity";
    }
    return "?";
}

// Maximum of the Lebesgue function over I_i. "LeftEndpoint" means the maximum
// sits at a finite endpoint of the interval (z tells which one; endpoint ties
// report the left end). AtInfinityFlat marks a supremum only approached at
// infinity (z = +-inf, m = the limit); it does not occur for the shipped
// weights but keeps the classification total.
struct IntervalMaximum {
    int i = 0;
    double m = 0.0;
    double z = 0.0;
    MaxLocation location = MaxLocation::Interior;
    bool nonunique_risk = false;  // two near-equal local maxima detected
};

IntervalMaximum interval_maximum(const WeightFamily& w, const NodeSystem& xs, int i);

// All interval maxima of the system, indexed by interval (first..last).
std::vector<IntervalMaximum> all_maxima(const WeightFamily& w, const NodeSystem& xs);

}  // namespace wlil
