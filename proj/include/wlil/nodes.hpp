#pragma once

#include <limits>
#include <vector>

#include "wlil/weights.hpp"

namespace wlil {

enum class SystemKind { YnHalfline, Hybrid, HermiteLine, FiniteInterval };

// Strictly increasing nodes x_0 < ... < x_n. Halfline systems pin x_0 = 0.
struct NodeSystem {
    SystemKind system = SystemKind::Hybrid;
    std::vector<double> x;

    int n() const { return static_cast<int>(x.size()) - 1; }
    bool hybrid() const { return system == SystemKind::Hybrid; }
};

NodeSystem make_system(SystemKind kind, std::vector<double> nodes);

// Interval bounds; lo/hi are +-inf for the unbounded end intervals.
struct Interval {
    double lo, hi;
    bool bounded() const {
        return std::isfinite(lo) && std::isfinite(hi);
    }
};

// Intervals are indexed I_k = [x_{k-1}, x_k] for 1 <= k <= n, plus
// I_{n+1} = [x_n, inf) on the halfline / real line, and I_0 = (-inf, x_0]
// where the domain extends left of x_0 (HermiteLine; hybrid root bookkeeping).
Interval interval_bounds(const NodeSystem& xs, int i);

// Smallest/largest interval index meaningful for maxima of this system.
int first_interval(const NodeSystem& xs);
int last_interval(const NodeSystem& xs);

// Index i with t in I_i (clamped to the valid range for the system).
int interval_of(const NodeSystem& xs, double t);

inline const char* system_name(SystemKind k) {
    switch (k) {
        case SystemKind::YnHalfline: return "halfline";
        case SystemKind::Hybrid: return "hybrid";
        case SystemKind::HermiteLine: return "hermite-line";
        case SystemKind::FiniteInterval: return "finite-interval";
    }
    return "?";
}

}  // namespace wlil
