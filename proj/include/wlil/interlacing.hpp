#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "wlil/branches.hpp"
#include "wlil/linalg.hpp"

namespace wlil {

// Leading coefficients of the polynomial parts of the hybrid branches. The
// signed sequence c_i = (-1)^(n+1+i) a_i increases strictly in i, starts
// negative and ends positive; r marks where the sign flips.
struct CoefficientReport {
    std::vector<double> a;  // a[i], i = 1..n+1 (a[0] unused)
    std::vector<double> b;  // Lagrange leading coefficients b[k], k = 0..n
    int r = 1;              // last index with c_r <= 0 (1 <= r <= n)
    bool a_r_zero = false;  // |a_r| below the relative tolerance
    double scale = 0.0;     // sum_k |b_k| e^{x_k}, the natural size of the a_i
};

CoefficientReport leading_a(const NodeSystem& xs);

// Interval indices where branch i is guaranteed a (single, simple) root:
// {0..n+1} minus {i} when i < r, or i == r with a_r != 0; the unbounded left
// interval 0 drops out otherwise.
std::vector<int> index_set(const CoefficientReport& cr, int i, int n);

// Roots of the branches, one per interval of the index set. y[i][k] holds the
// root of branch i in interval k, NaN where k is outside the index set.
struct RootTable {
    int n = 0;
    CoefficientReport coeff;
    std::vector<std::vector<int>> J;     // J[i], i = 1..n+1
    std::vector<std::vector<double>> y;  // y[i][k], (n+2) x (n+2), NaN = absent

    bool has(int i, int k) const { return !std::isnan(y[i][k]); }
};

RootTable branch_roots(const WeightFamily& w, const NodeSystem& xs);

// Roots of the branch derivatives. W[i] is sorted; every branch contributes
// n elements, where branch r donates a synthetic padding element below
// everything else when a_r = 0 (only its order matters).
struct DerivRootTable {
    int n = 0;
    std::vector<std::vector<double>> W;  // W[i], i = 1..n+1, each sorted
    std::vector<double> z;               // z[i] = argmax of branch i in I_i
    bool augmented = false;              // W[r] got the synthetic element
    int r = 1;
    double synthetic = std::numeric_limits<double>::quiet_NaN();
};

DerivRootTable deriv_roots(const WeightFamily& w, const NodeSystem& xs,
                           const RootTable& rt,
                           const std::vector<IntervalMaximum>& maxima);

// Ordering checks run at floating-point resolution: res = 1e-10 * max(1, x_n).
// Adjacent values closer than res are recorded as ties, not failures; a
// reversal beyond res is a definite violation.
struct OrderingVerdict {
    bool ok = true;  // no definite violations
    int comparisons = 0;
    int ties = 0;
    int violations = 0;
    double min_margin = std::numeric_limits<double>::infinity();  // resolved only
    double resolution = 0.0;
    std::vector<std::string> notes;  // one line per tie/violation
};

// The full left-to-right chain over all roots and nodes: inside interval k the
// branch roots appear with branch index running k-1,...,1,n+1,...,k+1; the
// left tail interval carries r,...,1 and the right tail n,...,1.
OrderingVerdict verify_ordering(const NodeSystem& xs, const RootTable& rt);

// Two-branch comparisons: for branches i < j sharing interval k, the root of j
// comes first when k < i or k > j, and the root of i comes first in between.
OrderingVerdict verify_pairwise(const NodeSystem& xs, const RootTable& rt);

// Pairwise precedence of the derivative-root sequences in the cyclic order
// r, r-1, ..., 1, n+1, n, ..., r+1: if u precedes v then
// u[0] < v[0] < u[1] < v[1] < ... (checked for every pair, not just neighbors).
OrderingVerdict verify_w_order(const DerivRootTable& dt);

// Window counts: every [z_j, z_{j+1}] holds exactly n+1 derivative roots from
// the union of the W[i] (synthetic elements excluded). Roots within res of a
// window edge make the count a bracket, reported as ties.
OrderingVerdict verify_window_counts(const DerivRootTable& dt, const NodeSystem& xs);

// All roots simple: |(P_i)'(root)| > 1e-8 * local derivative scale.
OrderingVerdict verify_simple_roots(const WeightFamily& w, const NodeSystem& xs,
                                    const RootTable& rt);

double ordering_resolution(const NodeSystem& xs);

}  // namespace wlil
