#pragma once

#include <vector>

#include "wlil/nodes.hpp"
#include "wlil/weights.hpp"

namespace wlil {

// Unweighted Lagrange basis: ell_k(t) = prod_{j != k} (t - x_j)/(x_k - x_j).
// All evaluation sticks to the product form; nothing is expanded to monomials.
double eval_ell(const NodeSystem& xs, int k, double t);
double eval_ell_deriv(const NodeSystem& xs, int k, double t);
double eval_ell_deriv2(const NodeSystem& xs, int k, double t);

// Leading coefficients b_k = prod_{j != k} 1/(x_k - x_j); sign (-1)^(n-k).
std::vector<double> leading_b(const NodeSystem& xs);

// Weighted fundamental functions h_k(t) = (w(t)/w(x_k)) ell_k(t).
double eval_h(const WeightFamily& w, const NodeSystem& xs, int k, double t);
double eval_h_deriv(const WeightFamily& w, const NodeSystem& xs, int k, double t);
double eval_h_deriv2(const WeightFamily& w, const NodeSystem& xs, int k, double t);

// Hybrid tail element h_{n+1}(t) = 1 - sum_k h_k(t); vanishes at every node and
// tends to 1 at infinity. Only defined for hybrid systems.
double eval_h_hybrid_tail(const WeightFamily& w, const NodeSystem& xs, double t);
double eval_h_hybrid_tail_deriv(const WeightFamily& w, const NodeSystem& xs, double t);
double eval_h_hybrid_tail_deriv2(const WeightFamily& w, const NodeSystem& xs, double t);

}  // namespace wlil
