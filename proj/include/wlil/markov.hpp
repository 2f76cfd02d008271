#pragma once

#include <string>
#include <vector>

#include "wlil/interlacing.hpp"
#include "wlil/rootfind.hpp"

namespace wlil {

// Interlacing-inheritance verdict for a pair f, g of hybrid polynomials
// (f = e^{-t} p + c). "Same manner" means the derivative roots alternate
// starting and ending the way the case taxonomy predicts.
struct MarkovVerdict {
    std::vector<double> u, v;    // roots of f and g
    std::vector<double> xi, eta; // roots of f' and g'
    bool zeros_interlace = false;
    bool derivatives_inherit = false;
    int case_label = 0;          // 1..5; 0 = no case applies
    bool phi_sign_constant = false;  // phi = f' g - f g' on the sampling grid
    int phi_sign = 0;                // sign when constant
    bool degenerate = false;         // double-root tolerance tripped
    std::string detail;
};

MarkovVerdict verify_markov_pair(const HybridPoly& f, const HybridPoly& g);

// The branch P_i written out as an explicit hybrid polynomial (exp weight):
// P_i = e^{-t} p_i(t) + limit, with p_i expanded to monomial coefficients.
HybridPoly branch_as_hybrid_poly(const NodeSystem& xs, int i);

// (-1)^(n+1-i) P_i: the normalization that makes the constant term +1, the
// form the pair taxonomy is stated for.
HybridPoly normalized_branch(const NodeSystem& xs, int i);

// Which case a normalized branch pair (i < j) lands in, and in which order the
// pair is fed to the checker. swap == true means (f,g) = (branch j, branch i).
struct PairPlan {
    int case_label = 0;
    bool swap = false;
};
PairPlan plan_branch_pair(int i, int j, int r, bool a_r_zero);

// Root count vs. sign(a c) for a hybrid polynomial of polynomial degree n:
// n real roots forces sign(a c) >= 0, n+1 roots forces sign(a c) < 0.
struct SignLawReport {
    int degree = 0;
    int root_count = 0;
    double a = 0.0, c = 0.0;
    int sign_ac = 0;
    bool law_holds = false;    // vacuously true below n roots
    bool inconsistent = false; // count above n+1: arithmetic trouble
};

SignLawReport coeff_sign_law(const HybridPoly& f);

}  // namespace wlil
