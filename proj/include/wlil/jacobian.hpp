#pragma once

#include <string>
#include <vector>

#include "wlil/branches.hpp"
#include "wlil/interlacing.hpp"
#include "wlil/linalg.hpp"

namespace wlil {

// d m_i / d x_j at an interior maximum: -h_j(z_i) * (P_i)'(x_j). Throws when
// the maximum of interval i is not interior (no analytic gradient there).
double partial_m(const WeightFamily& w, const NodeSystem& xs,
                 const std::vector<IntervalMaximum>& maxima, int i, int j);

// Plain central difference of m_i under perturbation of node j.
double fd_partial_m(const WeightFamily& w, const NodeSystem& xs, int i, int j,
                    double step);

// Extrapolated central difference (Richardson tableau); the high-accuracy
// cross-check for the analytic formula.
double fd_partial_m_extrapolated(const WeightFamily& w, const NodeSystem& xs,
                                 int i, int j);

enum class JacobianMode { Auto, Analytic, FiniteDifference };

// The gradient matrix of the interval maxima and its row-deleted minors, plus
// the equivalent quotient matrix Q (hybrid only) and its column-deleted minors.
struct JacobianBundle {
    std::vector<int> row_index;   // interval index of each row of A
    std::vector<int> col_index;   // node index of each column of A
    Mat A;                        // A[row][col] = d m_row / d x_col
    std::vector<double> det_a;    // det of A with row k dropped, k = row_index
    std::vector<double> cond_a;   // condition estimate of each minor
    std::vector<bool> singular_a; // relative-determinant test per minor

    bool has_q = false;           // Q only exists with all maxima interior
    Mat Q;                        // Q[row][col] = q_{col+1}(x_{row+1}), hybrid
    std::vector<double> det_q;    // det of Q with column k dropped
    std::vector<bool> singular_q;

    JacobianMode mode_used = JacobianMode::Analytic;
    std::vector<IntervalMaximum> maxima;  // indexed like row_index
};

JacobianBundle build_bundle(const WeightFamily& w, const NodeSystem& xs,
                            JacobianMode mode = JacobianMode::Auto);

// q_i(t) = (P_i)'(t) / (t - z_i), with the 0/0 at z_i filled by the second
// derivative; continuous, and nonzero at every other argmax z_j.
double eval_q(const WeightFamily& w, const NodeSystem& xs,
              const std::vector<IntervalMaximum>& maxima, int i, double t);

// The three root-placement properties of the q_i, checked off the derivative
// root table: values at the z_j nonzero; one root per admissible window
// [z_j, z_{j+1}]; no root in [z_{i-1}, z_{i+1}] around the cancelled zero.
// Only definite violations fail a flag; values or borders too close to call
// at working precision are counted in `ties` (clustered nodes shrink the
// true margins without bound, so a hard threshold would misfire there).
struct QPropertyReport {
    bool values_nonzero = true;      // false only on an exact zero
    bool one_root_per_window = true;
    bool diagonal_window_clean = true;
    int ties = 0;
    std::vector<std::string> witnesses;

    bool all() const {
        return values_nonzero && one_root_per_window && diagonal_window_clean;
    }
};

QPropertyReport check_q_properties(const WeightFamily& w, const NodeSystem& xs,
                                   const DerivRootTable& dt,
                                   const std::vector<IntervalMaximum>& maxima);

}  // namespace wlil
