#pragma once

#include <cmath>
#include <vector>

namespace wlil {

// Dense row-major matrix, sized for the tiny systems here (n <= 10 or so).
struct Mat {
    int rows = 0, cols = 0;
    std::vector<double> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0.0) {}
    double& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    double at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    Mat drop_row(int r) const;
    Mat drop_col(int c) const;
    Mat transposed() const;
};

// Determinant by LU with partial pivoting.
double lu_det(const Mat& m);

// Solve m y = b (square m); throws wlil::error on exact singularity.
std::vector<double> lu_solve(const Mat& m, const std::vector<double>& b);

// Infinity-norm condition estimate via the explicit inverse (fine at this size).
// Returns +inf for a singular matrix.
double cond_inf(const Mat& m);

// Product of the euclidean row norms (Hadamard bound); the relative scale used
// by the singularity test |det| <= 1e-10 * hadamard.
double hadamard_rows(const Mat& m);

inline bool singular_by_relative_det(double det, double hadamard) {
    return std::abs(det) <= 1e-10 * hadamard;
}

}  // namespace wlil
