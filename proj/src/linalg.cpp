#include "wlil/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "wlil/weights.hpp"

namespace wlil {

Mat Mat::drop_row(int r) const {
    Mat m(rows - 1, cols);
    int rr = 0;
    for (int i = 0; i < rows; ++i) {
        if (i == r) continue;
        for (int j = 0; j < cols; ++j) m.at(rr, j) = at(i, j);
        ++rr;
    }
    return m;
}

Mat Mat::drop_col(int c) const {
    Mat m(rows, cols - 1);
    for (int i = 0; i < rows; ++i) {
        int cc = 0;
        for (int j = 0; j < cols; ++j) {
            if (j == c) continue;
            m.at(i, cc++) = at(i, j);
        }
    }
    return m;
}

Mat Mat::transposed() const {
    Mat m(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(j, i) = at(i, j);
    return m;
}

namespace {

// LU factorization with partial pivoting, in place. Returns the permutation
// sign, or 0 when a pivot column is exactly empty (hard singularity).
int lu_factor(Mat& m, std::vector<int>& piv) {
    const int n = m.rows;
    piv.resize(n);
    int sign = 1;
    for (int k = 0; k < n; ++k) {
        int p = k;
        for (int i = k + 1; i < n; ++i)
            if (std::abs(m.at(i, k)) > std::abs(m.at(p, k))) p = i;
        piv[k] = p;
        if (p != k) {
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
            sign = -sign;
        }
        if (m.at(k, k) == 0.0) return 0;
        for (int i = k + 1; i < n; ++i) {
            double f = m.at(i, k) / m.at(k, k);
            m.at(i, k) = f;
            for (int j = k + 1; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
        }
    }
    return sign;
}

}  // namespace

double lu_det(const Mat& m) {
    if (m.rows != m.cols) throw error("lu_det: matrix not square");
    Mat a = m;
    std::vector<int> piv;
    int sign = lu_factor(a, piv);
    if (sign == 0) return 0.0;
    double d = sign;
    for (int k = 0; k < a.rows; ++k) d *= a.at(k, k);
    return d;
}

std::vector<double> lu_solve(const Mat& m, const std::vector<double>& b) {
    if (m.rows != m.cols) throw error("lu_solve: matrix not square");
    if (static_cast<int>(b.size()) != m.rows) throw error("lu_solve: size mismatch");
    Mat a = m;
    std::vector<int> piv;
    if (lu_factor(a, piv) == 0) throw error("lu_solve: singular matrix");
    std::vector<double> y = b;
    const int n = a.rows;
    for (int k = 0; k < n; ++k) {
        std::swap(y[k], y[piv[k]]);
        for (int i = k + 1; i < n; ++i) y[i] -= a.at(i, k) * y[k];
    }
    for (int i = n - 1; i >= 0; --i) {
        for (int j = i + 1; j < n; ++j) y[i] -= a.at(i, j) * y[j];
        y[i] /= a.at(i, i);
    }
    return y;
}

double cond_inf(const Mat& m) {
    if (m.rows != m.cols) throw error("cond_inf: matrix not square");
    const int n = m.rows;
    auto norm_inf = [&](const Mat& a) {
        double best = 0.0;
        for (int i = 0; i < n; ++i) {
            double s = 0.0;
            for (int j = 0; j < n; ++j) s += std::abs(a.at(i, j));
            best = std::max(best, s);
        }
        return best;
    };
    Mat inv(n, n);
    try {
        for (int j = 0; j < n; ++j) {
            std::vector<double> e(n, 0.0);
            e[j] = 1.0;
            std::vector<double> col = lu_solve(m, e);
            for (int i = 0; i < n; ++i) inv.at(i, j) = col[i];
        }
    } catch (const error&) {
        return std::numeric_limits<double>::infinity();
    }
    return norm_inf(m) * norm_inf(inv);
}

double hadamard_rows(const Mat& m) {
    double p = 1.0;
    for (int i = 0; i < m.rows; ++i) {
        double s = 0.0;
        for (int j = 0; j < m.cols; ++j) s += m.at(i, j) * m.at(i, j);
        p *= std::sqrt(s);
    }
    return p;
}

}  // namespace wlil
