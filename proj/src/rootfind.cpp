#include "wlil/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace wlil {

namespace {

int sgn(double v) { return (v > 0.0) - (v < 0.0); }

std::string bracket_msg(const char* who, double lo, double hi, double flo, double fhi) {
    return std::string(who) + ": no sign change on [" + std::to_string(lo) + ", " +
           std::to_string(hi) + "], f = " + std::to_string(flo) + " / " +
           std::to_string(fhi);
}

}  // namespace

double bisect(const Fn& f, double lo, double hi, double width) {
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (sgn(flo) == sgn(fhi)) throw error(bracket_msg("bisect", lo, hi, flo, fhi));
    for (int it = 0; it < 240 && (hi - lo) > width; ++it) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // ran out of doubles
        double fm = f(mid);
        if (fm == 0.0) return mid;
        if (sgn(fm) == sgn(flo)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double bisect_polished(const Fn& f, const Fn& fprime, double lo, double hi, double width) {
    double t = bisect(f, lo, hi, width);
    // One guarded Newton step: keep it only if it stays in the bracket and
    // actually shrinks the residual.
    double ft = f(t);
    double d = fprime(t);
    if (d != 0.0 && std::isfinite(d)) {
        double t2 = t - ft / d;
        if (t2 >= lo && t2 <= hi && std::abs(f(t2)) < std::abs(ft)) t = t2;
    }
    return t;
}

bool expand_bracket_right(const Fn& f, double lo, double step, double limit, double& hi) {
    double flo = f(lo);
    double span = step;
    while (span <= limit) {
        hi = lo + span;
        double fhi = f(hi);
        if (fhi == 0.0 || sgn(fhi) != sgn(flo)) return true;
        span *= 2.0;
    }
    return false;
}

bool expand_bracket_left(const Fn& f, double hi, double step, double limit, double& lo) {
    double fhi = f(hi);
    double span = step;
    while (span <= limit) {
        lo = hi - span;
        double flo = f(lo);
        if (flo == 0.0 || sgn(flo) != sgn(fhi)) return true;
        span *= 2.0;
    }
    return false;
}

double central_derivative(const Fn& f, double x, double h0, double* err_out) {
    // Richardson tableau over central differences; the step shrinks by `con`
    // each row and every cell is an extrapolant. No early exit: the best cell
    // by error estimate wins (the first rows can be far off on stiff entries).
    constexpr int ntab = 18;
    constexpr double con = 1.5;
    const double con2 = con * con;
    double a[ntab][ntab];
    double h = h0;
    a[0][0] = (f(x + h) - f(x - h)) / (2.0 * h);
    double best = a[0][0];
    double best_err = std::numeric_limits<double>::infinity();
    for (int i = 1; i < ntab; ++i) {
        h /= con;
        a[i][0] = (f(x + h) - f(x - h)) / (2.0 * h);
        double fac = con2;
        for (int j = 1; j <= i; ++j) {
            a[i][j] = (a[i][j - 1] * fac - a[i - 1][j - 1]) / (fac - 1.0);
            fac *= con2;
            double err = std::abs(a[i][j] - a[i][j - 1]) +
                         std::abs(a[i][j] - a[i - 1][j - 1]);
            if (err <= best_err) {
                best_err = err;
                best = a[i][j];
            }
        }
    }
    if (err_out) *err_out = best_err;
    return best;
}

namespace {

double horner(const std::vector<double>& c, double t) {
    double v = 0.0;
    for (size_t i = c.size(); i-- > 0;) v = v * t + c[i];
    return v;
}

std::vector<double> poly_derivative(const std::vector<double>& c) {
    std::vector<double> d;
    for (size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * static_cast<double>(i));
    return d;
}

// Trim numeric-noise leading coefficients so degree-drop inputs behave.
std::vector<double> trimmed(std::vector<double> c) {
    double mx = 0.0;
    for (double v : c) mx = std::max(mx, std::abs(v));
    while (!c.empty() && std::abs(c.back()) <= 1e-13 * mx) c.pop_back();
    return c;
}

}  // namespace

std::vector<double> poly_real_roots(std::vector<double> coeffs) {
    std::vector<double> c = trimmed(std::move(coeffs));
    if (c.size() <= 1) return {};
    if (c.size() == 2) return {-c[0] / c[1]};
    if (c.size() == 3) {
        double a = c[2], b = c[1], c0 = c[0];
        double disc = b * b - 4.0 * a * c0;
        if (disc < 0.0) return {};
        if (disc == 0.0) return {-b / (2.0 * a)};
        double q = -0.5 * (b + (b >= 0.0 ? 1.0 : -1.0) * std::sqrt(disc));
        double r1 = q / a;
        double r2 = (q != 0.0) ? c0 / q : -b / a - r1;
        if (r1 > r2) std::swap(r1, r2);
        return {r1, r2};
    }

    // Split at the derivative's roots: the polynomial is monotone in between.
    std::vector<double> crit = poly_real_roots(poly_derivative(c));
    double lead = c.back();
    double bound = 0.0;
    for (size_t i = 0; i + 1 < c.size(); ++i)
        bound = std::max(bound, std::abs(c[i] / lead));
    bound += 1.0;

    std::vector<double> cuts;
    cuts.push_back(-bound);
    for (double t : crit)
        if (t > -bound && t < bound) cuts.push_back(t);
    cuts.push_back(bound);

    auto f = [&](double t) { return horner(c, t); };
    std::vector<double> roots;
    double width = 1e-14 * std::max(1.0, bound);
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        double lo = cuts[i], hi = cuts[i + 1];
        double flo = f(lo), fhi = f(hi);
        if (flo == 0.0 && (roots.empty() || roots.back() != lo)) {
            roots.push_back(lo);
            continue;
        }
        if (sgn(flo) != sgn(fhi) && sgn(flo) != 0 && sgn(fhi) != 0)
            roots.push_back(bisect(f, lo, hi, width));
        else if (fhi == 0.0 && i + 2 == cuts.size())
            roots.push_back(hi);
    }
    // The Cauchy bound brackets every real root, so no expansion is needed.
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [&](double p, double q) {
                                return std::abs(p - q) <= 1e-13 * std::max(1.0, bound);
                            }),
                roots.end());
    return roots;
}

int HybridPoly::degree() const {
    std::vector<double> t = trimmed(p);
    return static_cast<int>(t.size()) - 1;  // -1 for the zero polynomial
}

double HybridPoly::leading() const {
    std::vector<double> t = trimmed(p);
    return t.empty() ? 0.0 : t.back();
}

double HybridPoly::eval(double t) const { return std::exp(-t) * horner(p, t) + c; }

double HybridPoly::eval_deriv(double t) const {
    return std::exp(-t) * horner(deriv_poly(), t);
}

std::vector<double> HybridPoly::deriv_poly() const {
    // (e^{-t} p)' = e^{-t} (p' - p)
    std::vector<double> q(p.size(), 0.0);
    for (size_t i = 0; i < p.size(); ++i) {
        q[i] -= p[i];
        if (i + 1 < p.size()) q[i] += p[i + 1] * static_cast<double>(i + 1);
    }
    return q;
}

std::vector<double> real_roots(const HybridPoly& f) {
    std::vector<double> p = trimmed(f.p);
    if (p.empty()) return {};       // constant function
    if (f.c == 0.0) return poly_real_roots(p);  // exp factor never vanishes

    std::vector<double> crit = poly_real_roots(f.deriv_poly());
    std::sort(crit.begin(), crit.end());

    auto g = [&](double t) { return f.eval(t); };
    int deg = static_cast<int>(p.size()) - 1;
    double lead = p.back();
    // Sign of f at -infinity is ruled by e^{-t} p(t); at +infinity by c.
    int sign_left = sgn(lead) * ((deg % 2) ? -1 : 1);
    int sign_right = sgn(f.c);

    double span_ref = 1.0;
    for (double t : crit) span_ref = std::max(span_ref, std::abs(t));
    double cap = 65536.0 * (1.0 + span_ref);
    double width = 1e-13 * std::max(1.0, span_ref);

    std::vector<double> roots;
    if (crit.empty()) {
        if (sign_left != sign_right) {
            double lo = 0.0, hi = 0.0;
            int s0 = sgn(g(0.0));
            if (s0 == 0) return {0.0};
            if (s0 == sign_left) {
                if (expand_bracket_right(g, 0.0, 8.0, cap, hi))
                    roots.push_back(bisect(g, 0.0, hi, width));
            } else {
                if (expand_bracket_left(g, 0.0, 8.0, cap, lo))
                    roots.push_back(bisect(g, lo, 0.0, width));
            }
        }
        return roots;
    }

    // Left tail: monotone from -infinity down to the first critical point.
    if (sign_left != 0 && sgn(g(crit.front())) != 0 && sgn(g(crit.front())) != sign_left) {
        double lo = 0.0;
        if (expand_bracket_left(g, crit.front(), 8.0, cap, lo))
            roots.push_back(bisect(g, lo, crit.front(), width));
    } else if (g(crit.front()) == 0.0) {
        roots.push_back(crit.front());
    }
    // Interior monotone pieces.
    for (size_t i = 0; i + 1 < crit.size(); ++i) {
        double flo = g(crit[i]), fhi = g(crit[i + 1]);
        if (sgn(flo) != 0 && sgn(fhi) != 0 && sgn(flo) != sgn(fhi))
            roots.push_back(bisect(g, crit[i], crit[i + 1], width));
        else if (fhi == 0.0)
            roots.push_back(crit[i + 1]);
    }
    // Right tail: f tends to c monotonically past the last critical point.
    if (sgn(g(crit.back())) != 0 && sgn(g(crit.back())) != sign_right) {
        double hi = 0.0;
        if (expand_bracket_right(g, crit.back(), 8.0, cap, hi))
            roots.push_back(bisect(g, crit.back(), hi, width));
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

double golden_min(const Fn& f, double lo, double hi, double tol) {
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);  // 0.618...
    double a = lo, b = hi;
    double c1 = b - gr * (b - a);
    double c2 = a + gr * (b - a);
    double f1 = f(c1), f2 = f(c2);
    while (b - a > tol) {
        if (f1 <= f2) {
            b = c2;
            c2 = c1;
            f2 = f1;
            c1 = b - gr * (b - a);
            f1 = f(c1);
        } else {
            a = c1;
            c1 = c2;
            f1 = f2;
            c2 = a + gr * (b - a);
            f2 = f(c2);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace wlil
