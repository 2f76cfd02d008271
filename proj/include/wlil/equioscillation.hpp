#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "wlil/jacobian.hpp"

namespace wlil {

// Gamma(x) = (m_2 - m_1, ..., m_{n+1} - m_n): zero exactly at equioscillation.
std::vector<double> gamma_value(const WeightFamily& w, const NodeSystem& xs);

// Newton system for Gamma: row i is row i+1 of A minus row i of A.
Mat gamma_jacobian(const WeightFamily& w, const NodeSystem& xs);

struct SolveReport {
    std::vector<double> x;    // full node vector including the pinned x_0 = 0
    double residual = 0.0;    // ||Gamma||_inf at x
    double level = 0.0;       // common maximum value at the solution
    int iterations = 0;
    bool converged = false;
    double jac_det = 0.0;     // det of the Newton matrix at the last iterate
    std::vector<std::string> trace;
};

// Damped Newton for Gamma(x) = target (target zero = optimal nodes): step
// solved from the analytic Jacobian, scaled back to keep x_1 and all gaps
// >= 1e-6, then halved until the residual drops. Success = residual <= 1e-10.
SolveReport solve_gamma(const WeightFamily& w, int n,
                        const std::vector<double>& target,
                        const std::vector<double>* start = nullptr);

SolveReport solve_equioscillation(const WeightFamily& w, int n,
                                  const std::vector<double>* start = nullptr);

// Derivative-free minimax oracle: minimize max_i m_i over the free nodes.
// Golden section at n = 1, seeded multistart Nelder-Mead above. Returns the
// best value found; argmin written to *nodes_out (free nodes only).
double minimax_oracle(const WeightFamily& w, int n, uint64_t seed,
                      std::vector<double>* nodes_out = nullptr);

// Generic Nelder-Mead used by the oracle (exposed for tests).
double nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                   std::vector<double>& x, double scale, int max_iter,
                   double tol_diam, double tol_spread);

// Deterministic splitmix64; the project-wide uniform source.
struct SplitMix64 {
    uint64_t s = 0;
    explicit SplitMix64(uint64_t seed) : s(seed) {}
    uint64_t next() {
        s += 0x9E3779B97F4A7C15ull;
        uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

inline uint64_t trial_seed(uint64_t master, uint64_t trial) {
    return master ^ ((trial + 1) * 0x9E3779B97F4A7C15ull);
}

// Random hybrid system: x_0 = 0, free nodes sorted uniform on (0, 4n),
// redrawn while any gap is below 1e-3. Bit-reproducible for a given seed.
NodeSystem sample_system(int n, uint64_t seed);

struct MonteCarloReport {
    int trials = 0;
    int passes = 0;
    int failures = 0;
    std::vector<std::string> failure_notes;
    bool ok() const { return failures == 0 && trials == passes; }
};

// For random x distinct from the optimum: some maximum sits below the optimal
// level and some above (strictness margin 1e-12 relative).
MonteCarloReport sandwich_check(const WeightFamily& w, int n, int trials,
                                uint64_t seed, int workers = 1);

// For random pairs (x, z): each dominates the other in some coordinate of the
// maxima vector.
MonteCarloReport intertwining_check(const WeightFamily& w, int n, int trials,
                                    uint64_t seed, int workers = 1);

struct TargetProbe {
    std::vector<double> target;
    bool solved = false;
    double residual = 0.0;
    double scatter = 0.0;  // max pairwise distance between multistart answers
    std::vector<double> x; // representative solution (free nodes)
};

// Solve Gamma(x) = v for each target from several starts; records solvability
// and whether all starts land on one point.
std::vector<TargetProbe> gamma_surjectivity_probe(
    const WeightFamily& w, int n, const std::vector<std::vector<double>>& targets,
    int starts, uint64_t seed);

struct PropernessPoint {
    int p = 0;           // gap exponent: x = (0, 2^-p, 2)
    double gap = 0.0;
    double gamma_norm = 0.0;
};

// ||Gamma|| along the shrinking-gap path x(p) = (0, 2^-p, 2), p = 1..pmax.
std::vector<PropernessPoint> properness_probe(const WeightFamily& w, int pmax);

}  // namespace wlil
