#pragma once

#include <vector>

#include "whls/grid.hpp"
#include "whls/params.hpp"

namespace whls {

// |S^{n-1}| = 2 pi^{n/2} / Gamma(n/2)
double sphere_area(int n);

// WHLS_THREADS if set, else hardware concurrency (>= 1).
unsigned default_thread_count();

struct QuadratureConfig {
    int radial_gl = 12;        // Gauss-Legendre points per radial panel (log s)
    int angular_gl = 24;       // Gauss-Legendre points per angular panel
    int grading_levels = 12;   // geometric subpanels toward the diagonal
    double rel_tol = 1e-8;     // per-entry relative target the defaults are sized for
};

// Surface average of |x-y|^{alpha-n} over the sphere |y| = s, at |x| = r,
// including the (n-2)-sphere measure:
//   A(r,s) = |S^{n-2}| \int_{-1}^{1} (r^2+s^2-2rst)^{(alpha-n)/2} (1-t^2)^{(n-3)/2} dt.
// Requires 1 < alpha < n. Finite at r = s (exact Beta closed form there).
double angular_kernel(double r, double s, int n, double alpha,
                      const QuadratureConfig& cfg = {});

// Dense discretization of f -> P[f](r_i) = \int_0^inf s^{n-1-sigma} A(r_i,s) f(s) ds.
// entries fold panel quadrature and 6-point interpolation weights, so
// entries * nodal values covers [r_1, r_N]; the head/tail bases close the
// integral analytically against the power-law extrapolant:
//   head: A(r,s) ~ |S^{n-1}| r^{alpha-n}  (s -> 0)
//   tail: A(r,s) ~ |S^{n-1}| s^{alpha-n}  (s -> inf)
struct KernelMatrix {
    int n = 3;
    double alpha = 2.0;
    double sigma = 0.0;
    RadialGrid source;
    RadialGrid target;
    std::vector<double> entries;   // target.size() x source.size(), row-major
    std::vector<double> head_base; // |S^{n-1}| r_i^{alpha-n} r_1^{n-sigma}
    double tail_base = 0.0;        // |S^{n-1}| r_N^{alpha-sigma}

    // P[f] on the target grid, head/tail exponents fitted from the result.
    RadialFunction apply(const RadialFunction& f) const;

    // Raw potential values (no fitting).
    std::vector<double> apply_values(const RadialFunction& f) const;
};

KernelMatrix assemble_kernel(const RadialGrid& source, const RadialGrid& target,
                             int n, double alpha, double sigma,
                             const QuadratureConfig& cfg = {});

// Weighted Riesz potential of radial data, evaluated on f's own grid.
RadialFunction riesz_potential(const RadialFunction& f, double sigma, const Params& params,
                               const QuadratureConfig& cfg = {});

// Same, on an explicit target grid.
RadialFunction riesz_potential(const RadialFunction& f, double sigma, const Params& params,
                               const RadialGrid& target, const QuadratureConfig& cfg = {});

// Convergence tests used by apply(); exposed for direct checks.
bool head_integrable(int n, double sigma, double head_exp);
bool tail_integrable(double alpha, double sigma, double tail_exp);

} // namespace whls
