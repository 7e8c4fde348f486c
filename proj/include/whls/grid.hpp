#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "whls/errors.hpp"

namespace whls {

// Strictly increasing positive radii. Built log-spaced by default; the
// log coordinates are kept alongside since all interpolation and
// quadrature happens in log r.
struct RadialGrid {
    std::vector<double> r;
    std::vector<double> log_r;

    RadialGrid() = default;
    explicit RadialGrid(std::vector<double> radii);

    static RadialGrid log_spaced(double r_min, double r_max, std::size_t count);

    std::size_t size() const { return r.size(); }
    double front() const { return r.front(); }
    double back() const { return r.back(); }
    bool operator==(const RadialGrid& other) const { return r == other.r; }
};

// Compact-support marker for tail_exp: no mass beyond the last node.
inline constexpr double kCompactTail = -std::numeric_limits<double>::infinity();

// Log-grid samples of a positive radial function with power-law
// extrapolation:
//   f(r) = f(r_1) (r/r_1)^{head_exp}   for r < r_1
//   f(r) = f(r_N) (r/r_N)^{tail_exp}   for r > r_N   (0 if tail_exp = -inf)
struct RadialFunction {
    RadialGrid grid;
    std::vector<double> values;
    double head_exp = 0.0;
    double tail_exp = 0.0;

    RadialFunction() = default;
    RadialFunction(RadialGrid g, std::vector<double> vals, double head, double tail);

    std::size_t size() const { return values.size(); }

    // Pointwise power f^e (positive data, exponents scale by e).
    RadialFunction pow(double e) const;

    // Interpolated value at arbitrary radius (6-point Lagrange on
    // (log r, log f); exact on power laws). Extrapolation per the
    // head/tail rule.
    double value_at(double radius) const;

    // Least-squares log-log slope over the first / last `count` nodes.
    double fit_head_exp(std::size_t count = 5) const;
    double fit_tail_exp(std::size_t count = 5) const;

    void validate() const;
};

// Sample an analytic positive radial function onto a grid.
template <class F>
RadialFunction sample(const RadialGrid& grid, F&& f, double head_exp, double tail_exp) {
    std::vector<double> vals(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) vals[i] = f(grid.r[i]);
    return RadialFunction(grid, std::move(vals), head_exp, tail_exp);
}

// Derivative samples f'(r_i): 5-point differentiation of log f in log r
// (exact on power laws), one-sided stencils at the ends.
std::vector<double> radial_derivative(const RadialFunction& f);

// Least-squares slope of (x, y) pairs.
double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y);

} // namespace whls
