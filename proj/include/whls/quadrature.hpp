#pragma once

#include <cstddef>
#include <vector>

namespace whls {

// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Nodes/weights computed by Newton iteration on P_n, cached per order.
const GaussRule& gauss_legendre(int order);

// Barycentric-free Lagrange basis values: w[j] = L_j(x) for the nodes xs.
// Exact partition of unity up to rounding.
void lagrange_weights(const double* xs, int m, double x, double* w);

// Derivative of the interpolating polynomial through (xs, ys) at x.
double lagrange_derivative(const double* xs, const double* ys, int m, double x);

} // namespace whls
