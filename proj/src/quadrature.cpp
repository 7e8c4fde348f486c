#include "whls/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace whls {

static GaussRule make_gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double pi = 3.14159265358979323846;
    for (int k = 0; k < (n + 1) / 2; ++k) {
        // Chebyshev-based initial guess, then Newton on P_n.
        double x = std::cos(pi * (k + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.nodes[k] = -x;
        rule.weights[k] = w;
        rule.nodes[n - 1 - k] = x;
        rule.weights[n - 1 - k] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

const GaussRule& gauss_legendre(int order) {
    static std::mutex mtx;
    static std::map<int, GaussRule> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, make_gauss_legendre(order)).first;
    return it->second;
}

void lagrange_weights(const double* xs, int m, double x, double* w) {
    for (int j = 0; j < m; ++j) {
        double num = 1.0, den = 1.0;
        for (int k = 0; k < m; ++k) {
            if (k == j) continue;
            num *= (x - xs[k]);
            den *= (xs[j] - xs[k]);
        }
        w[j] = num / den;
    }
}

double lagrange_derivative(const double* xs, const double* ys, int m, double x) {
    // d/dx of the Lagrange form: sum_j y_j * sum_{i != j} prod_{k != i,j} (x-x_k) / prod_{k != j}(x_j-x_k)
    double result = 0.0;
    for (int j = 0; j < m; ++j) {
        double den = 1.0;
        for (int k = 0; k < m; ++k)
            if (k != j) den *= (xs[j] - xs[k]);
        double sum = 0.0;
        for (int i = 0; i < m; ++i) {
            if (i == j) continue;
            double prod = 1.0;
            for (int k = 0; k < m; ++k) {
                if (k == i || k == j) continue;
                prod *= (x - xs[k]);
            }
            sum += prod;
        }
        result += ys[j] * sum / den;
    }
    return result;
}

} // namespace whls
