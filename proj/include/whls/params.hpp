#pragma once

#include <cmath>

#include "whls/errors.hpp"

namespace whls {

// Problem parameters of the weighted Hardy-Sobolev integral system
//
//   u(x) = c1(x) \int v(y)^q / (|x-y|^{n-a} |y|^{s1}) dy
//   v(x) = c2(x) \int u(y)^p / (|x-y|^{n-a} |y|^{s2}) dy
//
// Scalar mode is the view sigma1 = sigma2 and p = q.
struct Params {
    int n = 3;          // spatial dimension, n >= 3
    double alpha = 2.0; // kernel order, 0 < alpha < n
    double sigma1 = 0.0;
    double sigma2 = 0.0;
    double p = 1.0; // exponent on u, > 0
    double q = 1.0; // exponent on v, > 0

    static Params scalar(int n, double alpha, double sigma, double p) {
        return Params{n, alpha, sigma, sigma, p, p};
    }

    bool is_scalar() const { return sigma1 == sigma2 && p == q; }
    double pq() const { return p * q; }

    void validate() const {
        if (n < 3) throw domain_error("Params: n must be >= 3");
        if (!(alpha > 0.0 && alpha < static_cast<double>(n)))
            throw domain_error("Params: alpha must lie in (0, n)");
        if (!(p > 0.0 && q > 0.0)) throw domain_error("Params: p, q must be > 0");
        if (!std::isfinite(sigma1) || !std::isfinite(sigma2))
            throw domain_error("Params: sigma must be finite");
    }

    // The quadrature backend needs alpha > 1 (diagonal integrability).
    void validate_for_quadrature() const {
        validate();
        if (!(alpha > 1.0))
            throw domain_error("Params: quadrature support requires alpha > 1");
    }
};

} // namespace whls
