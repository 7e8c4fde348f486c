#include "whls/grid.hpp"

#include <algorithm>
#include <cmath>

#include "whls/quadrature.hpp"

namespace whls {

RadialGrid::RadialGrid(std::vector<double> radii) : r(std::move(radii)) {
    if (r.size() < 8) throw domain_error("RadialGrid: need at least 8 nodes");
    if (r.front() <= 0.0) throw domain_error("RadialGrid: radii must be positive");
    for (std::size_t i = 1; i < r.size(); ++i)
        if (!(r[i] > r[i - 1])) throw domain_error("RadialGrid: radii must be strictly increasing");
    log_r.resize(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) log_r[i] = std::log(r[i]);
}

RadialGrid RadialGrid::log_spaced(double r_min, double r_max, std::size_t count) {
    if (!(r_min > 0.0 && r_max > r_min)) throw domain_error("log_spaced: need 0 < r_min < r_max");
    if (count < 8) throw domain_error("log_spaced: need at least 8 nodes");
    const double x0 = std::log(r_min), x1 = std::log(r_max);
    std::vector<double> radii(count);
    for (std::size_t i = 0; i < count; ++i) {
        double t = static_cast<double>(i) / static_cast<double>(count - 1);
        radii[i] = std::exp(x0 + t * (x1 - x0));
    }
    radii.front() = r_min;
    radii.back() = r_max;
    return RadialGrid(std::move(radii));
}

RadialFunction::RadialFunction(RadialGrid g, std::vector<double> vals, double head, double tail)
    : grid(std::move(g)), values(std::move(vals)), head_exp(head), tail_exp(tail) {
    validate();
}

void RadialFunction::validate() const {
    if (values.size() != grid.size())
        throw domain_error("RadialFunction: values/grid size mismatch");
    for (double v : values)
        if (!(v > 0.0) || !std::isfinite(v))
            throw domain_error("RadialFunction: values must be positive and finite");
}

RadialFunction RadialFunction::pow(double e) const {
    std::vector<double> vals(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) vals[i] = std::pow(values[i], e);
    double tail = (tail_exp == kCompactTail) ? kCompactTail : tail_exp * e;
    return RadialFunction(grid, std::move(vals), head_exp * e, tail);
}

// Index of the leftmost node of an m-point stencil around x.
static std::size_t stencil_start(const std::vector<double>& xs, double x, std::size_t m) {
    auto it = std::lower_bound(xs.begin(), xs.end(), x);
    std::size_t i = static_cast<std::size_t>(it - xs.begin());
    std::size_t start = (i > m / 2) ? i - m / 2 : 0;
    if (start + m > xs.size()) start = xs.size() - m;
    return start;
}

double RadialFunction::value_at(double radius) const {
    if (!(radius > 0.0)) throw domain_error("value_at: radius must be positive");
    if (radius < grid.front())
        return values.front() * std::pow(radius / grid.front(), head_exp);
    if (radius > grid.back()) {
        if (tail_exp == kCompactTail) return 0.0;
        return values.back() * std::pow(radius / grid.back(), tail_exp);
    }
    const std::size_t m = std::min<std::size_t>(6, grid.size());
    const double x = std::log(radius);
    std::size_t s = stencil_start(grid.log_r, x, m);
    double w[6];
    lagrange_weights(grid.log_r.data() + s, static_cast<int>(m), x, w);
    double acc = 0.0;
    for (std::size_t j = 0; j < m; ++j) acc += w[j] * std::log(values[s + j]);
    return std::exp(acc);
}

double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    return sxy / sxx;
}

double RadialFunction::fit_head_exp(std::size_t count) const {
    count = std::min(count, size());
    std::vector<double> xs(grid.log_r.begin(), grid.log_r.begin() + count);
    std::vector<double> ys(count);
    for (std::size_t i = 0; i < count; ++i) ys[i] = std::log(values[i]);
    return least_squares_slope(xs, ys);
}

double RadialFunction::fit_tail_exp(std::size_t count) const {
    count = std::min(count, size());
    const std::size_t off = size() - count;
    std::vector<double> xs(grid.log_r.begin() + off, grid.log_r.end());
    std::vector<double> ys(count);
    for (std::size_t i = 0; i < count; ++i) ys[i] = std::log(values[off + i]);
    return least_squares_slope(xs, ys);
}

std::vector<double> radial_derivative(const RadialFunction& f) {
    const std::size_t n = f.size();
    if (n < 4) throw domain_error("radial_derivative: need at least 4 nodes");
    f.validate();
    const std::size_t m = std::min<std::size_t>(5, n);
    std::vector<double> logv(n);
    for (std::size_t i = 0; i < n; ++i) logv[i] = std::log(f.values[i]);
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t s = (i > m / 2) ? i - m / 2 : 0;
        if (s + m > n) s = n - m;
        double dlog = lagrange_derivative(f.grid.log_r.data() + s, logv.data() + s,
                                          static_cast<int>(m), f.grid.log_r[i]);
        out[i] = f.values[i] * dlog / f.grid.r[i];
    }
    return out;
}

} // namespace whls
