#include "whls/pohozaev.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "whls/kernel.hpp"
#include "whls/quadrature.hpp"

namespace whls {

namespace {

// Interpolant of log u over log r (6-point Lagrange), with value and
// log-derivative; exact on power laws.
struct LogInterp {
    const RadialFunction* f;
    std::vector<double> logv;

    explicit LogInterp(const RadialFunction& fn) : f(&fn), logv(fn.size()) {
        for (std::size_t i = 0; i < fn.size(); ++i) logv[i] = std::log(fn.values[i]);
    }

    void eval(double x, double& log_value, double& dlog) const {
        const auto& xs = f->grid.log_r;
        const std::size_t m = std::min<std::size_t>(6, xs.size());
        auto it = std::lower_bound(xs.begin(), xs.end(), x);
        std::size_t s = static_cast<std::size_t>(it - xs.begin());
        s = (s > m / 2) ? s - m / 2 : 0;
        if (s + m > xs.size()) s = xs.size() - m;
        double w[6];
        lagrange_weights(xs.data() + s, static_cast<int>(m), x, w);
        log_value = 0.0;
        for (std::size_t j = 0; j < m; ++j) log_value += w[j] * logv[s + j];
        dlog = lagrange_derivative(xs.data() + s, logv.data() + s, static_cast<int>(m), x);
    }
};

// Composite GL panels between nodes in log r of integrand(x, log u(x), dlog u(x)).
template <class F>
double interior_integral(const RadialFunction& u, F&& integrand, int gl_order = 12) {
    const LogInterp interp(u);
    const GaussRule& rule = gauss_legendre(gl_order);
    double total = 0.0;
    const auto& xs = u.grid.log_r;
    for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
        const double mid = 0.5 * (xs[k] + xs[k + 1]);
        const double half = 0.5 * (xs[k + 1] - xs[k]);
        double acc = 0.0;
        for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
            const double x = mid + half * rule.nodes[j];
            double lv, dl;
            interp.eval(x, lv, dl);
            acc += rule.weights[j] * integrand(x, lv, dl);
        }
        total += acc * half;
    }
    return total;
}

constexpr double kResidualFloor = 1e-300;

} // namespace

IdentityReport make_report(std::string name, double lhs, double rhs) {
    IdentityReport rep;
    rep.identity_name = std::move(name);
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.residual = std::abs(lhs - rhs) /
                   std::max({std::abs(lhs), std::abs(rhs), kResidualFloor});
    return rep;
}

double weighted_energy(const RadialFunction& u, int n, double sigma, double s) {
    u.validate();
    const double head_pow = n - sigma + u.head_exp * s;
    if (!(head_pow > 0.0))
        throw divergence_error("weighted_energy: head exponent test failed (n - sigma + s*head <= 0)");
    double closure = std::pow(u.values.front(), s) *
                     std::pow(u.grid.front(), n - sigma) / head_pow;
    if (u.tail_exp != kCompactTail) {
        const double tail_pow = n - sigma + u.tail_exp * s;
        if (!(tail_pow < 0.0))
            throw divergence_error("weighted_energy: tail exponent test failed (n - sigma + s*tail >= 0)");
        closure += std::pow(u.values.back(), s) *
                   std::pow(u.grid.back(), n - sigma) / (-tail_pow);
    }
    const double interior = interior_integral(
        u, [&](double x, double lv, double) { return std::exp((n - sigma) * x + s * lv); });
    return sphere_area(n) * (interior + closure);
}

double virial_term(const RadialFunction& u, int n, double sigma, double p) {
    u.validate();
    const double s = p + 1.0;
    const double head_pow = n - sigma + u.head_exp * s;
    if (!(head_pow > 0.0))
        throw divergence_error("virial_term: head exponent test failed");
    double closure = u.head_exp * std::pow(u.values.front(), s) *
                     std::pow(u.grid.front(), n - sigma) / head_pow;
    if (u.tail_exp != kCompactTail) {
        const double tail_pow = n - sigma + u.tail_exp * s;
        if (!(tail_pow < 0.0))
            throw divergence_error("virial_term: tail exponent test failed");
        closure += u.tail_exp * std::pow(u.values.back(), s) *
                   std::pow(u.grid.back(), n - sigma) / (-tail_pow);
    }
    const double interior = interior_integral(
        u, [&](double x, double lv, double dl) { return std::exp((n - sigma) * x + s * lv) * dl; });
    return sphere_area(n) * (interior + closure);
}

IdentityReport ibp_identity(const RadialFunction& u, int n, double sigma, double p) {
    const double virial = virial_term(u, n, sigma, p);
    const double energy = weighted_energy(u, n, sigma, p + 1.0);
    return make_report("integration_by_parts", virial, -(n - sigma) / (1.0 + p) * energy);
}

IdentityReport pohozaev_scalar(const RadialFunction& u, const Params& params, double sigma) {
    params.validate();
    const double virial = virial_term(u, params.n, sigma, params.p);
    const double energy = weighted_energy(u, params.n, sigma, params.p + 1.0);
    return make_report("pohozaev_scalar", virial, -0.5 * (params.n - params.alpha) * energy);
}

double contradiction_factor(int n, double alpha, double sigma, double p) {
    return (n - sigma) / (1.0 + p) - 0.5 * (n - alpha);
}

SystemIdentityReport pohozaev_system(const RadialFunction& u, const RadialFunction& v,
                                     const Params& params) {
    params.validate();
    const double virial_u = virial_term(u, params.n, params.sigma2, params.p);
    const double virial_v = virial_term(v, params.n, params.sigma1, params.q);
    const double energy_u = weighted_energy(u, params.n, params.sigma2, params.p + 1.0);
    const double energy_v = weighted_energy(v, params.n, params.sigma1, params.q + 1.0);

    SystemIdentityReport rep;
    rep.pohozaev = make_report("pohozaev_system", virial_u + virial_v,
                               -(params.n - params.alpha) * energy_v);
    rep.cross_energy = make_report("cross_energy", energy_u, energy_v);
    return rep;
}

DecayFit decay_check(const RadialFunction& u, double expected_rate) {
    u.validate();
    std::vector<double> xs, ys;
    const double cut = u.grid.back() / 10.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u.grid.r[i] >= cut) {
            xs.push_back(u.grid.log_r[i]);
            ys.push_back(std::log(u.values[i]));
        }
    }
    DecayFit fit;
    fit.slope = least_squares_slope(xs, ys);
    fit.deviation = fit.slope - expected_rate;
    return fit;
}

double standard_identity_min(const RadialFunction& u, int n) {
    const std::vector<double> du = radial_derivative(u);
    double lo = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < u.size(); ++i)
        lo = std::min(lo, (n - 2.0) * u.values[i] + u.grid.r[i] * du[i]);
    return lo;
}

} // namespace whls
