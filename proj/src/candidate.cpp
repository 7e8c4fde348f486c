#include "whls/candidate.hpp"

#include <algorithm>
#include <cmath>

#include "whls/criteria.hpp"

namespace whls {

namespace {

RadialFunction bump_candidate(const RadialGrid& grid, double theta) {
    return sample(grid, [theta](double r) { return std::pow(1.0 + r * r, -theta); },
                  0.0, -2.0 * theta);
}

// Aitken delta-squared limit estimate from the last few samples of a
// sequence approaching its end value at a power rate.
double aitken_limit(const std::vector<double>& seq) {
    if (seq.size() < 3) return seq.back();
    std::vector<double> v(seq.end() - std::min<std::size_t>(seq.size(), 5), seq.end());
    double best = v.back();
    for (std::size_t i = 0; i + 2 < v.size(); ++i) {
        const double d1 = v[i + 1] - v[i];
        const double d2 = v[i + 2] - v[i + 1];
        const double den = d2 - d1;
        if (std::abs(den) > 1e-300) {
            double est = v[i + 2] - d2 * d2 / den;
            if (std::isfinite(est) && est > 0.0) best = est;
        }
    }
    return best;
}

struct RatioDiagnostics {
    double minimum, maximum;
    double limit_zero, limit_inf;
    double tail_slope;
    bool tail_monotone;
    bool stabilized;
};

RatioDiagnostics diagnose(const RadialGrid& grid, const std::vector<double>& ratio) {
    RatioDiagnostics d{};
    d.minimum = *std::min_element(ratio.begin(), ratio.end());
    d.maximum = *std::max_element(ratio.begin(), ratio.end());
    d.limit_inf = aitken_limit(ratio);
    std::vector<double> rev(ratio.rbegin(), ratio.rend());
    d.limit_zero = aitken_limit(rev);

    // tail slope over the last decade
    std::vector<double> xs, ys;
    const double cut = grid.back() / 10.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid.r[i] >= cut) {
            xs.push_back(grid.log_r[i]);
            ys.push_back(std::log(ratio[i]));
        }
    }
    d.tail_slope = (xs.size() >= 2) ? least_squares_slope(xs, ys) : 0.0;
    d.tail_monotone = true;
    for (std::size_t i = 1; i < ys.size(); ++i) {
        if ((ys[i] - ys[i - 1]) * d.tail_slope < 0.0) {
            d.tail_monotone = false;
            break;
        }
    }
    d.stabilized = std::abs(d.limit_inf - ratio.back()) <= 0.05 * std::abs(ratio.back()) &&
                   std::abs(d.limit_zero - ratio.front()) <= 0.05 * std::abs(ratio.front());
    return d;
}

} // namespace

std::pair<RadialFunction, RadialFunction>
build_candidate(const Params& params, Rate rate, const RadialGrid& grid) {
    params.validate();
    if (rate == Rate::Slow) {
        if (!(params.pq() > 1.0))
            throw domain_error("build_candidate: slow rate requires pq > 1");
        const DerivedExponents e = exponents(params);
        if (!(e.M < params.n - params.alpha - criticality_tolerance(params)))
            throw domain_error("build_candidate: slow rate requires the existence criterion M < n - alpha");
        return {bump_candidate(grid, e.theta1), bump_candidate(grid, e.theta2)};
    }
    const double gap = params.n - params.alpha;
    if (!(params.p > (params.n - params.sigma2) / gap &&
          params.q > (params.n - params.sigma1) / gap))
        throw domain_error(
            "build_candidate: fast rate requires p > (n-sigma2)/(n-alpha) and q > (n-sigma1)/(n-alpha)");
    return {bump_candidate(grid, 0.5 * gap), bump_candidate(grid, 0.5 * gap)};
}

bool sandwich_check(const Params& params) {
    params.validate();
    if (!(params.pq() > 1.0)) throw domain_error("sandwich_check: requires pq > 1");
    const DerivedExponents e = exponents(params);
    const double lhs1 = e.ratio1() * params.p + params.sigma2;
    const double lhs2 = e.ratio2() * params.q + params.sigma1;
    return params.alpha < lhs1 && lhs1 < params.n && params.alpha < lhs2 && lhs2 < params.n;
}

BoundednessReport verify_double_bounded(const Params& params, Rate rate,
                                        const RadialGrid& grid,
                                        const QuadratureConfig& cfg) {
    auto [u, v] = build_candidate(params, rate, grid);
    const RadialFunction p1 = riesz_potential(v.pow(params.q), params.sigma1, params, cfg);
    const RadialFunction p2 = riesz_potential(u.pow(params.p), params.sigma2, params, cfg);

    BoundednessReport report;
    report.radii = grid.r;
    report.ratios_c1.resize(grid.size());
    report.ratios_c2.resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        report.ratios_c1[i] = u.values[i] / p1.values[i];
        report.ratios_c2[i] = v.values[i] / p2.values[i];
    }

    const RatioDiagnostics d1 = diagnose(grid, report.ratios_c1);
    const RatioDiagnostics d2 = diagnose(grid, report.ratios_c2);
    report.c1_min = d1.minimum;
    report.c1_max = d1.maximum;
    report.c2_min = d2.minimum;
    report.c2_max = d2.maximum;
    report.c1_limit_zero = d1.limit_zero;
    report.c1_limit_inf = d1.limit_inf;
    report.c2_limit_zero = d2.limit_zero;
    report.c2_limit_inf = d2.limit_inf;

    auto unbounded = [](const RatioDiagnostics& d) {
        const bool spread = d.minimum <= 0.0 || d.maximum / d.minimum > 1e3;
        const bool drift = d.tail_monotone && std::abs(d.tail_slope) > 0.02;
        return spread || drift;
    };
    auto bounded = [](const RatioDiagnostics& d) {
        return d.minimum > 0.0 && std::isfinite(d.maximum) && d.stabilized &&
               std::abs(d.tail_slope) <= 0.02;
    };

    if (unbounded(d1) || unbounded(d2))
        report.verdict = Boundedness::Unbounded;
    else if (bounded(d1) && bounded(d2))
        report.verdict = Boundedness::DoubleBounded;
    else
        report.verdict = Boundedness::Inconclusive;
    return report;
}

const char* to_string(Boundedness v) {
    switch (v) {
        case Boundedness::DoubleBounded: return "DoubleBounded";
        case Boundedness::Unbounded: return "Unbounded";
        case Boundedness::Inconclusive: return "Inconclusive";
    }
    return "?";
}

} // namespace whls
