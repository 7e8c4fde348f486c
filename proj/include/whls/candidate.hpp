#pragma once

#include <utility>
#include <vector>

#include "whls/grid.hpp"
#include "whls/kernel.hpp"
#include "whls/params.hpp"

namespace whls {

enum class Rate { Slow, Fast };

enum class Boundedness { DoubleBounded, Unbounded, Inconclusive };

// Sampled coefficient ratios c1(r) = u / P_{s1}[v^q] and c2(r) = v / P_{s2}[u^p]
// with extrema and end-limit estimates. The Unbounded detector (spread
// beyond 1e3, or a monotone tail drift of the log-log slope) is a
// heuristic, not a theorem.
struct BoundednessReport {
    std::vector<double> radii;
    std::vector<double> ratios_c1;
    std::vector<double> ratios_c2;
    double c1_min = 0.0, c1_max = 0.0;
    double c2_min = 0.0, c2_max = 0.0;
    double c1_limit_zero = 0.0, c1_limit_inf = 0.0;
    double c2_limit_zero = 0.0, c2_limit_inf = 0.0;
    Boundedness verdict = Boundedness::Inconclusive;
};

// The explicit candidates u = (1+r^2)^{-theta1}, v = (1+r^2)^{-theta2};
// slow rate takes the thetas from the criterion formulas, fast rate uses
// 2 theta1 = 2 theta2 = n - alpha.
std::pair<RadialFunction, RadialFunction>
build_candidate(const Params& params, Rate rate, const RadialGrid& grid);

// alpha < 2 theta1 p + sigma2 < n and alpha < 2 theta2 q + sigma1 < n, strict.
bool sandwich_check(const Params& params);

BoundednessReport verify_double_bounded(const Params& params, Rate rate,
                                        const RadialGrid& grid,
                                        const QuadratureConfig& cfg = {});

const char* to_string(Boundedness v);

} // namespace whls
