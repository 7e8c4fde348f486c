#pragma once

#include <utility>
#include <vector>

#include "whls/candidate.hpp"
#include "whls/grid.hpp"
#include "whls/kernel.hpp"
#include "whls/params.hpp"

namespace whls {

enum class SolveStatus { Converged, Diverged, MaxIterations };

struct SolveResult {
    SolveStatus status = SolveStatus::MaxIterations;
    RadialFunction u;
    RadialFunction v;
    std::vector<double> residual_history;      // sup-norm relative change per iteration
    std::vector<double> normalization_history; // scale factors (u then v, per iteration)
    int iterations = 0;
};

enum class SolverInit { CandidateSlow, CandidateFast, Custom };

// Precomputed operator pair for one grid / parameter set, so the two
// potentials inside an iteration reuse the assembled matrices.
struct PicardOperator {
    Params params;
    KernelMatrix k1; // sigma1 kernel, applied to v^q
    KernelMatrix k2; // sigma2 kernel, applied to u^p

    PicardOperator(const Params& p, const RadialGrid& grid, const QuadratureConfig& cfg = {});

    // Normalized step: u+ = P1[v^q]/P1[v^q](r_ref), v+ = P2[u^p]/P2[u^p](r_ref),
    // r_ref = smallest grid node. Returns (u+, v+) and fills the scale factors.
    std::pair<RadialFunction, RadialFunction>
    step(const RadialFunction& u, const RadialFunction& v,
         double& scale_u, double& scale_v) const;
};

std::pair<RadialFunction, RadialFunction>
picard_step(const RadialFunction& u, const RadialFunction& v, const Params& params,
            double& scale_u, double& scale_v, const QuadratureConfig& cfg = {});

SolveResult picard_solve(const Params& params, const RadialGrid& grid, SolverInit init,
                         double damping, double tol, int max_iter,
                         const QuadratureConfig& cfg = {},
                         const RadialFunction* custom_u = nullptr,
                         const RadialFunction* custom_v = nullptr);

const char* to_string(SolveStatus s);

} // namespace whls
