#include "whls/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace whls {

namespace {

RadialFunction normalize_at_ref(RadialFunction f, double& scale) {
    scale = f.values.front();
    for (double& v : f.values) v /= scale;
    return f;
}

// Damped combination in log amplitude: exp((1-theta) log a + theta log b).
RadialFunction damp(const RadialFunction& prev, const RadialFunction& next, double theta) {
    RadialFunction out = next;
    for (std::size_t i = 0; i < out.values.size(); ++i)
        out.values[i] = std::exp((1.0 - theta) * std::log(prev.values[i]) +
                                 theta * std::log(next.values[i]));
    out.head_exp = (1.0 - theta) * prev.head_exp + theta * next.head_exp;
    out.tail_exp = (1.0 - theta) * prev.tail_exp + theta * next.tail_exp;
    return out;
}

double log_sup_distance(const RadialFunction& a, const RadialFunction& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i)
        d = std::max(d, std::abs(std::log(a.values[i]) - std::log(b.values[i])));
    return d;
}

} // namespace

PicardOperator::PicardOperator(const Params& p, const RadialGrid& grid,
                               const QuadratureConfig& cfg)
    : params(p),
      k1(assemble_kernel(grid, grid, p.n, p.alpha, p.sigma1, cfg)),
      k2(assemble_kernel(grid, grid, p.n, p.alpha, p.sigma2, cfg)) {
    params.validate_for_quadrature();
}

std::pair<RadialFunction, RadialFunction>
PicardOperator::step(const RadialFunction& u, const RadialFunction& v,
                     double& scale_u, double& scale_v) const {
    u.validate();
    v.validate();
    RadialFunction next_u = normalize_at_ref(k1.apply(v.pow(params.q)), scale_u);
    RadialFunction next_v = normalize_at_ref(k2.apply(u.pow(params.p)), scale_v);
    return {std::move(next_u), std::move(next_v)};
}

std::pair<RadialFunction, RadialFunction>
picard_step(const RadialFunction& u, const RadialFunction& v, const Params& params,
            double& scale_u, double& scale_v, const QuadratureConfig& cfg) {
    PicardOperator op(params, u.grid, cfg);
    return op.step(u, v, scale_u, scale_v);
}

SolveResult picard_solve(const Params& params, const RadialGrid& grid, SolverInit init,
                         double damping, double tol, int max_iter,
                         const QuadratureConfig& cfg,
                         const RadialFunction* custom_u, const RadialFunction* custom_v) {
    params.validate_for_quadrature();
    if (!(damping > 0.0 && damping <= 1.0))
        throw domain_error("picard_solve: damping must lie in (0, 1]");
    if (max_iter < 1) throw domain_error("picard_solve: max_iter must be >= 1");

    RadialFunction u, v;
    switch (init) {
        case SolverInit::CandidateSlow:
            std::tie(u, v) = build_candidate(params, Rate::Slow, grid);
            break;
        case SolverInit::CandidateFast:
            std::tie(u, v) = build_candidate(params, Rate::Fast, grid);
            break;
        case SolverInit::Custom:
            if (!custom_u || !custom_v)
                throw domain_error("picard_solve: custom init requires both iterates");
            u = *custom_u;
            v = *custom_v;
            break;
    }
    double ignored;
    u = normalize_at_ref(std::move(u), ignored);
    v = normalize_at_ref(std::move(v), ignored);

    PicardOperator op(params, grid, cfg);
    SolveResult result;
    double min_residual = std::numeric_limits<double>::infinity();

    for (int it = 0; it < max_iter; ++it) {
        double su = 0.0, sv = 0.0;
        std::pair<RadialFunction, RadialFunction> stepped;
        try {
            stepped = op.step(u, v, su, sv);
        } catch (const divergence_error&) {
            // iterates flattened out of the integrable class
            result.status = SolveStatus::Diverged;
            break;
        }
        auto& [pu, pv] = stepped;
        RadialFunction nu = damp(u, pu, damping);
        RadialFunction nv = damp(v, pv, damping);
        const double residual = std::max(log_sup_distance(nu, u), log_sup_distance(nv, v));
        result.residual_history.push_back(residual);
        result.normalization_history.push_back(su);
        result.normalization_history.push_back(sv);
        u = std::move(nu);
        v = std::move(nv);
        result.iterations = it + 1;
        if (residual < tol) {
            result.status = SolveStatus::Converged;
            break;
        }
        min_residual = std::min(min_residual, residual);
        if (residual > 10.0 * min_residual && it >= 2) {
            result.status = SolveStatus::Diverged;
            break;
        }
        result.status = SolveStatus::MaxIterations;
    }
    result.u = std::move(u);
    result.v = std::move(v);
    return result;
}

const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Converged: return "Converged";
        case SolveStatus::Diverged: return "Diverged";
        case SolveStatus::MaxIterations: return "MaxIterations";
    }
    return "?";
}

} // namespace whls
