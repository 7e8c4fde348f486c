#include "whls/nonexistence.hpp"

#include <algorithm>
#include <cmath>

#include "whls/criteria.hpp"

namespace whls {

namespace {

double growth_g(const Params& params) {
    return params.alpha * (1.0 + params.q) - (params.sigma1 + params.sigma2 * params.q);
}

} // namespace

ExponentTrace iterate_exponents(const Params& params, int j_max) {
    params.validate();
    if (j_max < 1) throw domain_error("iterate_exponents: j_max must be >= 1");

    ExponentTrace trace;
    trace.a.reserve(j_max + 1);
    trace.b.reserve(j_max + 1);
    double a = params.n - params.alpha;
    for (int j = 0; j <= j_max; ++j) {
        trace.a.push_back(a);
        double b = params.p * a - params.alpha + params.sigma2;
        trace.b.push_back(b);
        a = params.q * b - params.alpha + params.sigma1;
    }

    const double pq = params.pq();
    const double gap = params.n - params.alpha;
    const double tol = criticality_tolerance(params);

    if (pq < 1.0 - 1e-12) {
        trace.verdict = TraceVerdict::ConvergesNegative;
        trace.limit = -growth_g(params) / (1.0 - pq);
        return trace;
    }
    if (std::abs(pq - 1.0) <= 1e-12) {
        const double g = growth_g(params);
        if (g > 0.0)
            trace.verdict = TraceVerdict::DivergesToMinusInfinity;
        else if (g < 0.0)
            trace.verdict = TraceVerdict::DivergesToPlusInfinity;
        else
            trace.verdict = TraceVerdict::Stationary;
        return trace;
    }

    // pq > 1: the tail behavior is decided by M vs n - alpha. The numeric
    // thresholds (a_j beyond +-10(n-alpha)) confirm it when j_max allows;
    // the closed-form sign decides when pq is too close to 1 to get there.
    const DerivedExponents e = exponents(params);
    if (std::abs(e.M - gap) <= tol) {
        trace.verdict = TraceVerdict::Stationary;
        return trace;
    }
    trace.verdict = (e.M > gap) ? TraceVerdict::DivergesToMinusInfinity
                                : TraceVerdict::DivergesToPlusInfinity;
    return trace;
}

double closed_form_a(int j, const Params& params) {
    params.validate();
    if (j < 0) throw domain_error("closed_form_a: j must be >= 0");
    const double pq = params.pq();
    const double g = growth_g(params);
    const double a0 = params.n - params.alpha;
    if (std::abs(pq - 1.0) <= 1e-12) return a0 - j * g;
    const double fixed = g / (pq - 1.0);
    return std::pow(pq, j) * (a0 - fixed) + fixed;
}

BlowupTrace blowup_recurrence_with_seed(double p, int n, double alpha, int l, double beta0,
                                        double log_a0, int k_max) {
    if (!(p > 1.0)) throw domain_error("blowup_recurrence: requires p > 1");
    if (!(l * (p - 1.0) > 2.0)) throw domain_error("blowup_recurrence: requires l(p-1) > 2");
    if (std::fmod(alpha, 2.0) != 0.0 || !(alpha > 0.0))
        throw domain_error("blowup_recurrence: alpha must be a positive even integer");
    if (k_max < 1) throw domain_error("blowup_recurrence: k_max must be >= 1");
    const double ln2 = std::log(2.0), lnp = std::log(p);
    const double log_beta_min = (1.0 + l + p) * ln2 + l * lnp;
    if (!(std::log(beta0) >= log_beta_min - 1e-12))
        throw domain_error("blowup_recurrence: beta0 below the 2^{1+l+p} p^l threshold");

    BlowupTrace t;
    t.l = l;
    t.m = n + alpha;
    double log_beta = std::log(beta0);
    double log_a = log_a0;
    t.all_hold = true;
    for (int k = 0; k <= k_max; ++k) {
        t.log_beta.push_back(log_beta);
        t.log_a.push_back(log_a);
        const bool ok = p * log_a >= t.m * (l + 1.0) * (log_beta + lnp) - 1e-9;
        t.holds.push_back(ok);
        t.all_hold = t.all_hold && ok;
        const double log_2bp = ln2 + log_beta + lnp;
        log_a = p * log_a - t.m * log_2bp;
        log_beta = log_2bp; // beta_{k+1} = 2 beta_k p
    }
    return t;
}

BlowupTrace blowup_recurrence(double p, int n, double alpha, int l, double beta0, int k_max) {
    if (!(p > 1.0)) throw domain_error("blowup_recurrence: requires p > 1");
    const double m = n + alpha;
    const double log_a0 = m * (l + 1.0) / p * (std::log(beta0) + std::log(p));
    return blowup_recurrence_with_seed(p, n, alpha, l, beta0, log_a0, k_max);
}

const char* to_string(TraceVerdict v) {
    switch (v) {
        case TraceVerdict::DivergesToMinusInfinity: return "DivergesToMinusInfinity";
        case TraceVerdict::ConvergesNegative: return "ConvergesNegative";
        case TraceVerdict::DivergesToPlusInfinity: return "DivergesToPlusInfinity";
        case TraceVerdict::Stationary: return "Stationary";
    }
    return "?";
}

} // namespace whls
