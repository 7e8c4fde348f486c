#include "whls/criteria.hpp"

#include <algorithm>
#include <cmath>

namespace whls {

double criticality_tolerance(const Params& params) {
    return 1e-12 * std::max(1.0, params.n - params.alpha);
}

DerivedExponents exponents(const Params& params) {
    params.validate();
    const double pq1 = params.pq() - 1.0;
    if (std::abs(pq1) < 1e-12)
        throw domain_error("exponents: formulas singular at pq = 1");
    DerivedExponents e;
    const double g1 = params.alpha * (1.0 + params.q) - (params.sigma1 + params.sigma2 * params.q);
    const double g2 = params.alpha * (1.0 + params.p) - (params.sigma2 + params.sigma1 * params.p);
    e.theta1 = 0.5 * g1 / pq1;
    e.theta2 = 0.5 * g2 / pq1;
    e.M = std::max(g1 / pq1, g2 / pq1);
    e.hyperbola_lhs = (params.n - params.sigma1) / (1.0 + params.q) +
                      (params.n - params.sigma2) / (1.0 + params.p);
    return e;
}

Classification classify(const Params& params) {
    params.validate();
    if (params.sigma1 >= params.alpha || params.sigma2 >= params.alpha)
        throw domain_error("classify: requires sigma1, sigma2 < alpha");

    Classification c;
    c.scalar_mode = params.is_scalar();
    c.general_in_scope = params.sigma1 >= 0.0 && params.sigma2 >= 0.0;

    const double gap = params.n - params.alpha;
    const double tol = criticality_tolerance(params);

    if (params.pq() <= 1.0) {
        c.general_verdict = GeneralVerdict::NotExists;
        c.radial_verdict = RadialVerdict::RadialNotExists;
        c.exponents_valid = false;
        return c;
    }

    c.exponents = exponents(params);
    c.exponents_valid = true;

    if (std::abs(c.exponents.M - gap) <= tol)
        c.general_verdict = GeneralVerdict::Critical;
    else if (c.exponents.M < gap)
        c.general_verdict = GeneralVerdict::Exists;
    else
        c.general_verdict = GeneralVerdict::NotExists;

    const double hyp = c.exponents.hyperbola_lhs;
    if (std::abs(hyp - gap) <= tol)
        c.radial_verdict = RadialVerdict::Critical;
    else if (hyp > gap)
        c.radial_verdict = RadialVerdict::RadialNotExists;
    else
        c.radial_verdict = RadialVerdict::NoConclusion;
    return c;
}

bool scalar_criterion(int n, double alpha, double sigma, double p) {
    Params params = Params::scalar(n, alpha, sigma, p);
    params.validate();
    if (!(sigma >= 0.0 && sigma < alpha))
        throw domain_error("scalar_criterion: requires sigma in [0, alpha)");
    return p > (n - sigma) / (n - alpha);
}

std::pair<double, double> exponent_balance(const Params& params) {
    params.validate();
    const double pq1 = params.pq() - 1.0;
    if (std::abs(pq1) < 1e-12)
        throw domain_error("exponent_balance: degenerate at pq = 1");
    const double gap = params.n - params.alpha;
    const double lhs = gap * params.p + params.sigma2 - params.n +
                       params.p * (params.q * gap + params.sigma1 - params.n);
    const double m2 =
        (params.alpha * (1.0 + params.p) - (params.sigma2 + params.sigma1 * params.p)) / pq1;
    const double rhs = pq1 * (gap - m2);
    return {lhs, rhs};
}

bool finite_energy_predicate(int n, double alpha, double sigma, double p) {
    if (!(p > 1.0)) throw domain_error("finite_energy_predicate: requires p > 1");
    if (!(sigma < alpha)) throw domain_error("finite_energy_predicate: requires sigma < alpha");
    return n - sigma - (alpha - sigma) * (p + 1.0) / (p - 1.0) < 0.0;
}

const char* to_string(GeneralVerdict v) {
    switch (v) {
        case GeneralVerdict::Exists: return "Exists";
        case GeneralVerdict::NotExists: return "NotExists";
        case GeneralVerdict::Critical: return "Critical";
    }
    return "?";
}

const char* to_string(RadialVerdict v) {
    switch (v) {
        case RadialVerdict::RadialNotExists: return "RadialNotExists";
        case RadialVerdict::NoConclusion: return "NoConclusion";
        case RadialVerdict::Critical: return "Critical";
    }
    return "?";
}

} // namespace whls
