#pragma once

#include <string>

#include "whls/grid.hpp"
#include "whls/params.hpp"

namespace whls {

struct IdentityReport {
    std::string identity_name;
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0; // |lhs-rhs| / max(|lhs|, |rhs|, 1e-300)
};

IdentityReport make_report(std::string name, double lhs, double rhs);

// \int u^s / |x|^sigma dx = |S^{n-1}| \int_0^inf r^{n-1-sigma} u(r)^s dr,
// with analytic power-law head/tail closure. Throws divergence_error when
// the head/tail exponent tests fail.
double weighted_energy(const RadialFunction& u, int n, double sigma, double s);

// \int u^p (x . grad u) / |x|^sigma dx = |S^{n-1}| \int_0^inf r^{n-sigma} u^p u'(r) dr.
double virial_term(const RadialFunction& u, int n, double sigma, double p);

// virial = -(n-sigma)/(1+p) * energy; holds for any sufficiently decaying radial u.
IdentityReport ibp_identity(const RadialFunction& u, int n, double sigma, double p);

// virial = -(n-alpha)/2 * energy; holds only when u solves the scalar equation.
IdentityReport pohozaev_scalar(const RadialFunction& u, const Params& params, double sigma);

// (n-sigma)/(1+p) - (n-alpha)/2; vanishes exactly at p = (n+alpha-2sigma)/(n-alpha).
double contradiction_factor(int n, double alpha, double sigma, double p);

struct SystemIdentityReport {
    IdentityReport pohozaev;     // virial_u + virial_v vs -(n-alpha) * \int v^{q+1}/|x|^{s1}
    IdentityReport cross_energy; // \int u^{p+1}/|x|^{s2} vs \int v^{q+1}/|x|^{s1}
};

SystemIdentityReport pohozaev_system(const RadialFunction& u, const RadialFunction& v,
                                     const Params& params);

struct DecayFit {
    double slope = 0.0;     // log-log slope over the last decade
    double deviation = 0.0; // slope - expected_rate
};

DecayFit decay_check(const RadialFunction& u, double expected_rate);

// min over nodes of (n-2) u(r) + r u'(r); nonnegative for the slowly
// varying decreasing radial profiles of interest.
double standard_identity_min(const RadialFunction& u, int n);

} // namespace whls
