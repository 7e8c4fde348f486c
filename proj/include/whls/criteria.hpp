#pragma once

#include <utility>

#include "whls/params.hpp"

namespace whls {

// Half-decay exponents and the criterion quantities:
//   2 theta1 = (alpha(1+q) - (sigma1 + sigma2 q)) / (pq - 1)
//   2 theta2 = (alpha(1+p) - (sigma2 + sigma1 p)) / (pq - 1)
//   M = max of the two ratios, compared against n - alpha
//   hyperbola_lhs = (n - sigma1)/(1+q) + (n - sigma2)/(1+p)
struct DerivedExponents {
    double theta1 = 0.0;
    double theta2 = 0.0;
    double M = 0.0;
    double hyperbola_lhs = 0.0;

    double ratio1() const { return 2.0 * theta1; }
    double ratio2() const { return 2.0 * theta2; }
};

enum class GeneralVerdict { Exists, NotExists, Critical };
enum class RadialVerdict { RadialNotExists, NoConclusion, Critical };

struct Classification {
    GeneralVerdict general_verdict = GeneralVerdict::NotExists;
    RadialVerdict radial_verdict = RadialVerdict::NoConclusion;
    bool general_in_scope = true; // sigma1, sigma2 in [0, alpha)
    bool scalar_mode = false;
    DerivedExponents exponents;   // valid only when pq != 1
    bool exponents_valid = false;
};

// Boundary band for "Critical": |M - (n-alpha)| <= 1e-12 * max(1, n-alpha).
double criticality_tolerance(const Params& params);

DerivedExponents exponents(const Params& params);

Classification classify(const Params& params);

// Scalar existence criterion: p > (n - sigma)/(n - alpha), strict.
bool scalar_criterion(int n, double alpha, double sigma, double p);

// Both sides of the exponent balance identity
//   (n-a)p + s2 - n + p(q(n-a) + s1 - n) = (pq-1)(n-a-M')
// with M' the second criterion ratio.
std::pair<double, double> exponent_balance(const Params& params);

// Tail-convergence test n - sigma - (alpha-sigma)(p+1)/(p-1) < 0,
// equivalently 1 < p < (n + alpha - 2 sigma)/(n - alpha).
bool finite_energy_predicate(int n, double alpha, double sigma, double p);

const char* to_string(GeneralVerdict v);
const char* to_string(RadialVerdict v);

} // namespace whls
