#pragma once

#include <vector>

#include "whls/params.hpp"

namespace whls {

enum class TraceVerdict {
    DivergesToMinusInfinity,
    ConvergesNegative,
    DivergesToPlusInfinity,
    Stationary,
};

// Lower-bound decay exponents a_j, b_j of the non-existence iteration:
//   a_0 = n - alpha,  b_k = p a_k - alpha + sigma2,  a_{k+1} = q b_k - alpha + sigma1.
struct ExponentTrace {
    std::vector<double> a; // a_0 .. a_J
    std::vector<double> b; // b_0 .. b_J
    TraceVerdict verdict = TraceVerdict::Stationary;
    double limit = 0.0; // meaningful for ConvergesNegative
};

ExponentTrace iterate_exponents(const Params& params, int j_max);

// Closed form a_j = (pq)^j (a_0 - G/(pq-1)) + G/(pq-1), G = alpha(1+q) - (sigma1 + sigma2 q);
// arithmetic form a_j = a_0 - j G at pq = 1.
double closed_form_a(int j, const Params& params);

// Blow-up recurrence behind the super poly-harmonic argument:
//   beta_{k+1} = 2 beta_k p,  a_{k+1} = a_k^p / (2 beta_k p)^m,  m = n + alpha,
// with the induction inequality a_k^p >= (beta_k p)^{m(l+1)}. All values in
// natural-log domain (they overflow double immediately otherwise).
struct BlowupTrace {
    int l = 0;
    double m = 0.0;
    std::vector<double> log_beta;
    std::vector<double> log_a;
    std::vector<bool> holds;
    bool all_hold = false;
};

// beta0 must satisfy beta0 >= 2^{1+l+p} p^l; the seed a_0 is fixed to the
// minimal admissible value (beta0 p)^{m(l+1)/p}.
BlowupTrace blowup_recurrence(double p, int n, double alpha, int l, double beta0, int k_max);
BlowupTrace blowup_recurrence_with_seed(double p, int n, double alpha, int l, double beta0,
                                        double log_a0, int k_max);

const char* to_string(TraceVerdict v);

} // namespace whls
