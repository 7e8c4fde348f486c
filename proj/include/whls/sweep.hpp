#pragma once

#include <cstddef>
#include <string>

#include "whls/params.hpp"

namespace whls {

// Linear (p, q) grid over fixed (n, alpha, sigma1, sigma2). Rows are emitted
// row-major, p outer / q inner, byte-identical regardless of thread count.
struct SweepSpec {
    int n = 5;
    double alpha = 2.0;
    double sigma1 = 0.0;
    double sigma2 = 0.0;
    double p_min = 0.5, p_max = 4.0;
    double q_min = 0.5, q_max = 4.0;
    std::size_t p_count = 50;
    std::size_t q_count = 50;

    void validate() const;
    double p_at(std::size_t i) const;
    double q_at(std::size_t j) const;
};

// CSV with header p,q,theta1,theta2,M,n_minus_alpha,hyperbola_lhs,
// general_verdict,radial_verdict. threads <= 0 picks the default
// (WHLS_THREADS or hardware concurrency).
std::string run_sweep(const SweepSpec& spec, int threads = 0);

void run_sweep_to_file(const SweepSpec& spec, const std::string& path, int threads = 0);

} // namespace whls
