#pragma once

#include <cstddef>

// Scalar reference kernels plus an AVX2 variant selected at runtime.
// Both paths use a fixed summation order (4 independent accumulators,
// combined left to right), so results are deterministic per ISA and the
// two ISAs agree to rounding.

namespace whls::simd {

enum class Isa { Scalar, Avx2 };

// ISA actually dispatched on this machine.
Isa active_isa();

// sum_i a[i] * b[i]
double dot(const double* a, const double* b, std::size_t n);

// y = M x for a dense row-major rows x cols matrix.
void matvec(const double* m, std::size_t rows, std::size_t cols,
            const double* x, double* y);

// Reference and vector paths, exposed for equivalence tests.
double dot_scalar(const double* a, const double* b, std::size_t n);
#if defined(__x86_64__) || defined(_M_X64)
double dot_avx2(const double* a, const double* b, std::size_t n);
#endif

} // namespace whls::simd
