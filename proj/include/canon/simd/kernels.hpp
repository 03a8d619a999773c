#pragma once

// Data-parallel inner loops of the Gauss-Hermite quadratures.
//
// Complex arrays are passed split (real parts, imaginary parts) so that the
// vector variants can load four lanes of each without shuffles. Every kernel
// has a scalar reference implementation; `active_isa()` reports which variant
// the dispatcher picked at startup.

#include <complex>
#include <span>

namespace canon::simd {

enum class Isa { Scalar, Avx2 };

/// Variant selected by runtime CPU detection (overridable for tests).
Isa active_isa() noexcept;
void force_isa(Isa isa) noexcept;
bool cpu_has_avx2() noexcept;
const char* isa_name(Isa isa) noexcept;

/// sum_k w[k] * (re[k] + i im[k])
std::complex<double> weighted_sum(std::span<const double> w,
                                  std::span<const double> re,
                                  std::span<const double> im);

/// sum_k (a_re[k] + i a_im[k]) * (b_re[k] + i b_im[k])
std::complex<double> complex_dot(std::span<const double> a_re,
                                 std::span<const double> a_im,
                                 std::span<const double> b_re,
                                 std::span<const double> b_im);

/// sum_k w[k] * conj(a[k]) * b[k]
std::complex<double> weighted_conj_dot(std::span<const double> w,
                                       std::span<const double> a_re,
                                       std::span<const double> a_im,
                                       std::span<const double> b_re,
                                       std::span<const double> b_im);

namespace scalar {
std::complex<double> weighted_sum(std::span<const double> w,
                                  std::span<const double> re,
                                  std::span<const double> im);
std::complex<double> complex_dot(std::span<const double> a_re,
                                 std::span<const double> a_im,
                                 std::span<const double> b_re,
                                 std::span<const double> b_im);
std::complex<double> weighted_conj_dot(std::span<const double> w,
                                       std::span<const double> a_re,
                                       std::span<const double> a_im,
                                       std::span<const double> b_re,
                                       std::span<const double> b_im);
}  // namespace scalar

namespace avx2 {
bool compiled() noexcept;
std::complex<double> weighted_sum(std::span<const double> w,
                                  std::span<const double> re,
                                  std::span<const double> im);
std::complex<double> complex_dot(std::span<const double> a_re,
                                 std::span<const double> a_im,
                                 std::span<const double> b_re,
                                 std::span<const double> b_im);
std::complex<double> weighted_conj_dot(std::span<const double> w,
                                       std::span<const double> a_re,
                                       std::span<const double> a_im,
                                       std::span<const double> b_re,
                                       std::span<const double> b_im);
}  // namespace avx2

}  // namespace canon::simd
