#include "canon/simd/kernels.hpp"

#include <atomic>
#include <cassert>

namespace canon::simd {

namespace scalar {

std::complex<double> weighted_sum(std::span<const double> w,
                                  std::span<const double> re,
                                  std::span<const double> im) {
  assert(w.size() == re.size() && w.size() == im.size());
  double sr = 0.0, si = 0.0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    sr += w[k] * re[k];
    si += w[k] * im[k];
  }
  return {sr, si};
}

std::complex<double> complex_dot(std::span<const double> a_re,
                                 std::span<const double> a_im,
                                 std::span<const double> b_re,
                                 std::span<const double> b_im) {
  assert(a_re.size() == b_re.size());
  double sr = 0.0, si = 0.0;
  for (std::size_t k = 0; k < a_re.size(); ++k) {
    sr += a_re[k] * b_re[k] - a_im[k] * b_im[k];
    si += a_re[k] * b_im[k] + a_im[k] * b_re[k];
  }
  return {sr, si};
}

std::complex<double> weighted_conj_dot(std::span<const double> w,
                                       std::span<const double> a_re,
                                       std::span<const double> a_im,
                                       std::span<const double> b_re,
                                       std::span<const double> b_im) {
  assert(w.size() == a_re.size() && w.size() == b_re.size());
  double sr = 0.0, si = 0.0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    sr += w[k] * (a_re[k] * b_re[k] + a_im[k] * b_im[k]);
    si += w[k] * (a_re[k] * b_im[k] - a_im[k] * b_re[k]);
  }
  return {sr, si};
}

}  // namespace scalar

bool cpu_has_avx2() noexcept {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

namespace {

Isa detect() noexcept {
  return (avx2::compiled() && cpu_has_avx2()) ? Isa::Avx2 : Isa::Scalar;
}

std::atomic<Isa>& selected() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

Isa active_isa() noexcept { return selected().load(std::memory_order_relaxed); }

void force_isa(Isa isa) noexcept {
  if (isa == Isa::Avx2 && !(avx2::compiled() && cpu_has_avx2())) isa = Isa::Scalar;
  selected().store(isa, std::memory_order_relaxed);
}

const char* isa_name(Isa isa) noexcept {
  return isa == Isa::Avx2 ? "avx2" : "scalar";
}

std::complex<double> weighted_sum(std::span<const double> w,
                                  std::span<const double> re,
                                  std::span<const double> im) {
  return active_isa() == Isa::Avx2 ? avx2::weighted_sum(w, re, im)
                                   : scalar::weighted_sum(w, re, im);
}

std::complex<double> complex_dot(std::span<const double> a_re,
                                 std::span<const double> a_im,
                                 std::span<const double> b_re,
                                 std::span<const double> b_im) {
  return active_isa() == Isa::Avx2 ? avx2::complex_dot(a_re, a_im, b_re, b_im)
                                   : scalar::complex_dot(a_re, a_im, b_re, b_im);
}

std::complex<double> weighted_conj_dot(std::span<const double> w,
                                       std::span<const double> a_re,
                                       std::span<const double> a_im,
                                       std::span<const double> b_re,
                                       std::span<const double> b_im) {
  return active_isa() == Isa::Avx2
             ? avx2::weighted_conj_dot(w, a_re, a_im, b_re, b_im)
             : scalar::weighted_conj_dot(w, a_re, a_im, b_re, b_im);
}

}  // namespace canon::simd
