#include "canon/simd/kernels.hpp"

#if defined(__AVX2__) && defined(__FMA__)
#include <immintrin.h>
#define CANON_HAVE_AVX2 1
#else
#define CANON_HAVE_AVX2 0
#endif

namespace canon::simd::avx2 {

#if CANON_HAVE_AVX2

namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d sh = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

}  // namespace

bool compiled() noexcept { return true; }

std::complex<double> weighted_sum(std::span<const double> w,
                                  std::span<const double> re,
                                  std::span<const double> im) {
  const std::size_t n = w.size();
  __m256d sr = _mm256_setzero_pd(), si = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    __m256d vw = _mm256_loadu_pd(w.data() + k);
    sr = _mm256_fmadd_pd(vw, _mm256_loadu_pd(re.data() + k), sr);
    si = _mm256_fmadd_pd(vw, _mm256_loadu_pd(im.data() + k), si);
  }
  double r = hsum(sr), i = hsum(si);
  for (; k < n; ++k) {
    r += w[k] * re[k];
    i += w[k] * im[k];
  }
  return {r, i};
}

std::complex<double> complex_dot(std::span<const double> a_re,
                                 std::span<const double> a_im,
                                 std::span<const double> b_re,
                                 std::span<const double> b_im) {
  const std::size_t n = a_re.size();
  __m256d sr = _mm256_setzero_pd(), si = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    __m256d ar = _mm256_loadu_pd(a_re.data() + k);
    __m256d ai = _mm256_loadu_pd(a_im.data() + k);
    __m256d br = _mm256_loadu_pd(b_re.data() + k);
    __m256d bi = _mm256_loadu_pd(b_im.data() + k);
    sr = _mm256_fmadd_pd(ar, br, sr);
    sr = _mm256_fnmadd_pd(ai, bi, sr);
    si = _mm256_fmadd_pd(ar, bi, si);
    si = _mm256_fmadd_pd(ai, br, si);
  }
  double r = hsum(sr), i = hsum(si);
  for (; k < n; ++k) {
    r += a_re[k] * b_re[k] - a_im[k] * b_im[k];
    i += a_re[k] * b_im[k] + a_im[k] * b_re[k];
  }
  return {r, i};
}

std::complex<double> weighted_conj_dot(std::span<const double> w,
                                       std::span<const double> a_re,
                                       std::span<const double> a_im,
                                       std::span<const double> b_re,
                                       std::span<const double> b_im) {
  const std::size_t n = w.size();
  __m256d sr = _mm256_setzero_pd(), si = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    __m256d vw = _mm256_loadu_pd(w.data() + k);
    __m256d ar = _mm256_loadu_pd(a_re.data() + k);
    __m256d ai = _mm256_loadu_pd(a_im.data() + k);
    __m256d br = _mm256_loadu_pd(b_re.data() + k);
    __m256d bi = _mm256_loadu_pd(b_im.data() + k);
    __m256d pr = _mm256_fmadd_pd(ai, bi, _mm256_mul_pd(ar, br));
    __m256d pi = _mm256_fnmadd_pd(ai, br, _mm256_mul_pd(ar, bi));
    sr = _mm256_fmadd_pd(vw, pr, sr);
    si = _mm256_fmadd_pd(vw, pi, si);
  }
  double r = hsum(sr), i = hsum(si);
  for (; k < n; ++k) {
    r += w[k] * (a_re[k] * b_re[k] + a_im[k] * b_im[k]);
    i += w[k] * (a_re[k] * b_im[k] - a_im[k] * b_re[k]);
  }
  return {r, i};
}

#else

bool compiled() noexcept { return false; }

std::complex<double> weighted_sum(std::span<const double> w,
                                  std::span<const double> re,
                                  std::span<const double> im) {
  return scalar::weighted_sum(w, re, im);
}

std::complex<double> complex_dot(std::span<const double> a_re,
                                 std::span<const double> a_im,
                                 std::span<const double> b_re,
                                 std::span<const double> b_im) {
  return scalar::complex_dot(a_re, a_im, b_re, b_im);
}

std::complex<double> weighted_conj_dot(std::span<const double> w,
                                       std::span<const double> a_re,
                                       std::span<const double> a_im,
                                       std::span<const double> b_re,
                                       std::span<const double> b_im) {
  return scalar::weighted_conj_dot(w, a_re, a_im, b_re, b_im);
}

#endif

}  // namespace canon::simd::avx2
