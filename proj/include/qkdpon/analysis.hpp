#pragma once

#include "qkdpon/noise.hpp"

namespace qkdpon {

/// SNRs of both architectures, the enhancement multiplier K, and the noise
/// ratio r = (d1+d4)/(d0+d2+d3) used by the calibration inverse.
struct SnrReport {
  double snr_through = 0.0;
  double snr_bypass = 0.0;
  double k = 0.0;
  double noise_ratio = 0.0;
};

/// SNR of a budget as measured: Q / (d0+d1+d2+d3+d4).
inline double snr_through(const NoiseBudget& b) {
  const double noise = b.noise_sum_hz();
  if (noise <= 0.0) {
    throw DegenerateInputError("snr: noise sum must be > 0");
  }
  return b.q_signal.hz / noise;
}

/// Bypass-architecture SNR predicted from a Through-architecture reference
/// budget: N*Q / (d0 + N*d1 + d2 + d3 + N*d4).
inline double snr_bypass(const NoiseBudget& through_budget, int ratio) {
  const double n = static_cast<double>(ratio);
  const NoiseBudget& b = through_budget;
  const double noise = b.d0.hz + n * b.d1.hz + b.d2.hz + b.d3.hz + n * b.d4.hz;
  if (noise <= 0.0) {
    throw DegenerateInputError("snr_bypass: noise sum must be > 0");
  }
  return n * b.q_signal.hz / noise;
}

/// Enhancement multiplier K = SNR_bypass / SNR_through evaluated on a
/// Through-architecture reference budget:
///   K = N*(d0+d1+d2+d3+d4) / (d0 + N*d1 + d2 + d3 + N*d4)
/// The boundary cases are returned exactly: K = N when d1+d4 = 0 and K = 1
/// when d0+d2+d3 = 0.
inline double multiplier_k(const NoiseBudget& through_budget, int ratio) {
  const NoiseBudget& b = through_budget;
  const double n = static_cast<double>(ratio);
  const double split_scaled = b.d1.hz + b.d4.hz;
  const double unscaled = b.d0.hz + b.d2.hz + b.d3.hz;
  if (split_scaled + unscaled <= 0.0) {
    throw DegenerateInputError("multiplier_k: noise sum must be > 0");
  }
  if (split_scaled == 0.0) return n;
  if (unscaled == 0.0) return 1.0;
  return n * (b.d0.hz + b.d1.hz + b.d2.hz + b.d3.hz + b.d4.hz) /
         (b.d0.hz + n * b.d1.hz + b.d2.hz + b.d3.hz + n * b.d4.hz);
}

/// K from the grouped noise ratio r = (d1+d4)/(d0+d2+d3):
///   K = N*(1+r) / (1+N*r)
inline double k_from_ratio(double r, int ratio) {
  if (!(r >= 0.0)) {
    throw InvalidQuantityError("k_from_ratio: r must be >= 0");
  }
  if (ratio < 1) {
    throw InvalidQuantityError("k_from_ratio: N must be >= 1");
  }
  const double n = static_cast<double>(ratio);
  return n * (1.0 + r) / (1.0 + n * r);
}

/// Inverse of k_from_ratio: recover r from a measured multiplier K,
///   r = (N - K) / (N * (K - 1)),  valid for 1 < K <= N.
/// Out-of-range K is rejected, not clamped.
inline double calibrate_ratio(double k, int ratio) {
  const double n = static_cast<double>(ratio);
  if (!(k > 1.0) || !(k <= n)) {
    throw OutOfModelError("calibrate_ratio: K must satisfy 1 < K <= N");
  }
  return (n - k) / (n * (k - 1.0));
}

/// Full report for one Through-architecture reference budget.
inline SnrReport snr_report(const NoiseBudget& through_budget, int ratio) {
  const NoiseBudget& b = through_budget;
  SnrReport r;
  r.snr_through = snr_through(b);
  r.snr_bypass = snr_bypass(b, ratio);
  r.k = multiplier_k(b, ratio);
  const double unscaled = b.d0.hz + b.d2.hz + b.d3.hz;
  r.noise_ratio = unscaled > 0.0
                      ? (b.d1.hz + b.d4.hz) / unscaled
                      : std::numeric_limits<double>::infinity();
  return r;
}

}  // namespace qkdpon
