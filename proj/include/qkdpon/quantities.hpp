#pragma once

#include <cmath>

#include "qkdpon/errors.hpp"

namespace qkdpon {

/// Planck constant times vacuum light speed, J·m. Single source of truth for
/// photon-energy conversions across the library.
inline constexpr double kPlanckTimesLightSpeed = 1.98645e-25;

/// Attenuation of a passive element, dB (non-negative for passive elements).
struct DecibelLoss {
  double db = 0.0;
};

/// Optical power in watts.
struct OpticalPower {
  double watts = 0.0;
};

/// Wavelength in nanometers.
struct Wavelength {
  double nm = 0.0;
};

/// Detector events per second.
struct CountRate {
  double hz = 0.0;
};

// The four-channel plan of the coexistence link.
inline constexpr Wavelength kUpstreamChannel{1310.0};    // ONU -> OLT data
inline constexpr Wavelength kDownstreamChannel{1490.0};  // OLT -> ONU data
inline constexpr Wavelength kQuantumChannel{1550.0};     // quantum signal
inline constexpr Wavelength kClockChannel{1570.0};       // synchronization

/// Linear transmittance of a dB attenuation: 10^(-loss/10).
inline double db_to_linear(DecibelLoss loss) {
  if (!std::isfinite(loss.db)) {
    throw InvalidQuantityError("db_to_linear: loss must be finite");
  }
  return std::pow(10.0, -loss.db / 10.0);
}

/// dBm -> watts: 1 mW * 10^(dbm/10).
inline OpticalPower dbm_to_watts(double dbm) {
  if (!std::isfinite(dbm)) {
    throw InvalidQuantityError("dbm_to_watts: power must be finite");
  }
  return OpticalPower{1e-3 * std::pow(10.0, dbm / 10.0)};
}

/// watts -> dBm, inverse of dbm_to_watts.
inline double watts_to_dbm(OpticalPower p) {
  if (!std::isfinite(p.watts) || p.watts <= 0.0) {
    throw InvalidQuantityError("watts_to_dbm: power must be finite and > 0");
  }
  return 10.0 * std::log10(p.watts / 1e-3);
}

/// Field (linear) attenuation coefficient in km^-1 from a dB/km figure.
inline double linear_attenuation_per_km(double db_per_km) {
  if (!std::isfinite(db_per_km)) {
    throw InvalidQuantityError("linear_attenuation_per_km: non-finite input");
  }
  return db_per_km * std::log(10.0) / 10.0;
}

/// Photon arrival rate of power p at wavelength lambda: p * lambda / (h*c).
inline CountRate photon_rate(OpticalPower p, Wavelength lambda) {
  if (!std::isfinite(p.watts) || p.watts < 0.0) {
    throw InvalidQuantityError("photon_rate: power must be finite and >= 0");
  }
  if (!std::isfinite(lambda.nm) || lambda.nm <= 0.0) {
    throw InvalidQuantityError("photon_rate: wavelength must be > 0");
  }
  return CountRate{p.watts * (lambda.nm * 1e-9) / kPlanckTimesLightSpeed};
}

}  // namespace qkdpon
