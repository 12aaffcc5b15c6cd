#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "qkdpon/topology.hpp"

namespace qkdpon {

/// A classical pump: the 1490 nm downstream transmitter at the OLT (Alice
/// side) or the 1310 nm upstream transmitter at the ONU (Bob side).
/// raman_coefficient is the spontaneously scattered power landing in the
/// 1550 nm channel, per watt of pump, per km of fiber, per GHz of detection
/// bandwidth. duty_factor scales the average pump power (upstream bursts).
struct ClassicalSource {
  Wavelength wavelength{1490.0};
  OpticalPower launch_power{};
  double raman_coefficient = 4e-12;  // W / (W * km * GHz)
  double duty_factor = 1.0;
};

/// Gated single-photon detector at Bob plus the receiver noise filter.
/// noise_acceptance folds the polarization analyzer's transmission for
/// unpolarized Raman light into one factor.
struct DetectorSpec {
  double efficiency = 0.10;
  double dark_rate_hz = 1000.0;   // free-running, before gating
  double gate_width_s = 180e-12;  // FWHM of the detector gate
  double clock_hz = 625e6;
  double filter_bandwidth_ghz = 100.0;
  double noise_acceptance = 0.5;

  double duty_cycle() const { return gate_width_s * clock_hz; }
};

/// Detector-referenced count rates at Bob: dark counts d0, the four Raman
/// terms d1..d4, and the signal-state count q_signal.
struct NoiseBudget {
  CountRate d0{};
  CountRate d1{};  // forward Raman, downstream pump, generated in fiber1
  CountRate d2{};  // forward Raman, downstream pump, generated in fiber2
  CountRate d3{};  // backward Raman, upstream pump, generated in fiber2
  CountRate d4{};  // backward Raman, upstream pump, generated in fiber1
  CountRate q_signal{};
  Architecture architecture = Architecture::kThrough;

  double noise_sum_hz() const {
    return d0.hz + d1.hz + d2.hz + d3.hz + d4.hz;
  }
};

namespace detail {
inline void check_raman_args(OpticalPower pump, double rho,
                             double bandwidth_ghz, double length_km,
                             double alpha_per_km) {
  if (!std::isfinite(pump.watts) || pump.watts < 0.0 || !std::isfinite(rho) ||
      rho < 0.0 || !std::isfinite(bandwidth_ghz) || bandwidth_ghz < 0.0 ||
      !std::isfinite(length_km) || length_km < 0.0 ||
      !std::isfinite(alpha_per_km)) {
    throw InvalidQuantityError("raman power: inputs must be finite and >= 0");
  }
  if (alpha_per_km <= 0.0) {
    throw InvalidQuantityError("raman power: alpha must be > 0");
  }
}
}  // namespace detail

/// Co-propagating spontaneous Raman power exiting the far end of a span:
///   P * rho * B * L * exp(-alpha * L)
/// (pump and scattered light attenuate equally).
inline OpticalPower forward_raman_power(OpticalPower pump, double rho,
                                        double bandwidth_ghz, double length_km,
                                        double alpha_per_km) {
  detail::check_raman_args(pump, rho, bandwidth_ghz, length_km, alpha_per_km);
  return OpticalPower{pump.watts * rho * bandwidth_ghz * length_km *
                      std::exp(-alpha_per_km * length_km)};
}

/// Counter-propagating spontaneous Raman power exiting the pump-input end:
///   P * rho * B * (1 - exp(-2*alpha*L)) / (2*alpha)
inline OpticalPower backward_raman_power(OpticalPower pump, double rho,
                                         double bandwidth_ghz,
                                         double length_km,
                                         double alpha_per_km) {
  detail::check_raman_args(pump, rho, bandwidth_ghz, length_km, alpha_per_km);
  return OpticalPower{pump.watts * rho * bandwidth_ghz *
                      (1.0 - std::exp(-2.0 * alpha_per_km * length_km)) /
                      (2.0 * alpha_per_km)};
}

/// Maps the physical scattering to the four detector-referenced noise terms
/// plus dark counts and the signal count.
///
/// Scattered power is generated per span with the closed forms above (using
/// the span's 1550 nm attenuation), then attenuated by every passive element
/// between the span's exit and Bob: the split-point element (splitter branch
/// for Through, bypass filters for Bypass — the in-band noise follows the
/// quantum path), the remaining span at 1550 nm, and Bob's share of the WDM
/// insertion. Pump delivery into the far span crosses the splitter in both
/// architectures, the classical channels never bypass it.
inline NoiseBudget noise_budget(const Topology& t,
                                std::span<const ClassicalSource> sources,
                                const DetectorSpec& det, double mu,
                                double signal_fraction = 0.75) {
  const ClassicalSource* down = nullptr;
  const ClassicalSource* up = nullptr;
  for (const auto& s : sources) {
    const int nm = static_cast<int>(std::lround(s.wavelength.nm));
    if (nm == 1490) {
      if (down) throw ConfigurationError({"duplicate 1490 nm source"});
      down = &s;
    } else if (nm == 1310) {
      if (up) throw ConfigurationError({"duplicate 1310 nm source"});
      up = &s;
    } else {
      throw ConfigurationError({"source wavelength must be 1310 or 1490 nm"});
    }
  }
  std::vector<std::string> missing;
  if (!down) missing.push_back("missing 1490 nm downstream source");
  if (!up) missing.push_back("missing 1310 nm upstream source");
  if (!missing.empty()) throw ConfigurationError(missing);

  const double bw = det.filter_bandwidth_ghz;
  const double l1 = t.fiber1.length_km;
  const double l2 = t.fiber2.length_km;
  const double alpha1 =
      linear_attenuation_per_km(t.fiber1.attenuation_at(kQuantumChannel));
  const double alpha2 =
      linear_attenuation_per_km(t.fiber2.attenuation_at(kQuantumChannel));

  // Path factors from each span's exit to the detector input.
  const double split_elem = split_element_transmittance(t);
  const double splitter_both = splitter_transmittance(t.splitter);
  const double fiber2_quantum = db_to_linear(t.fiber2.loss_db(kQuantumChannel));
  const double bob_wdm =
      db_to_linear(DecibelLoss{t.wdm_total_quantum_db * t.wdm_bob_share});
  const double from_fiber1_exit = split_elem * fiber2_quantum * bob_wdm;
  const double from_fiber2_exit = bob_wdm;

  const OpticalPower p_down{down->launch_power.watts * down->duty_factor};
  const OpticalPower p_up{up->launch_power.watts * up->duty_factor};

  // d1: downstream pump scatters forward in fiber1, follows the quantum path.
  const double d1_w =
      forward_raman_power(p_down, down->raman_coefficient, bw, l1, alpha1)
          .watts *
      from_fiber1_exit;

  // d2: pump reaches fiber2 through fiber1 and the splitter, scatters forward.
  const OpticalPower p_down_f2{p_down.watts *
                               db_to_linear(t.fiber1.loss_db(kDownstreamChannel)) *
                               splitter_both};
  const double d2_w =
      forward_raman_power(p_down_f2, down->raman_coefficient, bw, l2, alpha2)
          .watts *
      from_fiber2_exit;

  // d3: upstream pump enters fiber2 at Bob's site; backscatter returns there.
  const double d3_w =
      backward_raman_power(p_up, up->raman_coefficient, bw, l2, alpha2).watts *
      from_fiber2_exit;

  // d4: upstream pump reaches fiber1 through fiber2 and the splitter;
  // backscatter exits at the splitting point and follows the quantum path.
  const OpticalPower p_up_f1{p_up.watts *
                             db_to_linear(t.fiber2.loss_db(kUpstreamChannel)) *
                             splitter_both};
  const double d4_w =
      backward_raman_power(p_up_f1, up->raman_coefficient, bw, l1, alpha1)
          .watts *
      from_fiber1_exit;

  const double to_counts =
      det.efficiency * det.duty_cycle() * det.noise_acceptance;
  auto counts = [&](double watts) {
    return CountRate{photon_rate(OpticalPower{watts}, kQuantumChannel).hz *
                     to_counts};
  };

  NoiseBudget b;
  b.architecture = t.architecture;
  b.d0 = CountRate{det.dark_rate_hz * det.duty_cycle()};
  b.d1 = counts(d1_w);
  b.d2 = counts(d2_w);
  b.d3 = counts(d3_w);
  b.d4 = counts(d4_w);
  b.q_signal = CountRate{mu * quantum_path_transmittance(t) * det.efficiency *
                         det.clock_hz * signal_fraction};
  return b;
}

}  // namespace qkdpon
