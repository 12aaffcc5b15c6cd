#pragma once

#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qkdpon/quantities.hpp"

namespace qkdpon {

/// Which path the quantum channel takes at the optical splitting point.
enum class Architecture {
  kThrough,  // quantum signal crosses the splitter with the classical traffic
  kBypass,   // quantum signal is filtered around the splitter
};

inline const char* to_string(Architecture a) {
  return a == Architecture::kThrough ? "through" : "bypass";
}

/// A fiber span with per-channel attenuation (dB/km, keyed by wavelength nm).
struct FiberSpan {
  double length_km = 0.0;
  std::map<int, double> attenuation_db_per_km = default_attenuation();

  static std::map<int, double> default_attenuation() {
    return {{1310, 0.25}, {1490, 0.25}, {1550, 0.25}, {1570, 0.25}};
  }

  double attenuation_at(Wavelength lambda) const {
    const auto it = attenuation_db_per_km.find(
        static_cast<int>(std::lround(lambda.nm)));
    if (it == attenuation_db_per_km.end()) {
      throw WrongChannelError("no attenuation entry for " +
                              std::to_string(lambda.nm) + " nm");
    }
    return it->second;
  }

  DecibelLoss loss_db(Wavelength lambda) const {
    return DecibelLoss{length_km * attenuation_at(lambda)};
  }
};

/// Passive splitter: 1:N split plus excess loss.
struct SplitterSpec {
  int ratio = 1;
  double excess_loss_db = 0.0;
};

/// Total splitter attenuation, 10*log10(N) + excess.
inline DecibelLoss splitter_loss(const SplitterSpec& s) {
  if (s.ratio < 1) {
    throw InvalidTopologyError("splitter ratio must be >= 1");
  }
  return DecibelLoss{10.0 * std::log10(static_cast<double>(s.ratio)) +
                     s.excess_loss_db};
}

/// Linear transmittance of one splitter branch. Computed as (1/N) * excess
/// factor rather than through dB so that the N-fold scaling between
/// architectures is exact for power-of-two ratios.
inline double splitter_transmittance(const SplitterSpec& s) {
  if (s.ratio < 1) {
    throw InvalidTopologyError("splitter ratio must be >= 1");
  }
  return (1.0 / static_cast<double>(s.ratio)) *
         db_to_linear(DecibelLoss{s.excess_loss_db});
}

/// One WDM filter (F1..F8 in the experimental layout).
struct WdmElement {
  std::string name;
  double insertion_loss_db = 0.0;
  double isolation_db = 0.0;
};

inline double total_insertion_db(const std::vector<WdmElement>& elements) {
  double sum = 0.0;
  for (const auto& e : elements) sum += e.insertion_loss_db;
  return sum;
}

/// The single-fiber QKD+GPON link: trunk span (fiber1, Alice/OLT side),
/// drop span (fiber2, Bob/ONU side), the splitter, and aggregate WDM
/// insertion losses.
struct Topology {
  Architecture architecture = Architecture::kThrough;
  FiberSpan fiber1;  // Alice/OLT to the splitting point
  FiberSpan fiber2;  // splitting point to Bob/ONU
  SplitterSpec splitter;

  // Aggregate WDM insertion on the quantum path (Alice-side + Bob-side
  // filters). bob_share is the fraction of it sitting on Bob's side; that
  // part also attenuates in-band Raman noise on its way to the detector.
  double wdm_total_quantum_db = 1.0;
  double wdm_bob_share = 0.5;

  // The two extra filters that route the quantum band around the splitter.
  double bypass_wdm_extra_db = 1.0;

  // Aggregate WDM insertion seen by the classical channels.
  double wdm_total_classical_db = 1.0;

  // Optional access fiber at the splitting point; classical reach only.
  std::optional<FiberSpan> user_drop;
};

/// All invariant violations of a topology (every one, not just the first).
inline std::vector<std::string> validate(const Topology& t) {
  std::vector<std::string> v;
  auto check_span = [&v](const FiberSpan& s, const std::string& name) {
    if (!(s.length_km >= 0.0)) v.push_back(name + ": length >= 0");
    for (const auto& [nm, a] : s.attenuation_db_per_km) {
      if (!(a > 0.0)) {
        v.push_back(name + ": attenuation > 0 at " + std::to_string(nm) +
                    " nm");
      }
    }
  };
  check_span(t.fiber1, "fiber1");
  check_span(t.fiber2, "fiber2");
  if (t.user_drop) check_span(*t.user_drop, "user_drop");
  if (t.splitter.ratio < 1) v.push_back("splitter: ratio >= 1");
  if (!(t.splitter.excess_loss_db >= 0.0)) {
    v.push_back("splitter: excess loss >= 0");
  }
  if (!(t.wdm_total_quantum_db >= 0.0)) v.push_back("wdm_total_quantum >= 0");
  if (!(t.wdm_bob_share >= 0.0 && t.wdm_bob_share <= 1.0)) {
    v.push_back("wdm_bob_share in [0, 1]");
  }
  if (!(t.bypass_wdm_extra_db >= 0.0)) v.push_back("bypass_wdm_extra >= 0");
  if (!(t.wdm_total_classical_db >= 0.0)) {
    v.push_back("wdm_total_classical >= 0");
  }
  return v;
}

/// Attenuation of the split-point element on the quantum path: the splitter
/// branch for Through, the two bypass filters for Bypass.
inline DecibelLoss split_element_loss(const Topology& t) {
  return t.architecture == Architecture::kThrough
             ? splitter_loss(t.splitter)
             : DecibelLoss{t.bypass_wdm_extra_db};
}

inline double split_element_transmittance(const Topology& t) {
  return t.architecture == Architecture::kThrough
             ? splitter_transmittance(t.splitter)
             : db_to_linear(DecibelLoss{t.bypass_wdm_extra_db});
}

/// End-to-end quantum-channel loss at 1550 nm:
/// fiber1 + split-point element + fiber2 + aggregate WDM insertion.
inline DecibelLoss quantum_path_loss(const Topology& t) {
  return DecibelLoss{t.fiber1.loss_db(kQuantumChannel).db +
                     split_element_loss(t).db +
                     t.fiber2.loss_db(kQuantumChannel).db +
                     t.wdm_total_quantum_db};
}

/// Linear transmittance of the quantum path, as a product of per-element
/// factors (equal to 10^(-quantum_path_loss/10) up to rounding).
inline double quantum_path_transmittance(const Topology& t) {
  return db_to_linear(t.fiber1.loss_db(kQuantumChannel)) *
         split_element_transmittance(t) *
         db_to_linear(t.fiber2.loss_db(kQuantumChannel)) *
         db_to_linear(DecibelLoss{t.wdm_total_quantum_db});
}

enum class Direction { kDownstream, kUpstream };

/// Loss of a classical channel across the link. The classical signals
/// traverse the splitter in both architectures (only the quantum band is
/// routed around it), so the result is architecture-independent. The
/// user-access drop, when present, is part of the classical path.
inline DecibelLoss classical_path_loss(const Topology& t, Wavelength lambda,
                                       Direction) {
  const int nm = static_cast<int>(std::lround(lambda.nm));
  if (nm != 1310 && nm != 1490) {
    throw WrongChannelError("classical_path_loss: " + std::to_string(nm) +
                            " nm is not a classical channel");
  }
  double db = t.fiber1.loss_db(lambda).db + splitter_loss(t.splitter).db +
              t.fiber2.loss_db(lambda).db + t.wdm_total_classical_db;
  if (t.user_drop) db += t.user_drop->loss_db(lambda).db;
  return DecibelLoss{db};
}

}  // namespace qkdpon
