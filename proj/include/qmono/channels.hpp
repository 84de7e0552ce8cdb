#pragma once

// Noise models: global white-noise admixture and local amplitude-damping,
// phase-damping and depolarizing channels in operator-sum form, together
// with closed-form evolved states for the gGHZ and gW families.

#include "qmono/qcore.hpp"
#include "qmono/states.hpp"

#include <string>
#include <vector>

namespace qmono {

enum class Channel { Global, AD, PD, DP };

Channel parse_channel(const std::string& tag);  // global | ad | pd | dp
std::string channel_tag(Channel c);

struct NoiseSpec {
  Channel kind = Channel::Global;
  double p = 0.0;

  NoiseSpec() = default;
  NoiseSpec(Channel k, double prob);
  bool local() const { return kind != Channel::Global; }
};

struct KrausSet {
  std::vector<Mat> ops;  // 2x2 single-qubit operators

  // sum_k E_k^dagger E_k == I within tol, entrywise
  void validate_completeness(double tol = 1e-12) const;
};

// Single-qubit Kraus operators; global noise has no local Kraus set.
KrausSet kraus_for(const NoiseSpec& spec);

// Apply the same single-qubit channel to every qubit, materializing all
// k^n tensor-product Kraus terms.
DensityMatrix apply_local(const DensityMatrix& rho, const KrausSet& kraus);
DensityMatrix apply_local(const DensityMatrix& rho, const NoiseSpec& spec);

// rho' = (p / 2^n) I + (1 - p) rho
DensityMatrix apply_global(const DensityMatrix& rho, double p);

// Dispatch on spec.kind.
DensityMatrix apply_noise(const DensityMatrix& rho, const NoiseSpec& spec);

// Closed-form evolved states for the local channels; both must agree with
// apply_local to 1e-12 entrywise (checked by the oracle suite).
DensityMatrix evolved_gghz_closed_form(const GGHZParams& params, const NoiseSpec& spec);
DensityMatrix evolved_gw_closed_form(const GWParams& params, const NoiseSpec& spec);

}  // namespace qmono
