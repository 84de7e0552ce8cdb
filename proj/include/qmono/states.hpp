#pragma once

// State families: generalized GHZ, generalized W (3 and 4 qubits), and the
// GHZ / W SLOCC class parametrizations, plus seeded uniform sampling.

#include "qmono/qcore.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qmono {

struct GGHZParams {
  cplx a0{};
  cplx a1{};
};

struct GWParams {
  std::vector<cplx> a;  // 3 or 4 amplitudes, a[k] on the ket with bit k set
};

struct GHZClassParams {
  double delta{};  // (0, pi/4]
  double alpha{};  // (0, pi/2]
  double beta{};
  double gamma{};
  double phi{};  // [0, 2*pi)
};

struct WClassParams {
  double a{};
  double b{};
  double c{};  // a,b,c >= 0 and a+b+c <= 1
};

enum class Family { GGHZ, GW3, GW4, GHZClass, WClass };

Family parse_family(const std::string& tag);       // gghz | gw3 | gw4 | ghz-class | w-class
std::string family_tag(Family f);

Ket make_gghz(const GGHZParams& p);
Ket make_gw(const GWParams& p);
Ket make_ghz_class(const GHZClassParams& p);
Ket make_w_class(const WClassParams& p);

// One sampled state with the parameters it was built from (the parameters
// feed the closed-form evolution fast paths).
struct Sampled {
  Family family;
  Ket ket;
  GGHZParams gghz{};
  GWParams gw{};
  GHZClassParams ghz_class{};
  WClassParams w_class{};
};

// Deterministic: the draw depends only on (family, seed, index).
Sampled sample_one(Family family, std::uint64_t seed, std::uint64_t index);

std::vector<Ket> sample(Family family, std::uint64_t seed, int count);

}  // namespace qmono
