#include "qmono/states.hpp"

#include "qmono/rng.hpp"

#include <cmath>

namespace qmono {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<int> default_register(int n) {
  std::vector<int> reg(n);
  for (int i = 0; i < n; ++i) reg[i] = i + 1;
  return reg;
}

Vec normalized_complex_sphere(Substream& rng, int n) {
  Vec v(n);
  for (int i = 0; i < n; ++i) {
    auto [re, im] = rng.normal_pair();
    v[i] = cplx(re, im);
  }
  return v / v.norm();
}

}  // namespace

Family parse_family(const std::string& tag) {
  if (tag == "gghz") return Family::GGHZ;
  if (tag == "gw3") return Family::GW3;
  if (tag == "gw4") return Family::GW4;
  if (tag == "ghz-class") return Family::GHZClass;
  if (tag == "w-class") return Family::WClass;
  throw ValidationError("unknown state family tag '" + tag + "'");
}

std::string family_tag(Family f) {
  switch (f) {
    case Family::GGHZ: return "gghz";
    case Family::GW3: return "gw3";
    case Family::GW4: return "gw4";
    case Family::GHZClass: return "ghz-class";
    case Family::WClass: return "w-class";
  }
  throw ValidationError("bad family enum");
}

Ket make_gghz(const GGHZParams& p) {
  if (std::abs(std::norm(p.a0) + std::norm(p.a1) - 1.0) > 1e-12)
    throw ValidationError("make_gghz: |a0|^2 + |a1|^2 != 1");
  Vec amp = Vec::Zero(8);
  amp[0] = p.a0;
  amp[7] = p.a1;
  return Ket(default_register(3), std::move(amp));
}

Ket make_gw(const GWParams& p) {
  const int n = static_cast<int>(p.a.size());
  if (n != 3 && n != 4) throw ValidationError("make_gw: need 3 or 4 amplitudes");
  double norm2 = 0;
  for (const cplx& a : p.a) norm2 += std::norm(a);
  if (std::abs(norm2 - 1.0) > 1e-12) throw ValidationError("make_gw: amplitudes not normalized");
  Vec amp = Vec::Zero(Eigen::Index{1} << n);
  for (int k = 0; k < n; ++k) amp[Eigen::Index{1} << k] = p.a[k];
  return Ket(default_register(n), std::move(amp));
}

Ket make_ghz_class(const GHZClassParams& p) {
  if (!(p.delta > 0.0 && p.delta <= kPi / 4)) throw ValidationError("ghz-class: delta out of (0, pi/4]");
  for (double ang : {p.alpha, p.beta, p.gamma})
    if (!(ang > 0.0 && ang <= kPi / 2)) throw ValidationError("ghz-class: angle out of (0, pi/2]");
  if (!(p.phi >= 0.0 && p.phi < 2 * kPi)) throw ValidationError("ghz-class: phi out of [0, 2*pi)");

  const double cd = std::cos(p.delta), sd = std::sin(p.delta);
  const double ca = std::cos(p.alpha), sa = std::sin(p.alpha);
  const double cb = std::cos(p.beta), sb = std::sin(p.beta);
  const double cg = std::cos(p.gamma), sg = std::sin(p.gamma);
  const double K = 1.0 / (1.0 + 2.0 * cd * sd * ca * cb * cg * std::cos(p.phi));
  const cplx phase = std::polar(1.0, p.phi);

  Vec amp = Vec::Zero(8);
  amp[0] = cd;
  // s_delta e^{i phi} |phi_alpha>|phi_beta>|phi_gamma>, |phi_k> = c_k|0> + s_k|1>
  const double f1[2] = {ca, sa}, f2[2] = {cb, sb}, f3[2] = {cg, sg};
  for (int i = 0; i < 8; ++i)
    amp[i] += sd * phase * f1[(i >> 2) & 1] * f2[(i >> 1) & 1] * f3[i & 1];
  amp *= std::sqrt(K);
  return Ket(default_register(3), std::move(amp));
}

Ket make_w_class(const WClassParams& p) {
  if (p.a < 0 || p.b < 0 || p.c < 0) throw ValidationError("w-class: negative weight");
  const double rest = 1.0 - (p.a + p.b + p.c);
  if (rest < -1e-12) throw ValidationError("w-class: a+b+c > 1");
  Vec amp = Vec::Zero(8);
  amp[1] = std::sqrt(p.a);
  amp[2] = std::sqrt(p.b);
  amp[4] = std::sqrt(p.c);
  amp[0] = std::sqrt(std::max(0.0, rest));
  return Ket(default_register(3), std::move(amp));
}

Sampled sample_one(Family family, std::uint64_t seed, std::uint64_t index) {
  Substream rng(seed, index);
  switch (family) {
    case Family::GGHZ: {
      const Vec v = normalized_complex_sphere(rng, 2);
      GGHZParams p{v[0], v[1]};
      return {family, make_gghz(p), p, {}, {}, {}};
    }
    case Family::GW3:
    case Family::GW4: {
      const int n = family == Family::GW3 ? 3 : 4;
      const Vec v = normalized_complex_sphere(rng, n);
      GWParams p;
      p.a.assign(v.data(), v.data() + n);
      return {family, make_gw(p), {}, p, {}, {}};
    }
    case Family::GHZClass: {
      GHZClassParams p;
      p.delta = (1.0 - rng.uniform()) * kPi / 4;  // (0, pi/4]
      p.alpha = (1.0 - rng.uniform()) * kPi / 2;
      p.beta = (1.0 - rng.uniform()) * kPi / 2;
      p.gamma = (1.0 - rng.uniform()) * kPi / 2;
      p.phi = rng.uniform() * 2 * kPi;
      return {family, make_ghz_class(p), {}, {}, p, {}};
    }
    case Family::WClass: {
      WClassParams p;
      do {  // uniform on the simplex a+b+c <= 1 by rejection
        p.a = rng.uniform();
        p.b = rng.uniform();
        p.c = rng.uniform();
      } while (p.a + p.b + p.c > 1.0);
      return {family, make_w_class(p), {}, {}, {}, p};
    }
  }
  throw ValidationError("bad family enum");
}

std::vector<Ket> sample(Family family, std::uint64_t seed, int count) {
  if (count < 1) throw ValidationError("sample: count must be >= 1");
  std::vector<Ket> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(sample_one(family, seed, i).ket);
  return out;
}

}  // namespace qmono
