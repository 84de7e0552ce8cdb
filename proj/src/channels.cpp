#include "qmono/channels.hpp"

#include <bit>
#include <cmath>

namespace qmono {

Channel parse_channel(const std::string& tag) {
  if (tag == "global") return Channel::Global;
  if (tag == "ad") return Channel::AD;
  if (tag == "pd") return Channel::PD;
  if (tag == "dp") return Channel::DP;
  throw ValidationError("unknown channel tag '" + tag + "'");
}

std::string channel_tag(Channel c) {
  switch (c) {
    case Channel::Global: return "global";
    case Channel::AD: return "ad";
    case Channel::PD: return "pd";
    case Channel::DP: return "dp";
  }
  throw ValidationError("bad channel enum");
}

NoiseSpec::NoiseSpec(Channel k, double prob) : kind(k), p(prob) {
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("noise parameter p must be in [0, 1]");
}

void KrausSet::validate_completeness(double tol) const {
  if (ops.empty()) throw ValidationError("KrausSet: empty");
  Mat sum = Mat::Zero(2, 2);
  for (const Mat& e : ops) {
    if (e.rows() != 2 || e.cols() != 2) throw ValidationError("KrausSet: operators must be 2x2");
    sum += e.adjoint() * e;
  }
  if ((sum - Mat::Identity(2, 2)).cwiseAbs().maxCoeff() > tol)
    throw ContractViolation("KrausSet: completeness relation violated");
}

KrausSet kraus_for(const NoiseSpec& spec) {
  if (!spec.local()) throw ValidationError("kraus_for: global noise is not a local channel");
  const double p = spec.p;
  KrausSet k;
  switch (spec.kind) {
    case Channel::AD: {
      Mat e0 = Mat::Zero(2, 2), e1 = Mat::Zero(2, 2);
      e0(0, 0) = 1.0;
      e0(1, 1) = std::sqrt(1.0 - p);
      e1(0, 1) = std::sqrt(p);
      k.ops = {e0, e1};
      break;
    }
    case Channel::PD: {
      const Mat i2 = identity2(), sz = pauli_z();
      k.ops = {std::sqrt(1.0 - p) * i2, (std::sqrt(p) / 2.0) * (i2 + sz),
               (std::sqrt(p) / 2.0) * (i2 - sz)};
      break;
    }
    case Channel::DP: {
      k.ops = {std::sqrt(1.0 - p) * identity2(), std::sqrt(p / 3.0) * pauli_x(),
               std::sqrt(p / 3.0) * pauli_y(), std::sqrt(p / 3.0) * pauli_z()};
      break;
    }
    default:
      throw ValidationError("kraus_for: unsupported channel");
  }
  k.validate_completeness();
  return k;
}

DensityMatrix apply_local(const DensityMatrix& rho, const KrausSet& kraus) {
  kraus.validate_completeness();
  const int n = rho.qubits();
  const int nk = static_cast<int>(kraus.ops.size());
  const Eigen::Index d = rho.dim();
  Mat out = Mat::Zero(d, d);
  Mat tmp(d, d);
  std::vector<int> idx(n, 0);
  while (true) {
    Mat op = kraus.ops[idx[0]];
    for (int j = 1; j < n; ++j) op = tensor(op, kraus.ops[idx[j]]);
    tmp.noalias() = op * rho.matrix();
    out.noalias() += tmp * op.adjoint();
    int j = n - 1;
    while (j >= 0 && ++idx[j] == nk) idx[j--] = 0;
    if (j < 0) break;
  }
  // enforce exact Hermiticity against accumulated roundoff
  out = 0.5 * (out + out.adjoint().eval());
  return DensityMatrix(rho.reg(), std::move(out));
}

DensityMatrix apply_local(const DensityMatrix& rho, const NoiseSpec& spec) {
  return apply_local(rho, kraus_for(spec));
}

DensityMatrix apply_global(const DensityMatrix& rho, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("apply_global: p must be in [0, 1]");
  const Eigen::Index d = rho.dim();
  Mat out = (p / static_cast<double>(d)) * Mat::Identity(d, d) + (1.0 - p) * rho.matrix();
  return DensityMatrix(rho.reg(), std::move(out));
}

DensityMatrix apply_noise(const DensityMatrix& rho, const NoiseSpec& spec) {
  return spec.local() ? apply_local(rho, spec) : apply_global(rho, spec.p);
}

DensityMatrix evolved_gghz_closed_form(const GGHZParams& params, const NoiseSpec& spec) {
  if (!spec.local()) throw ValidationError("evolved_gghz_closed_form: needs a local channel");
  const double p = spec.p;
  const double q = 1.0 - 2.0 * p / 3.0;
  double u[2], v[2], w;
  switch (spec.kind) {
    case Channel::AD:
      u[0] = 1.0; u[1] = p;
      v[0] = 0.0; v[1] = 1.0 - p;
      w = std::pow(1.0 - p, 1.5);
      break;
    case Channel::PD:
      u[0] = 1.0; u[1] = 0.0;
      v[0] = 0.0; v[1] = 1.0;
      w = std::pow(1.0 - p, 3);
      break;
    default:  // DP
      u[0] = q; u[1] = 1.0 - q;
      v[0] = 1.0 - q; v[1] = q;
      w = std::pow(2.0 * q - 1.0, 3);
      break;
  }
  Mat out = Mat::Zero(8, 8);
  const double w2[2] = {std::norm(params.a0), std::norm(params.a1)};
  for (int i = 0; i < 2; ++i) {
    // (u 'P0' + v 'P1')^{x3} is diagonal; basis index bits select u or v
    for (int b = 0; b < 8; ++b) {
      double prod = w2[i];
      for (int bit = 0; bit < 3; ++bit) prod *= ((b >> bit) & 1) ? v[i] : u[i];
      out(b, b) += prod;
    }
  }
  out(0, 7) += w * params.a0 * std::conj(params.a1);
  out(7, 0) += w * params.a1 * std::conj(params.a0);
  return DensityMatrix({1, 2, 3}, std::move(out));
}

DensityMatrix evolved_gw_closed_form(const GWParams& params, const NoiseSpec& spec) {
  if (!spec.local()) throw ValidationError("evolved_gw_closed_form: needs a local channel");
  if (params.a.size() != 3) throw ValidationError("evolved_gw_closed_form: 3-qubit params only");
  const double p = spec.p;
  const Ket gw = make_gw(params);
  const Mat pure = gw.amplitudes() * gw.amplitudes().adjoint();
  Mat out;

  switch (spec.kind) {
    case Channel::AD: {
      // p P[|000>] + (1-p) P[|Phi>]
      out = (1.0 - p) * pure;
      out(0, 0) += p;
      break;
    }
    case Channel::PD: {
      // coherences decay as (1-p)^{Hamming distance}
      out = pure;
      for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
          const int h = std::popcount(static_cast<unsigned>(i ^ j));
          out(i, j) *= std::pow(1.0 - p, h);
        }
      break;
    }
    default: {  // DP
      const double q = 1.0 - 2.0 * p / 3.0;
      Mat r = Mat::Zero(2, 2), rp = Mat::Zero(2, 2);
      r(0, 0) = q; r(1, 1) = 1.0 - q;
      rp(0, 0) = 1.0 - q; rp(1, 1) = q;
      Mat k01 = Mat::Zero(2, 2), k10 = Mat::Zero(2, 2);
      k01(0, 1) = 1.0;  // |0><1|
      k10(1, 0) = 1.0;
      const cplx a0 = params.a[0], a1 = params.a[1], a2 = params.a[2];
      // |a_k|^2 puts the flipped population on the qubit carrying the excitation
      out = std::norm(a0) * tensor(tensor(r, r), rp) + std::norm(a1) * tensor(tensor(r, rp), r) +
            std::norm(a2) * tensor(tensor(rp, r), r);
      const double c = (2.0 * q - 1.0) * (2.0 * q - 1.0);
      Mat t = a0 * std::conj(a1) * tensor(tensor(r, k01), k10) +
              a0 * std::conj(a2) * tensor(tensor(k01, r), k10) +
              a1 * std::conj(a2) * tensor(tensor(k01, k10), r);
      out += c * (t + t.adjoint().eval());
      break;
    }
  }
  return DensityMatrix({1, 2, 3}, std::move(out));
}

}  // namespace qmono
