#include "qmono/qcore.hpp"

#include <algorithm>
#include <cmath>

namespace qmono {

namespace {

bool power_of_two_dim(Eigen::Index d) {
  return d == 2 || d == 4 || d == 8 || d == 16;
}

double max_abs_asymmetry(const Mat& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

// Spread the bits of `value` (MSB first) over the given register positions
// of an n-qubit basis index.
int embed_bits(int value, const std::vector<int>& positions, int n) {
  int out = 0;
  const int k = static_cast<int>(positions.size());
  for (int a = 0; a < k; ++a) {
    const int bit = (value >> (k - 1 - a)) & 1;
    out |= bit << (n - 1 - positions[a]);
  }
  return out;
}

}  // namespace

Mat pauli_x() {
  Mat m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Mat pauli_y() {
  Mat m(2, 2);
  m << cplx(0, 0), cplx(0, -1), cplx(0, 1), cplx(0, 0);
  return m;
}

Mat pauli_z() {
  Mat m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

Mat identity2() { return Mat::Identity(2, 2); }

Mat tensor(const Mat& a, const Mat& b) {
  const Eigen::Index ra = a.rows(), ca = a.cols(), rb = b.rows(), cb = b.cols();
  if (ra * rb > kMaxDim || ca * cb > kMaxDim)
    throw ValidationError("tensor: result dimension exceeds " + std::to_string(kMaxDim));
  Mat out(ra * rb, ca * cb);
  for (Eigen::Index i = 0; i < ra; ++i)
    for (Eigen::Index j = 0; j < ca; ++j) out.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
  return out;
}

Ket::Ket(std::vector<int> reg, Vec amplitudes) : reg_(std::move(reg)), amp_(std::move(amplitudes)) {
  const int n = static_cast<int>(reg_.size());
  if (n < 1 || n > 4) throw ValidationError("Ket: register must hold 1..4 qubits");
  if (amp_.size() != (Eigen::Index{1} << n))
    throw ValidationError("Ket: amplitude count does not match register size");
  std::vector<int> sorted = reg_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw ValidationError("Ket: duplicate qubit label");
  if (std::abs(amp_.squaredNorm() - 1.0) > 1e-12)
    throw ValidationError("Ket: amplitudes are not normalized");
}

DensityMatrix::DensityMatrix(std::vector<int> reg, Mat rho)
    : reg_(std::move(reg)), rho_(std::move(rho)) {
  const int n = static_cast<int>(reg_.size());
  if (n < 1 || n > 4) throw ValidationError("DensityMatrix: register must hold 1..4 qubits");
  if (rho_.rows() != rho_.cols() || rho_.rows() != (Eigen::Index{1} << n))
    throw ValidationError("DensityMatrix: matrix dimension does not match register");
  if (!power_of_two_dim(rho_.rows()))
    throw ValidationError("DensityMatrix: dimension must be in {2,4,8,16}");
  if (max_abs_asymmetry(rho_) > kHermTol)
    throw ContractViolation("DensityMatrix: not Hermitian within 1e-12");
  if (std::abs(rho_.trace().real() - 1.0) > kTraceTol || std::abs(rho_.trace().imag()) > kTraceTol)
    throw ContractViolation("DensityMatrix: trace differs from 1 beyond 1e-12");
}

DensityMatrix DensityMatrix::from_ket(const Ket& k) {
  Mat rho = k.amplitudes() * k.amplitudes().adjoint();
  return DensityMatrix(k.reg(), std::move(rho));
}

int DensityMatrix::position(int label) const {
  for (int j = 0; j < qubits(); ++j)
    if (reg_[j] == label) return j;
  throw ValidationError("unknown qubit label " + std::to_string(label));
}

void DensityMatrix::validate_full(double psd_tol) const {
  const Eigen::VectorXd ev = hermitian_eigenvalues(rho_);
  if (ev.minCoeff() < -psd_tol)
    throw ContractViolation("DensityMatrix: negative eigenvalue " + std::to_string(ev.minCoeff()));
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
  if (keep.empty()) throw ValidationError("partial_trace: keep set is empty");
  const int n = rho.qubits();
  std::vector<bool> kept(n, false);
  for (int label : keep) kept[rho.position(label)] = true;

  std::vector<int> keep_pos, tr_pos, out_reg;
  for (int j = 0; j < n; ++j) {
    if (kept[j]) {
      keep_pos.push_back(j);
      out_reg.push_back(rho.reg()[j]);
    } else {
      tr_pos.push_back(j);
    }
  }
  const int dk = 1 << keep_pos.size();
  const int dt = 1 << tr_pos.size();
  Mat out = Mat::Zero(dk, dk);
  const Mat& m = rho.matrix();
  for (int i = 0; i < dk; ++i) {
    const int ei = embed_bits(i, keep_pos, n);
    for (int j = 0; j < dk; ++j) {
      const int ej = embed_bits(j, keep_pos, n);
      cplx sum = 0;
      for (int t = 0; t < dt; ++t) {
        const int et = embed_bits(t, tr_pos, n);
        sum += m(ei | et, ej | et);
      }
      out(i, j) = sum;
    }
  }
  return DensityMatrix(std::move(out_reg), std::move(out));
}

Mat partial_transpose(const DensityMatrix& rho, const std::vector<int>& part) {
  const int n = rho.qubits();
  int mask = 0;
  for (int label : part) mask |= 1 << (n - 1 - rho.position(label));
  const int d = 1 << n;
  Mat out(d, d);
  const Mat& m = rho.matrix();
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const int ip = (i & ~mask) | (j & mask);
      const int jp = (j & ~mask) | (i & mask);
      out(i, j) = m(ip, jp);
    }
  }
  return out;
}

Eigen::VectorXd hermitian_eigenvalues(const Mat& m) {
  switch (m.rows()) {
    case 2: {
      // closed form for the 2x2 Hermitian case
      const double a = m(0, 0).real(), d = m(1, 1).real();
      const double h = 0.5 * (a - d);
      const double r = std::sqrt(h * h + std::norm(m(0, 1)));
      const double mid = 0.5 * (a + d);
      Eigen::VectorXd out(2);
      out << mid - r, mid + r;
      return out;
    }
    case 4: {
      Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(Eigen::Matrix4cd(m),
                                                         Eigen::EigenvaluesOnly);
      return es.eigenvalues();
    }
    case 8: {
      Eigen::SelfAdjointEigenSolver<Eigen::Matrix<cplx, 8, 8>> es(
          Eigen::Matrix<cplx, 8, 8>(m), Eigen::EigenvaluesOnly);
      return es.eigenvalues();
    }
    default: {
      Eigen::SelfAdjointEigenSolver<Mat> es(m, Eigen::EigenvaluesOnly);
      return es.eigenvalues();
    }
  }
}

EigResult eig_hermitian(const Mat& m) {
  if (m.rows() != m.cols()) throw ValidationError("eig_hermitian: matrix not square");
  if (max_abs_asymmetry(m) > 1e-10)
    throw ContractViolation("eig_hermitian: input not Hermitian within 1e-10");
  Eigen::SelfAdjointEigenSolver<Mat> es(m);
  if (es.info() != Eigen::Success) throw ContractViolation("eig_hermitian: solver failed");
  return {es.eigenvalues(), es.eigenvectors()};
}

double entropy_from_eigenvalues(const Eigen::VectorXd& vals, double norm) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    double lam = vals[i] / norm;
    if (lam < 0.0) {
      if (lam < -kPsdTol)
        throw ContractViolation("entropy: eigenvalue below -1e-10: " + std::to_string(lam));
      lam = 0.0;
    }
    if (lam > 1.0) lam = 1.0;
    if (lam > 0.0) s -= lam * std::log2(lam);
  }
  return s;
}

double entropy_hermitian(const Mat& m, double norm) {
  return entropy_from_eigenvalues(hermitian_eigenvalues(m), norm);
}

double von_neumann_entropy(const DensityMatrix& rho) {
  return entropy_hermitian(rho.matrix(), 1.0);
}

}  // namespace qmono
