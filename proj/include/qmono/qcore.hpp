#pragma once

// Dense complex linear algebra for registers of up to four qubits:
// tensor products, partial trace, partial transpose, Hermitian
// eigendecomposition and von Neumann entropy. Qubit 1 is the leftmost
// tensor factor, so basis index bit k (MSB first) belongs to qubit k.

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace qmono {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ContractViolation : std::runtime_error {
  explicit ContractViolation(const std::string& msg) : std::runtime_error(msg) {}
};

struct NoClosedFormError : std::runtime_error {
  explicit NoClosedFormError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ProtocolViolation : std::runtime_error {
  explicit ProtocolViolation(const std::string& msg) : std::runtime_error(msg) {}
};

inline constexpr Eigen::Index kMaxDim = 16;
inline constexpr double kHermTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;

// Kronecker product; dim grows multiplicatively and must stay <= kMaxDim.
Mat tensor(const Mat& a, const Mat& b);

Mat pauli_x();
Mat pauli_y();
Mat pauli_z();
Mat identity2();

// Pure state over an ordered register of qubit labels.
class Ket {
 public:
  Ket(std::vector<int> reg, Vec amplitudes);

  int qubits() const { return static_cast<int>(reg_.size()); }
  const std::vector<int>& reg() const { return reg_; }
  const Vec& amplitudes() const { return amp_; }

 private:
  std::vector<int> reg_;
  Vec amp_;
};

// Hermitian, unit-trace density operator. Hermiticity and trace are checked
// on construction; positive semidefiniteness costs an eigendecomposition and
// is checked via validate_full() (used at API boundaries and in tests).
class DensityMatrix {
 public:
  DensityMatrix(std::vector<int> reg, Mat rho);
  static DensityMatrix from_ket(const Ket& k);

  int qubits() const { return static_cast<int>(reg_.size()); }
  Eigen::Index dim() const { return rho_.rows(); }
  const std::vector<int>& reg() const { return reg_; }
  const Mat& matrix() const { return rho_; }

  // position of a label within the register; throws on unknown label
  int position(int label) const;

  void validate_full(double psd_tol = kPsdTol) const;

 private:
  std::vector<int> reg_;
  Mat rho_;
};

// Trace out everything not in `keep`; resulting register preserves the
// original label order.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

// Transpose the indices of the qubits in `part`. Result is Hermitian with
// the same trace but generally not PSD.
Mat partial_transpose(const DensityMatrix& rho, const std::vector<int>& part);

struct EigResult {
  Eigen::VectorXd values;  // ascending
  Mat vectors;             // columns
};

// Requires max |m - m^dagger| <= 1e-10.
EigResult eig_hermitian(const Mat& m);

// Eigenvalues only, no hermiticity check. Dispatches to fixed-size solvers
// for the hot 2/4/8 dimensional cases.
Eigen::VectorXd hermitian_eigenvalues(const Mat& m);

// Entropy in bits of a PSD unit-trace matrix. Eigenvalues in [-1e-10, 0)
// are treated as 0; anything lower is a contract violation.
double von_neumann_entropy(const DensityMatrix& rho);

// Same entropy on a raw Hermitian PSD matrix with trace `norm` (the matrix
// is implicitly divided by norm). Used for post-measurement branches.
double entropy_hermitian(const Mat& m, double norm = 1.0);

double entropy_from_eigenvalues(const Eigen::VectorXd& vals, double norm = 1.0);

}  // namespace qmono
