#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace flavent {

using cplx = std::complex<double>;

struct NonHermitianError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DimMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DimOverflowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotPositiveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kMaxDim = 16;
inline constexpr double kHermTol = 1e-10;

/// Dense square complex matrix, row-major, dim <= 16.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim) {
    if (dim < 1 || dim > kMaxDim) throw DimOverflowError("matrix dim out of range: " + std::to_string(dim));
  }

  static ComplexMatrix identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  int dim() const { return dim_; }
  cplx& operator()(int r, int c) { return a_[static_cast<size_t>(r) * dim_ + c]; }
  const cplx& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * dim_ + c]; }

  cplx trace() const {
    cplx t = 0.0;
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
  }

  /// max_ij |M_ij - conj(M_ji)|
  double hermiticity_error() const;

  ComplexMatrix adjoint() const;
  ComplexMatrix operator*(const ComplexMatrix& rhs) const;

  double max_abs_diff(const ComplexMatrix& rhs) const;

 private:
  int dim_;
  std::vector<cplx> a_;
};

/// Sorted set of 1-based qubit indices inside an N-qubit register.
struct QubitSubset {
  int n_qubits = 0;
  std::vector<int> members;  // strictly increasing, each in 1..n_qubits
};

QubitSubset make_subset(int n_qubits, std::vector<int> members);
QubitSubset complement(const QubitSubset& s);

struct EigDecomposition {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // columns, same order as values
};

/// Eigenvalues of a Hermitian matrix (ascending), via cyclic Jacobi rotations.
std::vector<double> eig_hermitian(const ComplexMatrix& m);
EigDecomposition eig_hermitian_full(const ComplexMatrix& m);

/// Sum of |eigenvalue| for Hermitian m.
double trace_norm(const ComplexMatrix& m);

ComplexMatrix partial_trace(const ComplexMatrix& rho, const QubitSubset& keep);
ComplexMatrix partial_transpose(const ComplexMatrix& rho, const QubitSubset& transpose_set);
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Clamps eigenvalues of a nominally PSD matrix: values in [-1e-10, 0) become 0,
/// anything more negative throws NotPositiveError.
std::vector<double> clamp_psd_spectrum(std::vector<double> values, double tol = kHermTol);

}  // namespace flavent
