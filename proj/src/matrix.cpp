#include "flavent/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace flavent {

double ComplexMatrix::hermiticity_error() const {
  double worst = 0.0;
  for (int i = 0; i < dim_; ++i)
    for (int j = i; j < dim_; ++j)
      worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return worst;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
  if (dim_ != rhs.dim_) throw DimMismatchError("matrix product dim mismatch");
  ComplexMatrix out(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int k = 0; k < dim_; ++k) {
      const cplx aik = (*this)(i, k);
      if (aik == cplx{}) continue;
      for (int j = 0; j < dim_; ++j) out(i, j) += aik * rhs(k, j);
    }
  return out;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& rhs) const {
  if (dim_ != rhs.dim_) throw DimMismatchError("max_abs_diff dim mismatch");
  double worst = 0.0;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) worst = std::max(worst, std::abs((*this)(i, j) - rhs(i, j)));
  return worst;
}

QubitSubset make_subset(int n_qubits, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  if (members.empty()) throw DimMismatchError("qubit subset must be non-empty");
  for (size_t i = 0; i < members.size(); ++i) {
    if (members[i] < 1 || members[i] > n_qubits) throw DimMismatchError("qubit index out of range");
    if (i > 0 && members[i] == members[i - 1]) throw DimMismatchError("duplicate qubit index");
  }
  return QubitSubset{n_qubits, std::move(members)};
}

QubitSubset complement(const QubitSubset& s) {
  std::vector<int> out;
  size_t pos = 0;
  for (int q = 1; q <= s.n_qubits; ++q) {
    if (pos < s.members.size() && s.members[pos] == q)
      ++pos;
    else
      out.push_back(q);
  }
  return QubitSubset{s.n_qubits, std::move(out)};
}

namespace {

double frobenius(const ComplexMatrix& m) {
  double s = 0.0;
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) s += std::norm(m(i, j));
  return std::sqrt(s);
}

double off_diagonal_norm(const ComplexMatrix& m) {
  double s = 0.0;
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j)
      if (i != j) s += std::norm(m(i, j));
  return std::sqrt(s);
}

// Cyclic complex Jacobi. Each sweep annihilates every off-diagonal pair (p,q)
// with a phase-carrying Givens rotation; diagonal converges to the spectrum.
EigDecomposition jacobi(const ComplexMatrix& input, bool want_vectors) {
  if (input.hermiticity_error() > kHermTol)
    throw NonHermitianError("eig_hermitian: input asymmetry exceeds tolerance");
  const int n = input.dim();
  ComplexMatrix a = input;
  // Symmetrize so roundoff-level asymmetry cannot drift the iteration.
  for (int i = 0; i < n; ++i) {
    a(i, i) = a(i, i).real();
    for (int j = i + 1; j < n; ++j) {
      const cplx avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = avg;
      a(j, i) = std::conj(avg);
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double target = 1e-13 * std::max(frobenius(a), 1e-300);
  constexpr int kMaxSweeps = 100;
  int sweep = 0;
  while (off_diagonal_norm(a) > target) {
    if (++sweep > kMaxSweeps) throw NoConvergenceError("eig_hermitian: sweep limit exceeded");
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const cplx g = a(p, q);
        const double absg = std::abs(g);
        if (absg == 0.0) continue;
        const cplx phase = g / absg;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * absg);
        const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // Plane rotation J: J_pp=c, J_pq=s*phase, J_qp=-s*conj(phase), J_qq=c.
        // Update a <- J^dag a J and v <- v J.
        for (int k = 0; k < n; ++k) {
          const cplx akp = a(k, p);
          const cplx akq = a(k, q);
          a(k, p) = c * akp - s * std::conj(phase) * akq;
          a(k, q) = s * phase * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const cplx apk = a(p, k);
          const cplx aqk = a(q, k);
          a(p, k) = c * apk - s * phase * aqk;
          a(q, k) = s * std::conj(phase) * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        if (want_vectors) {
          for (int k = 0; k < n; ++k) {
            const cplx vkp = v(k, p);
            const cplx vkq = v(k, q);
            v(k, p) = c * vkp - s * std::conj(phase) * vkq;
            v(k, q) = s * phase * vkp + c * vkq;
          }
        }
      }
    }
  }
  EigDecomposition out{std::vector<double>(n), ComplexMatrix(n)};
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });
  for (int i = 0; i < n; ++i) {
    out.values[i] = a(order[i], order[i]).real();
    if (want_vectors)
      for (int k = 0; k < n; ++k) out.vectors(k, i) = v(k, order[i]);
  }
  return out;
}

}  // namespace

std::vector<double> eig_hermitian(const ComplexMatrix& m) { return jacobi(m, false).values; }

EigDecomposition eig_hermitian_full(const ComplexMatrix& m) { return jacobi(m, true); }

double trace_norm(const ComplexMatrix& m) {
  double s = 0.0;
  for (double lambda : eig_hermitian(m)) s += std::abs(lambda);
  return s;
}

namespace {

int log2_exact(int dim) {
  int n = 0;
  while ((1 << n) < dim) ++n;
  if ((1 << n) != dim) throw DimMismatchError("operator dim is not a power of two");
  return n;
}

// Bit position (from LSB) of 1-based qubit q; qubit 1 is the most significant.
int bit_of(int n_qubits, int q) { return n_qubits - q; }

}  // namespace

ComplexMatrix partial_trace(const ComplexMatrix& rho, const QubitSubset& keep) {
  const int n = log2_exact(rho.dim());
  if (keep.n_qubits != n) throw DimMismatchError("partial_trace: subset register size mismatch");
  const QubitSubset traced = complement(keep);
  const int nk = static_cast<int>(keep.members.size());
  const int nt = static_cast<int>(traced.members.size());
  ComplexMatrix out(1 << nk);
  for (int a = 0; a < (1 << nk); ++a) {
    for (int ap = 0; ap < (1 << nk); ++ap) {
      cplx sum = 0.0;
      for (int b = 0; b < (1 << nt); ++b) {
        int row = 0, col = 0;
        for (int i = 0; i < nk; ++i) {
          const int bit = bit_of(n, keep.members[i]);
          if (a >> (nk - 1 - i) & 1) row |= 1 << bit;
          if (ap >> (nk - 1 - i) & 1) col |= 1 << bit;
        }
        for (int i = 0; i < nt; ++i) {
          const int bit = bit_of(n, traced.members[i]);
          if (b >> (nt - 1 - i) & 1) {
            row |= 1 << bit;
            col |= 1 << bit;
          }
        }
        sum += rho(row, col);
      }
      out(a, ap) = sum;
    }
  }
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, const QubitSubset& transpose_set) {
  const int n = log2_exact(rho.dim());
  if (transpose_set.n_qubits != n)
    throw DimMismatchError("partial_transpose: subset register size mismatch");
  int mask = 0;
  for (int q : transpose_set.members) mask |= 1 << bit_of(n, q);
  ComplexMatrix out(rho.dim());
  for (int r = 0; r < rho.dim(); ++r)
    for (int c = 0; c < rho.dim(); ++c) {
      const int rr = (r & ~mask) | (c & mask);
      const int cc = (c & ~mask) | (r & mask);
      out(rr, cc) = rho(r, c);
    }
  return out;
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  const long dim = static_cast<long>(a.dim()) * b.dim();
  if (dim > kMaxDim) throw DimOverflowError("tensor_product result exceeds max dim");
  ComplexMatrix out(static_cast<int>(dim));
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      for (int k = 0; k < b.dim(); ++k)
        for (int l = 0; l < b.dim(); ++l)
          out(i * b.dim() + k, j * b.dim() + l) = a(i, j) * b(k, l);
  return out;
}

std::vector<double> clamp_psd_spectrum(std::vector<double> values, double tol) {
  for (double& v : values) {
    if (v < -tol) throw NotPositiveError("negative eigenvalue beyond roundoff window");
    if (v < 0.0) v = 0.0;
  }
  return values;
}

}  // namespace flavent
