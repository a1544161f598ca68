#include "flavent/measures.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace flavent {

Bipartition make_bipartition(int n_qubits, std::vector<int> side_a) {
  if (side_a.empty() || static_cast<int>(side_a.size()) >= n_qubits)
    throw BadSplitError("bipartition side_a must be non-empty and proper");
  QubitSubset a = make_subset(n_qubits, std::move(side_a));
  QubitSubset b = complement(a);
  return {n_qubits, std::move(a), std::move(b)};
}

std::vector<Bipartition> bipartitions(int n_qubits, int n) {
  if (n < 1 || n >= n_qubits) throw BadSplitError("split size must satisfy 1 <= n < N");
  std::vector<Bipartition> out;
  std::vector<int> pick(n);
  // lexicographic enumeration of n-subsets of {1..N}
  for (int i = 0; i < n; ++i) pick[i] = i + 1;
  while (true) {
    out.push_back(make_bipartition(n_qubits, pick));
    int i = n - 1;
    while (i >= 0 && pick[i] == n_qubits - (n - 1 - i)) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

std::string bipartition_label(const Bipartition& b) {
  std::string s = "(";
  for (size_t i = 0; i < b.side_a.members.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(b.side_a.members[i]);
  }
  s += ";";
  for (size_t i = 0; i < b.side_b.members.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(b.side_b.members[i]);
  }
  return s + ")";
}

double spectrum_entropy(const std::vector<double>& probs) {
  double e = 0.0;
  for (double p : probs)
    if (p > 0.0) e -= p * std::log2(p);
  return e;
}

double binary_entropy(double p) { return spectrum_entropy({p, 1.0 - p}); }

double entropy_of_bipartition(const PureState& psi, const Bipartition& b) {
  const ComplexMatrix rho_a = partial_trace(density_matrix(psi), b.side_a);
  return spectrum_entropy(clamp_psd_spectrum(eig_hermitian(rho_a)));
}

namespace {

MeasureReport report_over_bipartitions(int n_qubits, int n,
                                       const std::function<double(const Bipartition&)>& kernel) {
  MeasureReport r;
  r.split_size = n;
  r.parts = bipartitions(n_qubits, n);
  double sum = 0.0;
  for (const Bipartition& b : r.parts) {
    r.values.push_back(kernel(b));
    sum += r.values.back();
  }
  r.average = sum / static_cast<double>(r.parts.size());
  return r;
}

int qubits_of(const ComplexMatrix& rho) {
  int n = 0;
  while ((1 << n) < rho.dim()) ++n;
  if ((1 << n) != rho.dim()) throw DimMismatchError("density matrix dim is not a power of two");
  return n;
}

}  // namespace

MeasureReport average_entropy(const PureState& psi, int n) {
  return report_over_bipartitions(psi.n_qubits, n,
                                  [&](const Bipartition& b) { return entropy_of_bipartition(psi, b); });
}

double log_negativity(const ComplexMatrix& rho, const Bipartition& b) {
  if (rho.hermiticity_error() > kHermTol)
    throw NotDensityMatrixError("log_negativity: rho is not Hermitian");
  if (std::abs(rho.trace() - cplx{1.0}) > kHermTol)
    throw NotDensityMatrixError("log_negativity: rho trace differs from 1");
  try {
    clamp_psd_spectrum(eig_hermitian(rho));
  } catch (const NotPositiveError&) {
    throw NotDensityMatrixError("log_negativity: rho is not positive semidefinite");
  }
  const double norm = trace_norm(partial_transpose(rho, b.side_b));
  return std::max(0.0, std::log2(norm));
}

MeasureReport average_negativity(const ComplexMatrix& rho, int n) {
  return report_over_bipartitions(qubits_of(rho), n,
                                  [&](const Bipartition& b) { return log_negativity(rho, b); });
}

}  // namespace flavent
