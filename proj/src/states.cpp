#include "flavent/states.hpp"

#include <cmath>

namespace flavent {

double PureState::norm_sq() const {
  double s = 0.0;
  for (const cplx& a : amp) s += std::norm(a);
  return s;
}

FlavorIndex parse_flavor(std::string_view label, int n_flavors) {
  struct Entry {
    std::string_view name;
    int row;
  };
  static constexpr Entry kLepton[] = {{"e", 1}, {"mu", 2}, {"tau", 3}, {"s", 4}};
  static constexpr Entry kQuark[] = {{"d", 1}, {"d'", 1}, {"s'", 2}, {"b", 3}, {"b'", 3}};
  for (const auto& e : kLepton)
    if (label == e.name && e.row <= n_flavors) return {std::string(label), e.row};
  for (const auto& e : kQuark)
    if (label == e.name && e.row <= n_flavors) return {std::string(label), e.row};
  throw IndexOutOfRangeError("unknown flavor label: " + std::string(label));
}

PureState one_hot_state(int n, int k) {
  if (n < 2 || n > 4) throw IndexOutOfRangeError("one_hot_state: N must be 2..4");
  if (k < 1 || k > n) throw IndexOutOfRangeError("one_hot_state: mode index out of range");
  PureState psi{n, std::vector<cplx>(size_t{1} << n)};
  psi.amp[size_t{1} << (n - k)] = 1.0;  // qubit 1 = MSB
  return psi;
}

double unitarity_error(const ComplexMatrix& u) {
  return (u.adjoint() * u).max_abs_diff(ComplexMatrix::identity(u.dim()));
}

PureState flavor_state(const ComplexMatrix& u, int row) {
  const int n = u.dim();
  if (row < 1 || row > n) throw IndexOutOfRangeError("flavor_state: row out of range");
  const ComplexMatrix gram = u.adjoint() * u;
  if (gram.max_abs_diff(ComplexMatrix::identity(n)) > kHermTol)
    throw NonUnitaryError("flavor_state: mixing matrix is not unitary");
  PureState psi{n, std::vector<cplx>(size_t{1} << n)};
  for (int k = 1; k <= n; ++k) psi.amp[size_t{1} << (n - k)] = u(row - 1, k - 1);
  return psi;
}

PureState w_state(int n) {
  if (n < 2 || n > 4) throw IndexOutOfRangeError("w_state: N must be 2..4");
  PureState psi{n, std::vector<cplx>(size_t{1} << n)};
  for (int k = 1; k <= n; ++k) psi.amp[size_t{1} << (n - k)] = 1.0 / std::sqrt(double(n));
  return psi;
}

PureState ghz_state(int n) {
  if (n < 2 || n > 4) throw IndexOutOfRangeError("ghz_state: N must be 2..4");
  PureState psi{n, std::vector<cplx>(size_t{1} << n)};
  psi.amp.front() = 1.0 / std::sqrt(2.0);
  psi.amp.back() = 1.0 / std::sqrt(2.0);
  return psi;
}

ComplexMatrix density_matrix(const PureState& psi) {
  if (std::abs(psi.norm_sq() - 1.0) > 1e-10)
    throw NotNormalizedError("density_matrix: state is not normalized");
  const int dim = static_cast<int>(psi.amp.size());
  ComplexMatrix rho(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) rho(i, j) = psi.amp[i] * std::conj(psi.amp[j]);
  return rho;
}

cplx inner_product(const PureState& a, const PureState& b) {
  if (a.n_qubits != b.n_qubits) throw DimMismatchError("inner_product: register mismatch");
  cplx s = 0.0;
  for (size_t i = 0; i < a.amp.size(); ++i) s += std::conj(a.amp[i]) * b.amp[i];
  return s;
}

}  // namespace flavent
