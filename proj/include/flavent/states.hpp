#pragma once

#include <string_view>
#include <vector>

#include "flavent/matrix.hpp"

namespace flavent {

struct IndexOutOfRangeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonUnitaryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotNormalizedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Amplitude vector over the 2^N computational basis; qubit 1 is the most
/// significant bit of the basis index.
struct PureState {
  int n_qubits = 0;
  std::vector<cplx> amp;  // size 2^n_qubits

  double norm_sq() const;
};

/// Flavor label bound to a row of the mixing matrix: e/mu/tau(/s) for leptons,
/// d'/s'/b' for quarks. Row is 1-based.
struct FlavorIndex {
  std::string label;
  int row = 0;
};

/// Parses e|mu|tau|s (or d|s|b quark shorthand) against an N-flavor matrix.
FlavorIndex parse_flavor(std::string_view label, int n_flavors);

/// |nu_k> as the N-qubit basis state with a single 1 at mode k.
PureState one_hot_state(int n, int k);

/// Row `row` of unitary U applied to the one-hot mass basis.
PureState flavor_state(const ComplexMatrix& u, int row);

PureState w_state(int n);
PureState ghz_state(int n);

ComplexMatrix density_matrix(const PureState& psi);

cplx inner_product(const PureState& a, const PureState& b);

double unitarity_error(const ComplexMatrix& u);

}  // namespace flavent
