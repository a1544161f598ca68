#pragma once

#include "flavent/matrix.hpp"
#include "flavent/measures.hpp"

namespace flavent {

struct UnknownSplitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Closed-form eigenvalues of a reduced density matrix, multiplicity-inclusive,
/// padded with zeros to the reduced dimension.
struct EigPair {
  std::vector<double> values;
};

/// Closed-form 2:1 entropy of the maximal-angle three-flavor family as a
/// function of the free phase. flavor_row is 1..3 (e, mu, tau).
double w3_entropy(int flavor_row, const Bipartition& split, double delta);

/// Closed-form reduced spectra for the maximal-angle four-flavor family.
/// flavor_row is 1..4 (e, mu, tau, s); split is any 1:3, 3:1 or 2:2
/// bipartition (complements are folded onto the tabulated canonical splits).
EigPair w4_eigs(int flavor_row, const Bipartition& split, double d14, double d23, double d34);

double w4_entropy(int flavor_row, const Bipartition& split, double d14, double d23, double d34);

/// Reference closed forms of the maximal mixing matrices, for cross-checks.
ComplexMatrix u3f_max_reference();
ComplexMatrix u4f_max_reference(double phi);

/// log2(3) - 2/3, the 2:1 entropy of the symmetric three-qubit W state.
double w3_reference_entropy();
/// 2 - (3/4) log2(3), the 3:1 entropy of the symmetric four-qubit W state.
double w4_reference_entropy();

}  // namespace flavent
