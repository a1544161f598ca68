#pragma once

#include <vector>

#include "flavent/matrix.hpp"
#include "flavent/states.hpp"

namespace flavent {

struct BadSplitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotDensityMatrixError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Ordered split of the N qubit modes into a subset and its complement.
struct Bipartition {
  int n_qubits = 0;
  QubitSubset side_a;
  QubitSubset side_b;
};

Bipartition make_bipartition(int n_qubits, std::vector<int> side_a);

/// All C(N,n) bipartitions with |side_a| = n, side_a in lexicographic order.
/// Balanced splits are enumerated in full (complements are not deduplicated).
std::vector<Bipartition> bipartitions(int n_qubits, int n);

/// Compact label like "(1,3;2)" for CSV headers and reports.
std::string bipartition_label(const Bipartition& b);

struct MeasureReport {
  std::vector<Bipartition> parts;
  std::vector<double> values;  // same order as parts
  double average = 0.0;
  int split_size = 0;
};

/// Shannon entropy (base 2) of a probability vector, 0 log 0 := 0.
double spectrum_entropy(const std::vector<double>& probs);

double binary_entropy(double p);

/// von Neumann entropy in bits of the reduction of |psi><psi| to side_a.
double entropy_of_bipartition(const PureState& psi, const Bipartition& b);

MeasureReport average_entropy(const PureState& psi, int n);

/// log2 of the trace norm of the partial transpose over side_b.
double log_negativity(const ComplexMatrix& rho, const Bipartition& b);

MeasureReport average_negativity(const ComplexMatrix& rho, int n);

}  // namespace flavent
