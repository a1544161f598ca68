#include "flavent/analytic.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace flavent {

namespace {

constexpr double kPi = std::numbers::pi;

// One cosine term coef*cos(a*d14 + b*d23 + c*d34) of a closed-form eigenvalue.
struct CosTerm {
  int coef;
  int a, b, c;
};

// lambda = (constant + sum of cosine terms) / denom; each tabulated split
// carries the two nonzero eigenvalue slots.
struct Slot {
  int constant;
  std::vector<CosTerm> terms;
};

struct Entry {
  int denom;
  Slot lo, hi;  // as printed; order is not significant
};

double eval(const Slot& s, int denom, double d14, double d23, double d34) {
  double v = s.constant;
  for (const CosTerm& t : s.terms) v += t.coef * std::cos(t.a * d14 + t.b * d23 + t.c * d34);
  return v / denom;
}

// Canonical unbalanced splits keyed by the lone qubit, balanced splits by the
// partner of qubit 1. Flavor rows: 1=e, 2=mu, 3=tau, 4=s.
const Entry& w4_table(int flavor, bool balanced, int key) {
  static const Entry kQuarter{4, {3, {}}, {1, {}}};
  static const Entry kHalf{2, {1, {}}, {1, {}}};

  static const Entry kMu1{36,
                          {25, {{-6, 1, 0, 0}, {-6, 0, 1, 0}, {-2, 1, 1, 0}}},
                          {11, {{6, 1, 0, 0}, {6, 0, 1, 0}, {2, 1, 1, 0}}}};
  static const Entry kMu2{36,
                          {11, {{-6, 1, 0, 0}, {-6, 0, 1, 0}, {2, 1, 1, 0}}},
                          {25, {{6, 1, 0, 0}, {6, 0, 1, 0}, {-2, 1, 1, 0}}}};
  static const Entry kMu3{36, {5, {{-4, 1, 1, 0}}}, {31, {{4, 1, 1, 0}}}};

  static const Entry kTau1{
      72,
      {16,
       {{-6, 1, 0, 0}, {-6, 0, 1, 0}, {-2, 1, 1, 0}, {6, 1, 0, -1}, {-6, 1, -1, -1},
        {-9, 0, 0, 1}, {6, 0, 1, 1}, {3, 0, 2, 1}}},
      {56,
       {{6, 1, 0, 0}, {6, 0, 1, 0}, {2, 1, 1, 0}, {-6, 1, 0, -1}, {6, 1, -1, -1},
        {9, 0, 0, 1}, {-6, 0, 1, 1}, {-3, 0, 2, 1}}}};
  static const Entry kTau2{
      72,
      {56,
       {{-6, 1, 0, 0}, {-6, 0, 1, 0}, {2, 1, 1, 0}, {-6, 1, 0, -1}, {-6, 1, -1, -1},
        {-9, 0, 0, 1}, {-6, 0, 1, 1}, {3, 0, 2, 1}}},
      {16,
       {{6, 1, 0, 0}, {6, 0, 1, 0}, {-2, 1, 1, 0}, {6, 1, 0, -1}, {6, 1, -1, -1},
        {9, 0, 0, 1}, {6, 0, 1, 1}, {-3, 0, 2, 1}}}};
  static const Entry kTau3{36,
                           {11, {{2, 1, 1, 0}, {-6, 1, 0, -1}, {-6, 0, 1, 1}}},
                           {25, {{-2, 1, 1, 0}, {6, 1, 0, -1}, {6, 0, 1, 1}}}};

  // First slot sign of the cos(d23+d34) term corrected (+6, not -6) so the
  // pair sums to the unit trace; verified against the numerical spectra.
  static const Entry kS1{
      72,
      {56,
       {{6, 1, 0, 0}, {6, 0, 1, 0}, {2, 1, 1, 0}, {6, 1, 0, -1}, {-6, 1, -1, -1},
        {-9, 0, 0, 1}, {6, 0, 1, 1}, {3, 0, 2, 1}}},
      {16,
       {{-6, 1, 0, 0}, {-6, 0, 1, 0}, {-2, 1, 1, 0}, {-6, 1, 0, -1}, {6, 1, -1, -1},
        {9, 0, 0, 1}, {-6, 0, 1, 1}, {-3, 0, 2, 1}}}};
  static const Entry kS2{
      72,
      {16,
       {{6, 1, 0, 0}, {6, 0, 1, 0}, {-2, 1, 1, 0}, {-6, 1, 0, -1}, {-6, 1, -1, -1},
        {-9, 0, 0, 1}, {-6, 0, 1, 1}, {3, 0, 2, 1}}},
      {56,
       {{-6, 1, 0, 0}, {-6, 0, 1, 0}, {2, 1, 1, 0}, {6, 1, 0, -1}, {6, 1, -1, -1},
        {9, 0, 0, 1}, {6, 0, 1, 1}, {-3, 0, 2, 1}}}};
  static const Entry kS3{36,
                         {25, {{-2, 1, 1, 0}, {-6, 1, 0, -1}, {-6, 0, 1, 1}}},
                         {11, {{2, 1, 1, 0}, {6, 1, 0, -1}, {6, 0, 1, 1}}}};

  static const Entry kMu12{18, {7, {{-2, 1, 1, 0}}}, {11, {{2, 1, 1, 0}}}};
  static const Entry kMu13{18,
                           {10, {{-3, 1, 0, 0}, {-3, 0, 1, 0}, {1, 1, 1, 0}}},
                           {8, {{3, 1, 0, 0}, {3, 0, 1, 0}, {-1, 1, 1, 0}}}};
  static const Entry kMu14{18,
                           {8, {{-3, 1, 0, 0}, {-3, 0, 1, 0}, {-1, 1, 1, 0}}},
                           {10, {{3, 1, 0, 0}, {3, 0, 1, 0}, {1, 1, 1, 0}}}};

  static const Entry kTau12{18,
                            {10, {{1, 1, 1, 0}, {-3, 1, 0, -1}, {-3, 0, 1, 1}}},
                            {8, {{-1, 1, 1, 0}, {3, 1, 0, -1}, {3, 0, 1, 1}}}};
  // First slot sign of the cos(d14-d34) term corrected (-6, not +6); same
  // unit-trace check as above.
  static const Entry kTau13{
      72,
      {38,
       {{-6, 1, 0, 0}, {-6, 0, 1, 0}, {2, 1, 1, 0}, {-6, 1, 0, -1}, {-6, 1, -1, -1},
        {-9, 0, 0, 1}, {-6, 0, 1, 1}, {3, 0, 2, 1}}},
      {34,
       {{6, 1, 0, 0}, {6, 0, 1, 0}, {-2, 1, 1, 0}, {6, 1, 0, -1}, {6, 1, -1, -1},
        {9, 0, 0, 1}, {6, 0, 1, 1}, {-3, 0, 2, 1}}}};
  static const Entry kTau14{
      72,
      {34,
       {{-6, 1, 0, 0}, {-6, 0, 1, 0}, {-2, 1, 1, 0}, {6, 1, 0, -1}, {-6, 1, -1, -1},
        {-9, 0, 0, 1}, {6, 0, 1, 1}, {3, 0, 2, 1}}},
      {38,
       {{6, 1, 0, 0}, {6, 0, 1, 0}, {2, 1, 1, 0}, {-6, 1, 0, -1}, {6, 1, -1, -1},
        {9, 0, 0, 1}, {-6, 0, 1, 1}, {-3, 0, 2, 1}}}};

  static const Entry kS12{18,
                          {8, {{-1, 1, 1, 0}, {-3, 1, 0, -1}, {-3, 0, 1, 1}}},
                          {10, {{1, 1, 1, 0}, {3, 1, 0, -1}, {3, 0, 1, 1}}}};
  static const Entry kS13{
      72,
      {34,
       {{6, 1, 0, 0}, {6, 0, 1, 0}, {-2, 1, 1, 0}, {-6, 1, 0, -1}, {-6, 1, -1, -1},
        {-9, 0, 0, 1}, {-6, 0, 1, 1}, {3, 0, 2, 1}}},
      {38,
       {{-6, 1, 0, 0}, {-6, 0, 1, 0}, {2, 1, 1, 0}, {6, 1, 0, -1}, {6, 1, -1, -1},
        {9, 0, 0, 1}, {6, 0, 1, 1}, {-3, 0, 2, 1}}}};
  static const Entry kS14{
      72,
      {38,
       {{6, 1, 0, 0}, {6, 0, 1, 0}, {2, 1, 1, 0}, {6, 1, 0, -1}, {-6, 1, -1, -1},
        {-9, 0, 0, 1}, {6, 0, 1, 1}, {3, 0, 2, 1}}},
      {34,
       {{-6, 1, 0, 0}, {-6, 0, 1, 0}, {-2, 1, 1, 0}, {-6, 1, 0, -1}, {6, 1, -1, -1},
        {9, 0, 0, 1}, {-6, 0, 1, 1}, {-3, 0, 2, 1}}}};

  if (!balanced) {
    if (flavor == 1 || key == 4) return kQuarter;
    if (flavor == 2) return key == 1 ? kMu1 : key == 2 ? kMu2 : kMu3;
    if (flavor == 3) return key == 1 ? kTau1 : key == 2 ? kTau2 : kTau3;
    return key == 1 ? kS1 : key == 2 ? kS2 : kS3;
  }
  if (flavor == 1) return kHalf;
  if (flavor == 2) return key == 2 ? kMu12 : key == 3 ? kMu13 : kMu14;
  if (flavor == 3) return key == 2 ? kTau12 : key == 3 ? kTau13 : kTau14;
  return key == 2 ? kS12 : key == 3 ? kS13 : kS14;
}

}  // namespace

double w3_entropy(int flavor_row, const Bipartition& split, double delta) {
  if (split.n_qubits != 3 || flavor_row < 1 || flavor_row > 3)
    throw UnknownSplitError("w3_entropy: expects a 3-qubit 2:1 split and flavor row 1..3");
  // Entropy depends only on the lone qubit of the split.
  const int lone = split.side_a.members.size() == 1 ? split.side_a.members[0]
                  : split.side_b.members.size() == 1
                      ? split.side_b.members[0]
                      : throw UnknownSplitError("w3_entropy: split is not 2:1");
  const double shift = std::cos(delta) / (2.0 * std::sqrt(3.0));
  if (flavor_row == 1 || lone == 3) return w3_reference_entropy();
  if (flavor_row == 2)  // mu: (1,3;2) shifts down, (2,3;1) shifts up
    return binary_entropy(lone == 2 ? 1.0 / 3.0 - shift : 1.0 / 3.0 + shift);
  return binary_entropy(lone == 2 ? 1.0 / 3.0 + shift : 1.0 / 3.0 - shift);
}

EigPair w4_eigs(int flavor_row, const Bipartition& split, double d14, double d23, double d34) {
  if (split.n_qubits != 4 || flavor_row < 1 || flavor_row > 4)
    throw UnknownSplitError("w4_eigs: expects a 4-qubit split and flavor row 1..4");
  const size_t na = split.side_a.members.size();
  bool balanced = false;
  int key = 0;
  if (na == 1 || na == 3) {
    key = na == 1 ? split.side_a.members[0] : split.side_b.members[0];
  } else if (na == 2) {
    balanced = true;
    // fold onto the canonical split whose side contains qubit 1
    const QubitSubset& with1 = split.side_a.members[0] == 1 ? split.side_a : split.side_b;
    if (with1.members[0] != 1) throw UnknownSplitError("w4_eigs: malformed balanced split");
    key = with1.members[1];
  } else {
    throw UnknownSplitError("w4_eigs: unsupported split size");
  }
  const Entry& e = w4_table(flavor_row, balanced, key);
  EigPair out;
  if (balanced) out.values = {0.0, 0.0};
  out.values.push_back(eval(e.lo, e.denom, d14, d23, d34));
  out.values.push_back(eval(e.hi, e.denom, d14, d23, d34));
  return out;
}

double w4_entropy(int flavor_row, const Bipartition& split, double d14, double d23, double d34) {
  std::vector<double> lam = w4_eigs(flavor_row, split, d14, d23, d34).values;
  return spectrum_entropy(clamp_psd_spectrum(std::move(lam), 1e-12));
}

ComplexMatrix u3f_max_reference() {
  const cplx y = std::polar(1.0, 2.0 * kPi / 3.0);
  const cplx i{0.0, 1.0};
  const double r = 1.0 / std::sqrt(3.0);
  ComplexMatrix u(3);
  u(0, 0) = r;
  u(0, 1) = r;
  u(0, 2) = r;
  u(1, 0) = r * i * y;
  u(1, 1) = r * i * y * y;
  u(1, 2) = r * i;
  u(2, 0) = r * i * y * y;
  u(2, 1) = r * i * y;
  u(2, 2) = r * i;
  return u;
}

ComplexMatrix u4f_max_reference(double phi) {
  const cplx e = std::polar(1.0, phi);
  ComplexMatrix u(4);
  const double h = 0.5;
  const cplx rows[4][4] = {{1, 1, 1, 1}, {-1, 1, -e, e}, {-1, -1, 1, 1}, {1, -1, -e, e}};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) u(r, c) = h * rows[r][c];
  return u;
}

double w3_reference_entropy() { return std::log2(3.0) - 2.0 / 3.0; }

double w4_reference_entropy() { return 2.0 - 0.75 * std::log2(3.0); }

}  // namespace flavent
