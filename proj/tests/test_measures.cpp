#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "flavent/analytic.hpp"
#include "flavent/measures.hpp"
#include "flavent/mixing.hpp"
#include "flavent/rng.hpp"
#include "flavent/states.hpp"

using namespace flavent;

namespace {

// log2(3) - 2/3 and 2 - (3/4) log2(3), checked against the helper functions too
constexpr double kE21W3 = 0.9182958340544894;
constexpr double kE31W4 = 0.8112781244591329;

PureState random_pure(int n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  PureState psi{n, std::vector<cplx>(size_t{1} << n)};
  double norm = 0.0;
  for (cplx& a : psi.amp) {
    a = cplx(rng.normal(), rng.normal());
    norm += std::norm(a);
  }
  for (cplx& a : psi.amp) a /= std::sqrt(norm);
  return psi;
}

// Schmidt coefficients of |psi> across bipartition b, from the entropy path.
// Reduce over the smaller side: the larger one carries structural zeros whose
// roundoff would be amplified by the square root.
std::vector<double> schmidt_spectrum(const PureState& psi, const Bipartition& b) {
  const QubitSubset& keep =
      b.side_a.members.size() <= b.side_b.members.size() ? b.side_a : b.side_b;
  return clamp_psd_spectrum(eig_hermitian(partial_trace(density_matrix(psi), keep)));
}

}  // namespace

TEST_CASE("bipartition enumeration is lexicographic and complete") {
  const std::vector<Bipartition> p32 = bipartitions(3, 2);
  REQUIRE(p32.size() == 3);
  CHECK(bipartition_label(p32[0]) == "(1,2;3)");
  CHECK(bipartition_label(p32[1]) == "(1,3;2)");
  CHECK(bipartition_label(p32[2]) == "(2,3;1)");
  CHECK(bipartitions(4, 1).size() == 4);
  CHECK(bipartitions(4, 3).size() == 4);
  // balanced splits keep both orientations
  CHECK(bipartitions(4, 2).size() == 6);
  CHECK(bipartition_label(bipartitions(4, 2).front()) == "(1,2;3,4)");
  CHECK_THROWS_AS(bipartitions(3, 0), BadSplitError);
  CHECK_THROWS_AS(bipartitions(3, 3), BadSplitError);
}

TEST_CASE("entropy helpers") {
  CHECK(binary_entropy(0.5) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  CHECK(spectrum_entropy({0.25, 0.25, 0.25, 0.25}) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(spectrum_entropy({1.0, 0.0}) == 0.0);
}

TEST_CASE("reference state entropies") {
  for (const Bipartition& b : bipartitions(3, 2))
    CHECK(entropy_of_bipartition(w_state(3), b) == doctest::Approx(kE21W3).epsilon(1e-10));
  for (const Bipartition& b : bipartitions(4, 3))
    CHECK(entropy_of_bipartition(w_state(4), b) == doctest::Approx(kE31W4).epsilon(1e-10));
  for (const Bipartition& b : bipartitions(4, 2))
    CHECK(entropy_of_bipartition(w_state(4), b) == doctest::Approx(1.0).epsilon(1e-10));
  for (int n : {3, 4})
    for (int k = 1; k < n; ++k)
      for (const Bipartition& b : bipartitions(n, k))
        CHECK(entropy_of_bipartition(ghz_state(n), b) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(w3_reference_entropy() == doctest::Approx(kE21W3).epsilon(1e-15));
  CHECK(w4_reference_entropy() == doctest::Approx(kE31W4).epsilon(1e-15));
}

TEST_CASE("maximal three-flavor state at zero phase hits the frozen binary entropies") {
  MixingParams3 p = maximal3();
  p.delta = 0.0;
  const MeasureReport r = average_entropy(flavor_state(u3f(p), 2), 2);
  CHECK(r.values[0] == doctest::Approx(kE21W3).epsilon(1e-10));            // (1,2;3)
  CHECK(r.values[1] == doctest::Approx(0.2632565778259573).epsilon(1e-10));  // (1,3;2)
  CHECK(r.values[2] == doctest::Approx(0.956611144618885).epsilon(1e-10));   // (2,3;1)
}

TEST_CASE("entropy is symmetric under complementation for pure states") {
  const PureState psi = random_pure(4, 17);
  for (const Bipartition& b : bipartitions(4, 1)) {
    Bipartition flip = make_bipartition(4, b.side_b.members);
    CHECK(std::abs(entropy_of_bipartition(psi, b) - entropy_of_bipartition(psi, flip)) < 1e-10);
  }
}

TEST_CASE("average report structure") {
  const MeasureReport r = average_entropy(w_state(4), 2);
  REQUIRE(r.values.size() == 6);
  double mean = 0.0;
  for (double v : r.values) mean += v;
  CHECK(r.average == doctest::Approx(mean / 6.0).epsilon(1e-15));
  CHECK(r.split_size == 2);
}

TEST_CASE("log negativity of separable and maximally entangled states") {
  // product state |0><0| x |0><0|: zero negativity
  PureState prod{2, {1.0, 0.0, 0.0, 0.0}};
  for (const Bipartition& b : bipartitions(2, 1))
    CHECK(log_negativity(density_matrix(prod), b) == 0.0);
  // W3 across any 2:1 split: 2 log2(sqrt(1/3) + sqrt(2/3))
  for (const Bipartition& b : bipartitions(3, 2))
    CHECK(log_negativity(density_matrix(w_state(3)), b) ==
          doctest::Approx(0.9581441056060677).epsilon(1e-10));
}

TEST_CASE("pure-state negativity equals the Schmidt-spectrum closed form") {
  std::uint64_t seed = 1000;
  for (int n : {3, 4}) {
    for (int trial = 0; trial < 25; ++trial) {
      const PureState psi = random_pure(n, ++seed);
      const ComplexMatrix rho = density_matrix(psi);
      for (int k = 1; k < n; ++k) {
        for (const Bipartition& b : bipartitions(n, k)) {
          double root_sum = 0.0;
          for (double lam : schmidt_spectrum(psi, b)) root_sum += std::sqrt(lam);
          const double expected = std::max(0.0, 2.0 * std::log2(root_sum));
          CHECK(std::abs(log_negativity(rho, b) - expected) < 1e-9);
        }
      }
    }
  }
}

TEST_CASE("log negativity validates its input") {
  ComplexMatrix not_density = ComplexMatrix::identity(4);  // trace 4
  const Bipartition b = make_bipartition(2, {1});
  CHECK_THROWS_AS(log_negativity(not_density, b), NotDensityMatrixError);
  ComplexMatrix neg(4);
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  CHECK_THROWS_AS(log_negativity(neg, b), NotDensityMatrixError);
}

TEST_CASE("split/register mismatches are rejected") {
  CHECK_THROWS_AS(entropy_of_bipartition(w_state(3), make_bipartition(4, {1, 2})),
                  DimMismatchError);
  CHECK_THROWS_AS(make_bipartition(3, {1, 2, 3}), BadSplitError);
}
