#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "flavent/analytic.hpp"
#include "flavent/measures.hpp"
#include "flavent/mixing.hpp"
#include "flavent/rng.hpp"
#include "flavent/states.hpp"

using namespace flavent;

namespace {

constexpr double kPi = std::numbers::pi;

MixingParams4 max_angles(double d14, double d23, double d34) {
  MixingParams4 p = maximal4(0.0);
  p.delta14 = d14;
  p.delta23 = d23;
  p.delta34 = d34;
  return p;
}

}  // namespace

TEST_CASE("three-flavor closed forms match the numerical entropies on a dense grid") {
  const std::vector<Bipartition> splits = bipartitions(3, 2);
  for (int g = 0; g < 1000; ++g) {
    const double delta = 2.0 * kPi * g / 1000.0;
    MixingParams3 p = maximal3();
    p.delta = delta;
    const ComplexMatrix u = u3f(p);
    for (int row = 1; row <= 3; ++row) {
      const PureState psi = flavor_state(u, row);
      for (const Bipartition& b : splits)
        CHECK(std::abs(entropy_of_bipartition(psi, b) - w3_entropy(row, b, delta)) < 1e-10);
    }
  }
}

TEST_CASE("four-flavor closed forms match the numerical entropies on random phases") {
  SplitMix64 rng(2024);
  std::vector<Bipartition> splits;
  for (int n : {1, 2, 3})
    for (const Bipartition& b : bipartitions(4, n)) splits.push_back(b);
  for (int trial = 0; trial < 500; ++trial) {
    const double d14 = rng.uniform() * 2 * kPi;
    const double d23 = rng.uniform() * 2 * kPi;
    const double d34 = rng.uniform() * 2 * kPi;
    const ComplexMatrix u = u4f(max_angles(d14, d23, d34));
    for (int row = 1; row <= 4; ++row) {
      const PureState psi = flavor_state(u, row);
      for (const Bipartition& b : splits) {
        const double numeric = entropy_of_bipartition(psi, b);
        const double closed = w4_entropy(row, b, d14, d23, d34);
        CHECK(std::abs(numeric - closed) < 1e-10);
      }
    }
  }
}

TEST_CASE("closed-form spectra are normalized probability vectors") {
  SplitMix64 rng(404);
  std::vector<Bipartition> splits;
  for (int n : {1, 2, 3})
    for (const Bipartition& b : bipartitions(4, n)) splits.push_back(b);
  for (int trial = 0; trial < 200; ++trial) {
    const double d14 = rng.uniform() * 2 * kPi;
    const double d23 = rng.uniform() * 2 * kPi;
    const double d34 = rng.uniform() * 2 * kPi;
    for (int row = 1; row <= 4; ++row) {
      for (const Bipartition& b : splits) {
        double sum = 0.0;
        for (double lam : w4_eigs(row, b, d14, d23, d34).values) {
          CHECK(lam > -1e-12);
          CHECK(lam < 1.0 + 1e-12);
          sum += lam;
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("balanced spectra carry two exact zeros") {
  const EigPair e = w4_eigs(3, make_bipartition(4, {1, 3}), 0.4, 1.1, 2.2);
  REQUIRE(e.values.size() == 4);
  CHECK(e.values[0] == 0.0);
  CHECK(e.values[1] == 0.0);
}

TEST_CASE("mu-flavor measures are independent of the third phase") {
  SplitMix64 rng(8);
  std::vector<Bipartition> splits;
  for (int n : {1, 2, 3})
    for (const Bipartition& b : bipartitions(4, n)) splits.push_back(b);
  for (int trial = 0; trial < 50; ++trial) {
    const double d14 = rng.uniform() * 2 * kPi;
    const double d23 = rng.uniform() * 2 * kPi;
    for (const Bipartition& b : splits) {
      const double a = w4_entropy(2, b, d14, d23, 0.0);
      const double c = w4_entropy(2, b, d14, d23, rng.uniform() * 2 * kPi);
      CHECK(std::abs(a - c) < 1e-14);
    }
  }
}

TEST_CASE("electron rows reduce to the symmetric W states") {
  for (const Bipartition& b : bipartitions(3, 2))
    CHECK(w3_entropy(1, b, 1.234) == doctest::Approx(w3_reference_entropy()).epsilon(1e-15));
  for (const Bipartition& b : bipartitions(4, 1))
    CHECK(w4_entropy(1, b, 0.3, 1.7, 2.9) == doctest::Approx(w4_reference_entropy()).epsilon(1e-12));
  for (const Bipartition& b : bipartitions(4, 2))
    CHECK(w4_entropy(1, b, 0.3, 1.7, 2.9) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("lone fourth qubit always detaches with the reference entropy") {
  // |U_{alpha 4}| = 1/2 for every flavor, so the (4;1,2,3) entropy is constant
  SplitMix64 rng(15);
  const Bipartition b = make_bipartition(4, {4});
  for (int trial = 0; trial < 20; ++trial)
    for (int row = 1; row <= 4; ++row)
      CHECK(w4_entropy(row, b, rng.uniform() * 2 * kPi, rng.uniform() * 2 * kPi,
                       rng.uniform() * 2 * kPi) ==
            doctest::Approx(w4_reference_entropy()).epsilon(1e-12));
}

TEST_CASE("invalid queries throw") {
  CHECK_THROWS_AS(w3_entropy(4, make_bipartition(3, {1}), 0.0), UnknownSplitError);
  CHECK_THROWS_AS(w3_entropy(1, make_bipartition(4, {1}), 0.0), UnknownSplitError);
  CHECK_THROWS_AS(w4_eigs(5, make_bipartition(4, {1}), 0, 0, 0), UnknownSplitError);
  CHECK_THROWS_AS(w4_eigs(1, make_bipartition(3, {1}), 0, 0, 0), UnknownSplitError);
}
