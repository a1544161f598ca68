#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "flavent/mixing.hpp"
#include "flavent/states.hpp"

using namespace flavent;

TEST_CASE("one-hot encoding puts qubit 1 in the most significant bit") {
  const PureState s1 = one_hot_state(3, 1);
  REQUIRE(s1.amp.size() == 8);
  CHECK(s1.amp[4] == cplx(1.0));  // |100>
  CHECK(one_hot_state(3, 2).amp[2] == cplx(1.0));
  CHECK(one_hot_state(3, 3).amp[1] == cplx(1.0));
  CHECK(one_hot_state(4, 1).amp[8] == cplx(1.0));
  CHECK_THROWS_AS(one_hot_state(3, 4), IndexOutOfRangeError);
  CHECK_THROWS_AS(one_hot_state(3, 0), IndexOutOfRangeError);
}

TEST_CASE("one-hot states are orthonormal") {
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) {
      const cplx ip = inner_product(one_hot_state(3, a), one_hot_state(3, b));
      CHECK(std::abs(ip - (a == b ? 1.0 : 0.0)) < 1e-15);
    }
}

TEST_CASE("flavor states carry the mixing-matrix row as amplitudes") {
  const ComplexMatrix u = u3(maximal3());
  for (int row = 1; row <= 3; ++row) {
    const PureState psi = flavor_state(u, row);
    CHECK(psi.norm_sq() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(psi.amp[4] - u(row - 1, 0)) < 1e-15);
    CHECK(std::abs(psi.amp[2] - u(row - 1, 1)) < 1e-15);
    CHECK(std::abs(psi.amp[1] - u(row - 1, 2)) < 1e-15);
    for (int idx : {0, 3, 5, 6, 7}) CHECK(psi.amp[idx] == cplx(0.0));
  }
}

TEST_CASE("flavor_state rejects a non-unitary matrix") {
  ComplexMatrix m = ComplexMatrix::identity(3);
  m(0, 0) = 1.5;
  CHECK_THROWS_AS(flavor_state(m, 1), NonUnitaryError);
  CHECK(unitarity_error(u3(maximal3())) < 1e-14);
}

TEST_CASE("w and ghz reference states") {
  const PureState w3 = w_state(3);
  for (int idx : {1, 2, 4}) CHECK(std::abs(w3.amp[idx] - 1.0 / std::sqrt(3.0)) < 1e-15);
  const PureState g4 = ghz_state(4);
  CHECK(std::abs(g4.amp[0] - 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(g4.amp[15] - 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(w3.norm_sq() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(g4.norm_sq() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("density matrix of a pure state is a projector with unit trace") {
  const ComplexMatrix rho = density_matrix(flavor_state(u3f(maximal3()), 2));
  CHECK(std::abs(rho.trace() - 1.0) < 1e-14);
  CHECK((rho * rho).max_abs_diff(rho) < 1e-14);
  CHECK(rho.hermiticity_error() < 1e-15);
  PureState bad = w_state(3);
  bad.amp[1] *= 2.0;
  CHECK_THROWS_AS(density_matrix(bad), NotNormalizedError);
}

TEST_CASE("flavor labels") {
  CHECK(parse_flavor("e", 3).row == 1);
  CHECK(parse_flavor("mu", 3).row == 2);
  CHECK(parse_flavor("tau", 3).row == 3);
  CHECK(parse_flavor("s", 4).row == 4);
  CHECK(parse_flavor("d", 3).row == 1);
  CHECK(parse_flavor("b", 3).row == 3);
  CHECK_THROWS_AS(parse_flavor("s", 3), IndexOutOfRangeError);
  CHECK_THROWS_AS(parse_flavor("x", 3), IndexOutOfRangeError);
}
