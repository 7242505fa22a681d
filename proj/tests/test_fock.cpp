#include <doctest.h>

#include <cmath>
#include <random>

#include "d2k/fock.hpp"

using namespace d2k;

namespace {

FockOperator random_operator(std::mt19937_64& gen) {
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  FockOperator a;
  for (int r = 0; r < kFockDim; ++r)
    for (int c = 0; c < kFockDim; ++c) a.at(r, c) = Complex(dist(gen), dist(gen));
  return a;
}

double vector_diff(const FockVector& u, const FockVector& v) {
  double worst = 0.0;
  for (int i = 0; i < kFockDim; ++i) worst = std::max(worst, std::abs(u[i] - v[i]));
  return worst;
}

FockVector zero_vector() { return FockVector{}; }

}  // namespace

TEST_CASE("basis ordering is (0,0), (1,0), (0,1), (1,1)") {
  CHECK(basis_index(0, 0) == 0);
  CHECK(basis_index(1, 0) == 1);
  CHECK(basis_index(0, 1) == 2);
  CHECK(basis_index(1, 1) == 3);
}

TEST_CASE("annihilator action on basis states") {
  const FockOperator a_x = annihilator(Mode::X);
  const FockOperator a_y = annihilator(Mode::Y);

  CHECK(vector_diff(apply(a_x, basis_state(1, 0)), basis_state(0, 0)) == 0.0);
  CHECK(vector_diff(apply(a_x, basis_state(0, 0)), zero_vector()) == 0.0);

  // Under the StringOnY convention b_y picks up (-1)^{n_x} on (1,1).
  FockVector expected = basis_state(1, 0);
  expected[basis_index(1, 0)] = -1.0;
  CHECK(vector_diff(apply(a_y, basis_state(1, 1)), expected) == 0.0);
}

TEST_CASE("creator examples") {
  const FockOperator c_x = creator(Mode::X);
  CHECK(max_abs_diff(c_x * c_x, FockOperator::zero()) == 0.0);
  CHECK(vector_diff(apply(c_x, basis_state(0, 0)), basis_state(1, 0)) == 0.0);
  CHECK(max_abs_diff(anticommutator(annihilator(Mode::X), creator(Mode::Y)),
                     FockOperator::zero()) == 0.0);
}

TEST_CASE("number operators") {
  CHECK(max_abs_diff(number(Mode::Y), FockOperator::diagonal({0, 0, 1, 1})) == 0.0);
  CHECK(max_abs_diff(number(Mode::X), FockOperator::diagonal({0, 1, 0, 1})) == 0.0);

  const FockVector doubly = basis_state(1, 1);
  const FockVector out = apply(number(Mode::X) + number(Mode::Y), doubly);
  CHECK(std::abs(out[3] - 2.0) == 0.0);

  CHECK(max_abs_diff(commutator(number(Mode::X), number(Mode::Y)), FockOperator::zero()) == 0.0);

  for (const Mode m : {Mode::X, Mode::Y}) {
    const FockOperator n = number(m);
    CHECK(max_abs_diff(n, adjoint(n)) == 0.0);  // Hermitian
    CHECK(max_abs_diff(n * n, n) == 0.0);       // idempotent, spectrum {0, 1}
  }
}

TEST_CASE("canonical anticommutation relations hold in both string gauges") {
  for (const StringConvention conv : {StringConvention::StringOnY, StringConvention::StringOnX}) {
    const FockOperator ops[2] = {annihilator(Mode::X, conv), annihilator(Mode::Y, conv)};
    for (int m = 0; m < 2; ++m) {
      for (int n = 0; n < 2; ++n) {
        const FockOperator delta = m == n ? FockOperator::identity() : FockOperator::zero();
        CHECK(max_abs_diff(anticommutator(ops[m], adjoint(ops[n])), delta) <= 1e-14);
        CHECK(max_abs_diff(anticommutator(ops[m], ops[n]), FockOperator::zero()) <= 1e-14);
        CHECK(max_abs_diff(anticommutator(adjoint(ops[m]), adjoint(ops[n])),
                           FockOperator::zero()) <= 1e-14);
      }
      CHECK(max_abs_diff(ops[m] * ops[m], FockOperator::zero()) == 0.0);
      CHECK(max_abs_diff(adjoint(ops[m]) * adjoint(ops[m]), FockOperator::zero()) == 0.0);
    }
  }
}

TEST_CASE("string gauge flips the (1,1) sign but leaves bilinears invariant") {
  const FockOperator a_y_string = annihilator(Mode::Y, StringConvention::StringOnY);
  const FockOperator a_y_plain = annihilator(Mode::Y, StringConvention::StringOnX);
  CHECK(apply(a_y_string, basis_state(1, 1))[basis_index(1, 0)] == Complex(-1.0));
  CHECK(apply(a_y_plain, basis_state(1, 1))[basis_index(1, 0)] == Complex(1.0));

  // Everything the identities are built from is b+_m b_n, which is
  // gauge-invariant.
  for (const Mode m : {Mode::X, Mode::Y}) {
    for (const Mode n : {Mode::X, Mode::Y}) {
      const FockOperator bilinear_a = compose(creator(m, StringConvention::StringOnY),
                                              annihilator(n, StringConvention::StringOnY));
      const FockOperator bilinear_b = compose(creator(m, StringConvention::StringOnX),
                                              annihilator(n, StringConvention::StringOnX));
      CHECK(max_abs_diff(bilinear_a, bilinear_b) == 0.0);
    }
  }
}

TEST_CASE("algebra helpers") {
  std::mt19937_64 gen(2024);
  for (int trial = 0; trial < 32; ++trial) {
    const FockOperator a = random_operator(gen);
    const FockOperator b = random_operator(gen);
    CHECK(max_abs_diff(commutator(a, a), FockOperator::zero()) == 0.0);
    CHECK(max_abs_diff(adjoint(adjoint(a)), a) == 0.0);  // involution
    // anti-homomorphism: (AB)+ = B+ A+
    CHECK(max_abs_diff(adjoint(a * b), adjoint(b) * adjoint(a)) <= 1e-14);
    CHECK(max_abs_diff(anticommutator(a, b), a * b + b * a) == 0.0);
    CHECK(is_finite(a));
  }

  const FockOperator d = FockOperator::diagonal({1.0, -0.5, 2.0, 0.0});
  CHECK(max_abs_diff(adjoint(d), d) == 0.0);
  CHECK(max_abs_diff(anticommutator(annihilator(Mode::X), creator(Mode::X)),
                     FockOperator::identity()) == 0.0);
}

TEST_CASE("max_abs_diff examples") {
  const FockOperator a = annihilator(Mode::X);
  CHECK(max_abs_diff(a, a) == 0.0);
  CHECK(max_abs_diff(FockOperator::identity(), FockOperator::zero()) == 1.0);
  CHECK(max_abs_diff(number(Mode::X), FockOperator::diagonal({0, 1, 0, 1})) == 0.0);
}

TEST_CASE("relative residual floors the denominator at 1") {
  FockOperator a, b;
  a.at(0, 0) = 1e6;
  b.at(0, 0) = 1e6 + 1.0;
  CHECK(relative_residual(a, b) == doctest::Approx(1.0 / (2.0 + 1e6)).epsilon(1e-12));
  FockOperator c, d;
  c.at(1, 2) = 0.0;
  d.at(1, 2) = 1e-3;
  CHECK(relative_residual(c, d) == doctest::Approx(1e-3 / (1.0 + 1e-3)).epsilon(1e-12));
}

TEST_CASE("a perturbed ladder matrix breaks the anticommutation check") {
  FockOperator tampered = annihilator(Mode::X);
  tampered.at(0, 1) += 1e-6;
  const double residual =
      max_abs_diff(anticommutator(tampered, adjoint(tampered)), FockOperator::identity());
  CHECK(residual > 1e-13);  // harness sensitivity: 1e-6 injections must be seen
}
