#include <doctest.h>

#include <cmath>

#include "normgate/errors.hpp"
#include "normgate/oracle.hpp"
#include "normgate/specop.hpp"
#include "support.hpp"

using namespace normgate;

TEST_CASE("matrix_norm on known matrices") {
  CHECK(matrix_norm(DenseMatrix::identity(5)) == doctest::Approx(1.0).epsilon(1e-14));
  // u v* with |u| = 2, |v| = 3.
  DenseMatrix uv(3, 2);
  const Complex u[3] = {2.0 / std::sqrt(2.0), Complex(0, 2.0 / std::sqrt(2.0)), 0.0};
  const Complex v[2] = {Complex(0, 3.0), 0.0};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 2; ++j) uv(i, j) = u[i] * std::conj(v[j]);
  CHECK(matrix_norm(uv) == doctest::Approx(6.0).epsilon(1e-13));
  CHECK(matrix_norm(DenseMatrix(3, 4)) == 0.0);
}

TEST_CASE("matrix_norm agrees with power iteration on random rectangles") {
  auto g = testsupport::rng(51);
  for (auto [r, c] : {std::pair{8, 6}, {6, 8}, {1, 7}, {12, 12}, {16, 3}}) {
    const DenseMatrix m = testsupport::random_matrix(g, r, c);
    const double v = matrix_norm(m);
    CHECK(std::abs(v - testsupport::power_norm(m)) <= 1e-9 * std::max(1.0, v));
  }
}

TEST_CASE("modulus squares back to A*A") {
  auto g = testsupport::rng(52);
  const DenseMatrix a = testsupport::random_matrix(g, 5, 4);
  const DenseMatrix m = modulus(a);
  const DenseMatrix diff = m * m - a.adjoint() * a;
  CHECK(diff.frobenius_norm() < 1e-12 * std::max(1.0, a.frobenius_norm() * a.frobenius_norm()));
}

TEST_CASE("build_T reductions") {
  const ParamSet p{Complex(1, 2), Complex(-0.5, 0.3), Complex(0.2, -1)};
  const PhiFunction phi = PhiFunction::power(1, 1, 2);
  DenseMatrix scalar(1, 1);
  scalar(0, 0) = 0.7;
  const DenseMatrix t = build_T(scalar, p, phi);
  const Mat2 m = make_Mt(p, phi, 0.7);
  CHECK(std::abs(t(0, 0) - m.e11) < 1e-14);
  CHECK(std::abs(t(0, 1) - m.e12) < 1e-14);
  CHECK(std::abs(t(1, 0) - m.e21) < 1e-14);
  CHECK(std::abs(t(1, 1) - m.e22) < 1e-14);

  const DenseMatrix z = build_T(DenseMatrix(3, 2), p, phi);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      const Complex expected = i != j ? 0.0 : (i < 3 ? p.a : p.b * eval_phi(phi, 0.0));
      CHECK(std::abs(z(i, j) - expected) < 1e-14);
    }
}

TEST_CASE("property: diagonal A gives the max of the scalar curve") {
  auto g = testsupport::rng(53);
  const auto battery = testsupport::phi_battery();
  for (int trial = 0; trial < 30; ++trial) {
    const ParamSet p = testsupport::random_params(g);
    const PhiFunction& phi = battery[std::size_t(trial) % battery.size()];
    std::vector<double> s;
    for (int k = 0; k < 6; ++k) s.push_back(testsupport::uniform(g, 0.0, 1.5));
    double expected = 0.0;
    for (double x : s) expected = std::max(expected, eval_f(p, phi, x));
    CHECK(std::abs(matrix_norm(build_T(DenseMatrix::diagonal(s), p, phi)) - expected) < 1e-9);
    const NormComparison c = compare_block_norm(SpectrumSpec(1.5, {}, s), p, phi);
    CHECK(c.difference < 1e-9);
  }
}

TEST_CASE("compare_block_norm examples") {
  const NormComparison c = compare_block_norm(SpectrumSpec(1.0, {}, {0.3, 0.7, 1.0}), {1.0, 1.0, 1.0},
                                              PhiFunction::constant(1));
  CHECK(c.difference < 1e-9);
  const ParamSet p{-0.3, 1.2, Complex(0, 2)};
  const NormComparison one = compare_block_norm(SpectrumSpec(1.0, {}, {0.4}), p, PhiFunction::log(1));
  CHECK(one.brute == doctest::Approx(eval_f(p, PhiFunction::log(1), 0.4)).epsilon(1e-12));
  CHECK(one.reference == doctest::Approx(eval_f(p, PhiFunction::log(1), 0.4)).epsilon(1e-12));
  CHECK_THROWS_AS(compare_block_norm(preset_mult_op(1.0), p, PhiFunction::log(1)), PreconditionError);
}

TEST_CASE("T and its modulus model have equal norms") {
  auto g = testsupport::rng(54);
  const DenseMatrix a = testsupport::random_matrix(g, 6, 4);
  CHECK(compare_T_Ttilde(a, {1.0, 2.0, -1.0}, PhiFunction::power(1, 1, 2)).difference < 1e-9);

  const ParamSet p{Complex(0.5, 1), -2.0, 0.3};
  const NormComparison zero = compare_T_Ttilde(DenseMatrix(3, 2), p, PhiFunction::power(1, 1, 2));
  CHECK(zero.brute == doctest::Approx(std::max(std::abs(p.a), std::abs(p.b))).epsilon(1e-12));
  CHECK(zero.reference == doctest::Approx(zero.brute).epsilon(1e-12));

  DenseMatrix cols(3, 2);
  cols(0, 0) = 1.0;
  cols(1, 1) = Complex(0, 2.0);
  const NormComparison off = compare_T_Ttilde(cols, {0.0, 0.0, 0.0}, PhiFunction::log(1));
  CHECK(off.brute == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(off.reference == doctest::Approx(2.0).epsilon(1e-12));

  const PhiFunction dip = PhiFunction::table({{0.0, 1.0}, {1.0, 0.1}, {10.0, 5.0}});
  CHECK_THROWS_AS(compare_T_Ttilde(a, p, dip), PreconditionError);
}

TEST_CASE("property: T and its modulus model agree on random rectangles") {
  auto g = testsupport::rng(55);
  const auto battery = testsupport::phi_battery();
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t m = 1 + std::size_t(testsupport::uniform(g, 0, 16));
    const std::size_t n = 1 + std::size_t(testsupport::uniform(g, 0, 16));
    const DenseMatrix a = testsupport::random_matrix(g, m, n, 0.5);
    CHECK(compare_T_Ttilde(a, testsupport::random_params(g), battery[std::size_t(trial) % battery.size()]).difference <
          1e-9);
  }
}

TEST_CASE("constant-block closed form against brute force") {
  auto g = testsupport::rng(56);
  for (int trial = 0; trial < 20; ++trial) {
    const DenseMatrix a = testsupport::random_matrix(g, 5, 5);
    const Lemma23Report r = verify_lemma23(testsupport::random_params(g), a);
    CHECK(r.difference < 1e-9);
    const DenseMatrix t = build_T(a, testsupport::random_params(g), PhiFunction::constant(1));
    CHECK(t.rows() == 10);
  }
  // Zero parameters, ||A|| = 3: the printed leading term is visibly wrong.
  DenseMatrix three(2, 2);
  three(0, 0) = 3.0;
  three(1, 1) = 1.0;
  const Lemma23Report z = verify_lemma23({0.0, 0.0, 0.0}, three);
  CHECK(z.closed_form == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(z.printed_form == doctest::Approx(std::sqrt(5.0)).epsilon(1e-14));
  CHECK(z.printed_difference > 0.1);

  // ||A|| = 1: both forms coincide.
  const DenseMatrix u = DenseMatrix::identity(3);
  const Lemma23Report w = verify_lemma23({Complex(1, 1), -0.5, 2.0}, u);
  CHECK(w.printed_difference < 1e-9);
}

TEST_CASE("property: constant phi block norm matches the constant-block closed form") {
  auto g = testsupport::rng(57);
  for (int trial = 0; trial < 20; ++trial) {
    const DenseMatrix a = testsupport::random_matrix(g, 4, 6);
    const ParamSet p = testsupport::random_params(g);
    CHECK(std::abs(matrix_norm(build_T(a, p, PhiFunction::constant(1))) - norm_block_constant(p, matrix_norm(a))) <
          1e-9);
  }
}

TEST_CASE("finite-dimensional attainment: the top right singular vector achieves the norm") {
  auto g = testsupport::rng(58);
  const DenseMatrix t = build_T(testsupport::random_matrix(g, 5, 4), testsupport::random_params(g),
                                PhiFunction::log(2));
  const HermEigen e = herm_eigen(HermMatrix(t.adjoint() * t));
  std::vector<Complex> x(t.cols());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = e.vectors(i, 0);
  const double achieved = testsupport::vnorm(t * std::span<const Complex>(x));
  CHECK(std::abs(achieved - matrix_norm(t)) < 1e-8);
}

TEST_CASE("oracle battery") {
  const OracleBatchReport r = run_oracle_battery(42, 40, 16);
  CHECK(r.trials == 40);
  CHECK(r.all_within());

  const OracleBatchReport empty = run_oracle_battery(42, 0, 16);
  CHECK(empty.trials == 0);
  CHECK(empty.all_within());

  const OracleBatchReport scalar = run_oracle_battery(7, 50, 1);
  CHECK(scalar.max_scalar < 1e-12);
  CHECK(scalar.all_within());

  CHECK_THROWS_AS(run_oracle_battery(1, 1, kOracleMaxDim + 1), InvalidInput);
  CHECK_THROWS_AS(run_oracle_battery(1, 1, 0), InvalidInput);
}
