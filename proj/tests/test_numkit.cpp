#include <doctest.h>

#include <cmath>
#include <limits>

#include "normgate/errors.hpp"
#include "normgate/numkit.hpp"
#include "support.hpp"

using namespace normgate;
using testsupport::power_max_eig;

namespace {

// Oracle for 2x2 norms: the general Jacobi solver on M*M, not the closed form.
double jacobi_norm2(const Mat2& m) {
  const DenseMatrix d = DenseMatrix::from_mat2(m);
  return std::sqrt(std::max(0.0, herm_max_eig(HermMatrix(d.adjoint() * d))));
}

Mat2 diag_unitary(double th, double ps) {
  return {std::polar(1.0, th), 0.0, 0.0, std::polar(1.0, ps)};
}

}  // namespace

TEST_CASE("norm_mat2 on known matrices") {
  CHECK(norm_mat2({-2.0, 1.0, 1.0, 2.0}) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-15));
  CHECK(norm_mat2({1.0, 0.0, 0.0, 1.0}) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(norm_mat2({0.0, 3.0, 0.0, 0.0}) == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(norm_mat2({0.0, 0.0, 0.0, 0.0}) == 0.0);
}

TEST_CASE("norm_mat2 rejects non-finite entries") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(norm_mat2({nan, 0.0, 0.0, 0.0}), InvalidInput);
  CHECK_THROWS_AS(norm_mat2({0.0, Complex(0.0, inf), 0.0, 0.0}), InvalidInput);
}

TEST_CASE("norm_mat2 agrees with the Jacobi oracle on random matrices") {
  auto g = testsupport::rng(101);
  for (int i = 0; i < 2000; ++i) {
    const Mat2 m = testsupport::random_mat2(g, i % 2 ? 2.0 : 50.0);
    const double v = norm_mat2(m);
    CHECK(std::abs(v - jacobi_norm2(m)) <= 1e-12 * std::max(1.0, v));
  }
}

TEST_CASE("norm_mat2 survives nearly rank-deficient input") {
  // tr^2 - 4 det cancels badly here; the result must still match the oracle.
  const Mat2 m{1.0, 1.0 + 1e-9, 1.0, 1.0};
  CHECK(norm_mat2(m) == doctest::Approx(jacobi_norm2(m)).epsilon(1e-13));
  const Mat2 tiny{1e-200, 0.0, 0.0, 1e-200};
  CHECK(norm_mat2(tiny) == doctest::Approx(1e-200).epsilon(1e-12));
}

TEST_CASE("property: norm_mat2 invariances and bounds") {
  auto g = testsupport::rng(7);
  for (int i = 0; i < 1000; ++i) {
    const Mat2 m = testsupport::random_mat2(g);
    const double v = norm_mat2(m);
    CHECK(std::abs(norm_mat2(m.adjoint()) - v) <= 1e-12 * std::max(1.0, v));

    const Mat2 u = diag_unitary(testsupport::uniform(g, 0, 6.3), testsupport::uniform(g, 0, 6.3));
    const Mat2 w = diag_unitary(testsupport::uniform(g, 0, 6.3), testsupport::uniform(g, 0, 6.3));
    CHECK(std::abs(norm_mat2(u * m) - v) <= 1e-12 * std::max(1.0, v));
    CHECK(std::abs(norm_mat2(m * w) - v) <= 1e-12 * std::max(1.0, v));
    CHECK(std::abs(norm_mat2(u * m * w) - v) <= 1e-12 * std::max(1.0, v));

    const double emax = std::max({std::abs(m.e11), std::abs(m.e12), std::abs(m.e21), std::abs(m.e22)});
    const double frob = std::sqrt(std::norm(m.e11) + std::norm(m.e12) + std::norm(m.e21) + std::norm(m.e22));
    CHECK(emax <= v * (1 + 1e-14));
    CHECK(v <= frob * (1 + 1e-14));
  }
}

TEST_CASE("herm_max_eig on small known matrices") {
  const double d[] = {1.0, 5.0, 2.0};
  CHECK(herm_max_eig(HermMatrix(DenseMatrix::diagonal(d))) == doctest::Approx(5.0).epsilon(1e-15));
  DenseMatrix m(2, 2);
  m(0, 0) = 2.0;
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  m(1, 1) = 2.0;
  CHECK(herm_max_eig(HermMatrix{m}) == doctest::Approx(3.0).epsilon(1e-14));
  DenseMatrix one(1, 1);
  one(0, 0) = -4.5;
  CHECK(herm_max_eig(HermMatrix(one)) == -4.5);
}

TEST_CASE("HermMatrix validation") {
  CHECK_THROWS_AS(HermMatrix(DenseMatrix(0, 0)), InvalidInput);
  CHECK_THROWS_AS(HermMatrix(DenseMatrix(2, 3)), InvalidInput);
  DenseMatrix m(2, 2);
  m(0, 1) = Complex(1.0, 1.0);
  m(1, 0) = Complex(1.0, 1.0);  // should be the conjugate
  CHECK_THROWS_AS(HermMatrix{m}, InvalidInput);
  m(1, 0) = Complex(1.0, -1.0);
  CHECK_NOTHROW(HermMatrix{m});
  m(0, 0) = Complex(1.0, 0.5);  // diagonal must be real
  CHECK_THROWS_AS(HermMatrix{m}, InvalidInput);
}

TEST_CASE("herm_max_eig agrees with power iteration on random Hermitian matrices") {
  auto g = testsupport::rng(8);
  for (std::size_t n : {2u, 5u, 8u, 8u, 8u, 13u, 24u}) {
    const DenseMatrix h = testsupport::random_hermitian(g, n);
    const double v = herm_max_eig(HermMatrix(h));
    CHECK(std::abs(v - power_max_eig(h)) <= 1e-10 * std::max(1.0, std::abs(v)));
  }
}

TEST_CASE("herm_eigen returns a decreasing, orthonormal eigensystem") {
  auto g = testsupport::rng(9);
  const std::size_t n = 10;
  const DenseMatrix h = testsupport::random_hermitian(g, n);
  const HermEigen e = herm_eigen(HermMatrix(h));
  REQUIRE(e.values.size() == n);
  for (std::size_t k = 1; k < n; ++k) CHECK(e.values[k - 1] >= e.values[k]);
  const DenseMatrix v = e.vectors;
  const DenseMatrix vhv = v.adjoint() * h * v;
  const DenseMatrix vv = v.adjoint() * v;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      CHECK(std::abs(vv(i, j) - (i == j ? 1.0 : 0.0)) < 1e-12);
      CHECK(std::abs(vhv(i, j) - (i == j ? e.values[i] : 0.0)) < 1e-11);
    }
}

TEST_CASE("property: Rayleigh quotients never exceed herm_max_eig") {
  auto g = testsupport::rng(10);
  const DenseMatrix h = testsupport::random_hermitian(g, 9);
  const double top = herm_max_eig(HermMatrix(h));
  for (int k = 0; k < 100; ++k) {
    const auto x = testsupport::random_unit_vector(g, 9);
    const double q = testsupport::dot(x, h * std::span<const Complex>(x)).real();
    CHECK(q <= top + 1e-12 * std::max(1.0, std::abs(top)));
  }
}

TEST_CASE("Jacobi converges at dimension 100") {
  auto g = testsupport::rng(11);
  const DenseMatrix h = testsupport::random_hermitian(g, 100);
  const double v = herm_max_eig(HermMatrix(h));
  CHECK(std::abs(v - power_max_eig(h)) <= 1e-10 * std::max(1.0, std::abs(v)));
}

TEST_CASE("bisection finds known roots") {
  CHECK(bisect_root([](double x) { return x - 0.5; }, {0.0, 1.0}, 1e-14) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(bisect_root([](double x) { return x * x - 2.0; }, {1.0, 2.0}, 1e-14) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-13));
  const auto poly = [](double t) { return 15 * std::pow(t, 8) - 10 * std::pow(t, 3) - 1; };
  const double r = bisect_root(poly, {std::pow(4.0, -0.2), 1.0}, 1e-12);
  CHECK(std::abs(r - 0.9431) < 5e-4);
}

TEST_CASE("property: final bisection bracket is narrow and straddles a sign change") {
  const auto f = [](double x) { return std::cos(x) - x; };
  for (double tol : {1e-3, 1e-8, 1e-14}) {
    const SignChange s = bisect_bracket(f, {0.0, 1.0}, tol);
    CHECK(s.hi - s.lo <= tol);
    CHECK(f(s.lo) * f(s.hi) <= 0.0);
  }
  const SignChange exact = bisect_bracket([](double x) { return x - 0.5; }, {0.0, 1.0}, 1e-20);
  CHECK(exact.lo == exact.hi);
}

TEST_CASE("bisection tolerance scales with the bracket magnitude") {
  const SignChange s = bisect_bracket([](double x) { return x - 3e6; }, {1e6, 5e6}, 1e-12);
  CHECK(s.hi - s.lo <= 1e-12 * 5e6);
  CHECK(s.lo <= 3e6);
  CHECK(s.hi >= 3e6);
}

TEST_CASE("bisection errors") {
  CHECK_THROWS_AS(bisect_root([](double x) { return x * x + 1; }, {-1.0, 1.0}, 1e-9), BracketError);
  CHECK_THROWS_AS(Bracket(1.0, 1.0), InvalidInput);
  CHECK_THROWS_AS(Bracket(2.0, 1.0), InvalidInput);
  CHECK_THROWS_AS(Bracket(0.0, std::numeric_limits<double>::infinity()), InvalidInput);
}

TEST_CASE("maximize_on_interval") {
  const Maximum vertex = maximize_on_interval([](double t) { return -(t - 0.3) * (t - 0.3); }, {0.0, 1.0}, 128);
  CHECK(vertex.argmax == doctest::Approx(0.3).epsilon(1e-7));
  CHECK(std::abs(vertex.value) < 1e-14);

  const Maximum edge = maximize_on_interval([](double t) { return t; }, {0.0, 1.0}, 2);
  CHECK(edge.argmax == 1.0);
  CHECK(edge.value == 1.0);

  // Narrow peak lower than a broad one: the grid must pick the right basin.
  const auto two_bumps = [](double t) {
    return std::exp(-200 * (t - 0.2) * (t - 0.2)) + 1.01 * std::exp(-20000 * (t - 0.8) * (t - 0.8));
  };
  const Maximum m = maximize_on_interval(two_bumps, {0.0, 1.0}, 4096);
  CHECK(m.argmax == doctest::Approx(0.8).epsilon(1e-6));

  CHECK_THROWS_AS(maximize_on_interval([](double t) { return t; }, {0.0, 1.0}, 1), InvalidInput);
}

TEST_CASE("local_maxima_on_interval lists every grid champion, best first") {
  // Three interior peaks plus the rising right endpoint.
  const auto f = [](double t) { return std::sin(6 * 3.141592653589793 * t) * (1 + 0.1 * t); };
  const auto maxima = local_maxima_on_interval(f, {0.0, 1.0}, 2048);
  REQUIRE(maxima.size() == 4);
  for (std::size_t k = 1; k < maxima.size(); ++k) CHECK(maxima[k - 1].value >= maxima[k].value);
  CHECK(maxima.front().argmax == doctest::Approx(0.75).epsilon(1e-3));
}
