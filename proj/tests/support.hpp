#pragma once

// Shared helpers for the test suites: seeded generators and oracles that do
// not go through the library's Jacobi solver.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "normgate/curves.hpp"
#include "normgate/numkit.hpp"
#include "normgate/phi.hpp"

namespace testsupport {

using normgate::Complex;
using normgate::DenseMatrix;

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& g, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(g);
}

inline Complex random_complex(std::mt19937_64& g, double r = 2.0) {
  return {uniform(g, -r, r), uniform(g, -r, r)};
}

inline normgate::ParamSet random_params(std::mt19937_64& g, double r = 2.0) {
  return {random_complex(g, r), random_complex(g, r), random_complex(g, r)};
}

inline normgate::Mat2 random_mat2(std::mt19937_64& g, double r = 2.0) {
  return {random_complex(g, r), random_complex(g, r), random_complex(g, r), random_complex(g, r)};
}

inline DenseMatrix random_matrix(std::mt19937_64& g, std::size_t rows, std::size_t cols, double r = 1.0) {
  DenseMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_complex(g, r);
  return m;
}

inline DenseMatrix random_hermitian(std::mt19937_64& g, std::size_t n) {
  DenseMatrix x = random_matrix(g, n, n);
  return x + x.adjoint();
}

inline std::vector<Complex> random_unit_vector(std::mt19937_64& g, std::size_t n) {
  std::vector<Complex> v(n);
  double s = 0.0;
  for (auto& z : v) {
    z = random_complex(g, 1.0);
    s += std::norm(z);
  }
  for (auto& z : v) z /= std::sqrt(s);
  return v;
}

inline double vnorm(const std::vector<Complex>& v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

inline Complex dot(const std::vector<Complex>& x, const std::vector<Complex>& y) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
  return s;
}

/// Largest eigenvalue of a Hermitian matrix by shifted power iteration.
/// The shift ||H||_F makes the spectrum positive so the top eigenvalue dominates.
inline double power_max_eig(const DenseMatrix& h, std::size_t iters = 200000) {
  const std::size_t n = h.rows();
  const double shift = h.frobenius_norm();
  std::vector<Complex> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = Complex(1.0 + 0.01 * double(i), 0.003 * double(i));
  double lambda = 0.0;
  for (std::size_t k = 0; k < iters; ++k) {
    std::vector<Complex> w = h * std::span<const Complex>(v);
    for (std::size_t i = 0; i < n; ++i) w[i] += shift * v[i];
    const double nw = vnorm(w);
    for (auto& z : w) z /= nw;
    std::vector<Complex> hw = h * std::span<const Complex>(w);
    const double next = dot(w, hw).real();
    v = std::move(w);
    if (k > 50 && std::abs(next - lambda) <= 1e-15 * std::max(1.0, std::abs(next))) return next;
    lambda = next;
  }
  return lambda;
}

/// Spectral norm by power iteration on M*M.
inline double power_norm(const DenseMatrix& m) {
  return std::sqrt(std::max(0.0, power_max_eig(m.adjoint() * m)));
}

inline std::vector<normgate::PhiFunction> phi_battery() {
  using normgate::PhiFunction;
  return {PhiFunction::power(1, 1, 2), PhiFunction::power(0, 1, 5), PhiFunction::power(0.5, 2, 1),
          PhiFunction::power(0, 2, 5),  PhiFunction::log(1),          PhiFunction::log(3),
          PhiFunction::preset("sqrt"),  PhiFunction::constant(1)};
}

}  // namespace testsupport
