#include "normgate/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "normgate/errors.hpp"

namespace normgate {

namespace {

void check_dims(const DenseMatrix& m) {
  if (m.rows() > kOracleMaxDim || m.cols() > kOracleMaxDim)
    throw InvalidInput("oracle matrices are capped at 512 rows and columns");
}

}  // namespace

double matrix_norm(const DenseMatrix& m) {
  check_dims(m);
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  // The smaller Gram matrix has the same nonzero spectrum.
  const DenseMatrix gram = m.rows() < m.cols() ? m * m.adjoint() : m.adjoint() * m;
  return std::sqrt(std::max(0.0, herm_max_eig(HermMatrix(gram))));
}

DenseMatrix hermitian_function(const DenseMatrix& h, const std::function<double(double)>& fn) {
  const HermEigen eig = herm_eigen(HermMatrix(h));
  const std::size_t n = eig.values.size();
  DenseMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double w = fn(eig.values[k]);
    for (std::size_t i = 0; i < n; ++i) {
      const Complex vik = w * eig.vectors(i, k);
      for (std::size_t j = 0; j < n; ++j) out(i, j) += vik * std::conj(eig.vectors(j, k));
    }
  }
  return out;
}

DenseMatrix modulus(const DenseMatrix& x) {
  return hermitian_function(x.adjoint() * x, [](double mu) { return std::sqrt(std::max(mu, 0.0)); });
}

namespace {

DenseMatrix assemble(const ParamSet& p, const DenseMatrix& upper_right, const DenseMatrix& lower_left,
                     const DenseMatrix& lower_right) {
  const std::size_t m = upper_right.rows();
  const std::size_t n = upper_right.cols();
  DenseMatrix t(m + n, m + n);
  t.set_block(0, 0, p.a * DenseMatrix::identity(m));
  t.set_block(0, m, upper_right);
  t.set_block(m, 0, p.c * lower_left);
  t.set_block(m, m, p.b * lower_right);
  return t;
}

std::function<double(double)> phi_of_sqrt(const PhiFunction& phi) {
  return [&phi](double mu) { return phi(std::sqrt(std::max(mu, 0.0))); };
}

}  // namespace

DenseMatrix build_T(const DenseMatrix& a, const ParamSet& p, const PhiFunction& phi) {
  check_dims(a);
  validate(p);
  if (a.rows() == 0 || a.cols() == 0) throw InvalidInput("build_T needs a non-empty A");
  const DenseMatrix phi_abs = hermitian_function(a.adjoint() * a, phi_of_sqrt(phi));
  return assemble(p, a, a.adjoint(), phi_abs);
}

DenseMatrix build_T_tilde(const DenseMatrix& a, const ParamSet& p, const PhiFunction& phi) {
  check_dims(a);
  validate(p);
  if (a.rows() == 0 || a.cols() == 0) throw InvalidInput("build_T_tilde needs a non-empty A");
  const DenseMatrix aa = a * a.adjoint();
  const DenseMatrix abs_adj =
      hermitian_function(aa, [](double mu) { return std::sqrt(std::max(mu, 0.0)); });
  return assemble(p, abs_adj, abs_adj, hermitian_function(aa, phi_of_sqrt(phi)));
}

NormComparison compare_block_norm(const SpectrumSpec& spec, const ParamSet& p, const PhiFunction& phi) {
  if (!spec.is_finite()) throw PreconditionError("compare_block_norm needs a finite spectrum");
  const auto values = spec.point_spectrum();
  const double brute = matrix_norm(build_T(DenseMatrix::diagonal(values), p, phi));
  const double reference = block_norm(spec, p, phi);
  return {brute, reference, std::abs(brute - reference)};
}

NormComparison compare_T_Ttilde(const DenseMatrix& a, const ParamSet& p, const PhiFunction& phi) {
  const double norm_a = matrix_norm(a);
  if (norm_a > 0.0) check_phi_hypothesis(phi, norm_a);
  else if (phi(0.0) < 0.0) throw PreconditionError("phi(0) must be >= 0");
  const double t = matrix_norm(build_T(a, p, phi));
  const double tt = matrix_norm(build_T_tilde(a, p, phi));
  return {t, tt, std::abs(t - tt)};
}

Lemma23Report verify_lemma23(const ParamSet& p, const DenseMatrix& a) {
  const double norm_a = matrix_norm(a);
  Lemma23Report r{};
  r.brute = matrix_norm(build_T(a, p, PhiFunction::constant(1.0)));
  r.closed_form = norm_block_constant(p, norm_a);
  r.printed_form = norm_block_constant_printed(p, norm_a);
  r.difference = std::abs(r.closed_form - r.brute);
  r.printed_difference = std::abs(r.printed_form - r.brute);
  return r;
}

bool OracleBatchReport::all_within() const {
  return max_t_vs_ttilde < tolerance && max_constant_block < tolerance && max_block_norm < tolerance &&
         max_scalar < tolerance;
}

OracleBatchReport run_oracle_battery(std::uint64_t seed, std::size_t trials, std::size_t max_dim) {
  if (max_dim < 1 || max_dim > kOracleMaxDim)
    throw InvalidInput("oracle battery needs 1 <= max_dim <= " + std::to_string(kOracleMaxDim));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> param(-2.0, 2.0);
  std::uniform_real_distribution<double> spectral(0.0, 1.5);
  std::uniform_int_distribution<std::size_t> dim(1, max_dim);
  const std::vector<PhiFunction> battery = {
      PhiFunction::power(1.0, 1.0, 2.0), PhiFunction::power(0.0, 1.0, 5.0),
      PhiFunction::power(0.5, 2.0, 1.0), PhiFunction::log(1.0),
      PhiFunction::log(3.0),             PhiFunction::preset(PhiPreset::Sqrt),
  };
  std::uniform_int_distribution<std::size_t> pick(0, battery.size() - 1);

  auto random_complex = [&] { return Complex(param(rng), param(rng)); };
  auto random_matrix = [&](std::size_t m, std::size_t n) {
    DenseMatrix a(m, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = Complex(unit(rng), unit(rng));
    return a;
  };

  OracleBatchReport r;
  r.trials = trials;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const ParamSet p{random_complex(), random_complex(), random_complex()};
    const PhiFunction& phi = battery[pick(rng)];
    const std::size_t m = dim(rng);
    const std::size_t n = dim(rng);

    const DenseMatrix a = random_matrix(m, n);
    r.max_t_vs_ttilde = std::max(r.max_t_vs_ttilde, compare_T_Ttilde(a, p, phi).difference);
    r.max_constant_block = std::max(r.max_constant_block, verify_lemma23(p, a).difference);

    std::vector<double> values(n);
    for (double& v : values) v = spectral(rng);
    const double bound = *std::max_element(values.begin(), values.end()) + 0.5;
    const SpectrumSpec spec(bound, {}, values);
    r.max_block_norm = std::max(r.max_block_norm, compare_block_norm(spec, p, phi).difference);

    DenseMatrix scalar(1, 1);
    scalar(0, 0) = Complex(unit(rng), unit(rng));
    const double t = std::abs(scalar(0, 0));
    r.max_scalar = std::max(r.max_scalar,
                            std::abs(matrix_norm(build_T(scalar, p, phi)) - eval_f(p, phi, t)));
  }
  return r;
}

}  // namespace normgate
