#pragma once

// Finite-dimensional brute force: explicit block matrices and their norms by
// Jacobi eigensolve, used to validate every closed form.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "normgate/curves.hpp"
#include "normgate/numkit.hpp"
#include "normgate/phi.hpp"
#include "normgate/specop.hpp"

namespace normgate {

inline constexpr std::size_t kOracleMaxDim = 512;

/// Spectral norm: sqrt of the largest eigenvalue of M*M.
double matrix_norm(const DenseMatrix& m);

/// (X*X)^(1/2) for the positive square root, negative round-off eigenvalues floored at 0.
DenseMatrix modulus(const DenseMatrix& x);

/// fn applied to a Hermitian matrix by eigendecomposition.
DenseMatrix hermitian_function(const DenseMatrix& h, const std::function<double(double)>& fn);

/// [[a I_m, A], [c A*, b phi(|A|)]] for an m x n matrix A.
DenseMatrix build_T(const DenseMatrix& a, const ParamSet& p, const PhiFunction& phi);

/// [[a I_m, |A*|], [c |A*|, b phi(|A*|)]].
DenseMatrix build_T_tilde(const DenseMatrix& a, const ParamSet& p, const PhiFunction& phi);

struct NormComparison {
  double brute;       // matrix_norm of the explicit operator
  double reference;   // closed form or reduced operator
  double difference;  // |brute - reference|
};

/// Diagonal A built from a finite spectrum versus specop::block_norm.
NormComparison compare_block_norm(const SpectrumSpec& spec, const ParamSet& p, const PhiFunction& phi);

/// ||T|| versus ||T~|| (the operator built from |A*|).
NormComparison compare_T_Ttilde(const DenseMatrix& a, const ParamSet& p, const PhiFunction& phi);

struct Lemma23Report {
  double closed_form;  // corrected leading term
  double brute;
  double difference;
  double printed_form;  // leading term |a|^2 + |b|^2 + |c|^2 + 1
  double printed_difference;
};

/// Constant-block operator [[aI, A], [cA*, bI]]: closed form against brute force.
Lemma23Report verify_lemma23(const ParamSet& p, const DenseMatrix& a);

struct OracleBatchReport {
  std::size_t trials = 0;
  double max_t_vs_ttilde = 0.0;       // |‖T‖ − ‖T~‖|
  double max_constant_block = 0.0;       // corrected closed form vs brute force
  double max_block_norm = 0.0;    // diagonal A vs block_norm
  double max_scalar = 0.0;        // 1x1 A vs eval_f
  double tolerance = 1e-9;
  bool all_within() const;
};

/// Randomized battery with fixed seed; dimensions drawn from [1, max_dim].
OracleBatchReport run_oracle_battery(std::uint64_t seed, std::size_t trials, std::size_t max_dim);

}  // namespace normgate
