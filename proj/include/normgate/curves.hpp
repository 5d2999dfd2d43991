#pragma once

// The parametrized 2x2 families and their closed-form norm curves:
//   M_t = [[a, t], [c t, b phi(t)]]   (variable enters off-diagonal)
//   N_s = [[a, d], [c, s]]            (variable enters the diagonal)
// plus the constant-block operator S = [[aI, A], [cA*, bI]].

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "normgate/numkit.hpp"
#include "normgate/phi.hpp"

namespace normgate {

struct ParamSet {
  Complex a{};
  Complex b{};
  Complex c{};
};

struct NsParams {
  Complex a{};
  Complex c{};
  Complex d{};

  /// Parameters of the transposed matrix N_s^T = [[a, c], [d, s]].
  NsParams transposed() const { return {a, d, c}; }
};

/// Throws InvalidInput on a non-finite component.
void validate(const ParamSet& p);
void validate(const NsParams& q);

struct CurveSample {
  double t;
  double value;
};

enum class MonotoneVerdict { StrictlyIncreasingOnGrid, ViolationFound };

struct MonotoneWitness {
  double t1;
  double t2;
  double f1;
  double f2;
};

struct MonotoneReport {
  MonotoneVerdict verdict;
  std::optional<MonotoneWitness> witness;  // present iff ViolationFound
};

enum class NsCase { StrictCaseI, StrictCaseII, StrictCaseIII, NotStrict };

Mat2 make_Mt(const ParamSet& p, const PhiFunction& phi, double t);

/// Entries of A_t = M_t^* M_t: a11, a22 on the diagonal and t*h(t) below it.
double eval_a11(const ParamSet& p, double t);
double eval_a22(const ParamSet& p, const PhiFunction& phi, double t);
Complex eval_h(const ParamSet& p, const PhiFunction& phi, double t);
/// Discriminant (a11 - a22)^2 + 4 t^2 |h|^2 of A_t.
double eval_g(const ParamSet& p, const PhiFunction& phi, double t);

/// ||M_t|| from f^2 = (a11 + a22 + sqrt(g)) / 2.
double eval_f(const ParamSet& p, const PhiFunction& phi, double t);

/// ||S|| for S = [[aI, A], [cA*, bI]] given ||A||.
double norm_block_constant(const ParamSet& p, double norm_a);

/// The same quantity with the leading term r = |a|^2 + |b|^2 + |c|^2 + 1 as
/// it is sometimes printed; only correct when ||A|| = 1. Kept for reports.
double norm_block_constant_printed(const ParamSet& p, double norm_a);

NsCase classify_ns(const NsParams& q);
double eval_ns_norm(const NsParams& q, double s);
Mat2 make_Ns(const NsParams& q, double s);

/// det(lambda0 I - M_t^* M_t) = (lambda0 - a11)(lambda0 - a22) - t^2 |h|^2.
double eval_phi_det(const ParamSet& p, const PhiFunction& phi, double lambda0, double t);

/// Grid falsifier for strict increase. Reports the first consecutive pair with
/// f(t_{i+1}) <= f(t_i) + tie_tol * max(1, f(t_i)).
MonotoneReport check_monotone_grid(const RealFunction& f, const Bracket& b, std::size_t n,
                                   double tie_tol = 1e-11);

std::vector<CurveSample> sample_curve(const ParamSet& p, const PhiFunction& phi, const Bracket& b,
                                      std::size_t n);

/// "t,norm" header, 17 significant digits.
void write_curve_csv(std::ostream& out, std::span<const CurveSample> samples);

std::string to_string(NsCase c);
std::string to_string(MonotoneVerdict v);

}  // namespace normgate
