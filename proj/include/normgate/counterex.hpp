#pragma once

// Constructing parameters (a, b, c) whose norm curve fails to increase, from a
// point t0 where t0 phi'(t0) > 4 phi(t0); and the reproduction of the
// phi = 2t^5 example whose curve peaks at the root of 15t^8 - 10t^3 - 1.

#include <map>
#include <string>
#include <vector>

#include "normgate/curves.hpp"
#include "normgate/phi.hpp"

namespace normgate {

struct DecreaseWitness {
  double t_lo;
  double t0;
  double f_lo;
  double f_t0;
};

struct CounterexampleResult {
  ParamSet params;
  double t0;
  double margin;
  double d1;
  double d2;
  double slope_gap;  // d1^2 - d2^2 = t0 (margin - 4 t0)
  DecreaseWitness witness;
};

/// Default margin 4 t0 + 1.
inline double default_margin(double t0) { return 4.0 * t0 + 1.0; }

/// c = 1, b = sqrt(margin / (phi'(t0) [t0 phi'(t0) - 4 phi(t0)])), a = -b phi(t0).
///
/// Throws PreconditionError when t0 <= 0, margin <= 4 t0 or condition (b)
/// holds at t0, and InternalConsistencyError when the slope identity fails or
/// no decrease witness turns up in [t0/2^12 ... t0).
CounterexampleResult construct_counterexample(const PhiFunction& phi, double t0, double margin);

/// One asserted value of a reproduction run.
struct CheckRow {
  std::string name;
  std::string expected;
  double observed;
  bool pass;
};

struct Example24Report {
  double t1;          // 4^(-1/5)
  double poly_at_t1;  // 15 t1^8 - 10 t1^3 - 1
  double poly_at_t1_closed;  // -(25/4) t1^3 - 1
  double poly_at_1;
  double t_star;
  double f_at_t_star;
  double f_at_1;
  double max_family_gap;  // |f(-2,2,1; t^5) - f(-2,1,1; 2t^5)| over a grid
  double max_closed_gap;  // |closed form - eval_f| over the same grid
  MonotoneReport rise_on_left;
  MonotoneReport fall_on_right;
  CounterexampleResult construction;  // phi = 2t^5, t0 = 1, margin = 20
  std::vector<CheckRow> rows;

  bool all_pass() const;
  /// Keys t_star, f_at_t_star, f_at_1, witness_t, params_a, params_b, params_c.
  std::map<std::string, std::string> key_values() const;
  std::string text() const;
};

/// 15 t^8 - 10 t^3 - 1, whose root in (4^(-1/5), 1) is the peak of the curve.
double example24_peak_poly(double t);
/// 1 - t^5 + sqrt(t^10 + 2t^5 + t^2 + 1), the norm curve of [[-2, t], [t, 2t^5]] on [0, 1].
double example24_curve(double t);

/// Runs every check and reports; never throws on a failed check.
Example24Report run_example24();
/// As run_example24, but throws ReproductionFailed when any check fails.
Example24Report reproduce_example24();

}  // namespace normgate
