#include "normgate/counterex.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "normgate/errors.hpp"
#include "normgate/format.hpp"

namespace normgate {

namespace {

constexpr int kShrinkSteps = 12;
constexpr std::size_t kWitnessGrid = 64;

}  // namespace

CounterexampleResult construct_counterexample(const PhiFunction& phi, double t0, double margin) {
  if (!(t0 > 0.0) || !std::isfinite(t0)) throw PreconditionError("counterexample needs t0 > 0");
  if (!(margin > 4.0 * t0) || !std::isfinite(margin))
    throw PreconditionError("counterexample needs margin > 4 t0");
  const double v = phi(t0);
  const double dv = phi.derivative(t0);
  const double excess = t0 * dv - 4.0 * v;
  if (!(excess > 0.0) || !(v >= 0.0))
    throw PreconditionError("condition (b) holds at t0: t0 phi'(t0) <= 4 phi(t0)");

  CounterexampleResult r{};
  r.t0 = t0;
  r.margin = margin;
  const double b = std::sqrt(margin / (dv * excess));
  r.params = ParamSet{-b * v, b, 1.0};

  r.d1 = b * dv * std::sqrt(t0 * t0 + b * b * v * v);
  r.d2 = 2.0 * t0 + b * b * v * dv;
  r.slope_gap = r.d1 * r.d1 - r.d2 * r.d2;
  const double expected_gap = t0 * (margin - 4.0 * t0);
  if (!(r.d1 > 0.0 && r.d2 > 0.0 && r.slope_gap > 0.0) ||
      std::abs(r.slope_gap - expected_gap) > 1e-9 * std::max(1.0, r.d1 * r.d1))
    throw InternalConsistencyError("counterexample slope identity d1^2 - d2^2 = t0 (margin - 4 t0) failed");

  const double f0 = eval_f(r.params, phi, t0);
  double delta = 0.5;
  for (int step = 0; step < kShrinkSteps; ++step, delta *= 0.5) {
    const double lo = t0 * (1.0 - delta);
    const double h = (t0 - lo) / static_cast<double>(kWitnessGrid);
    DecreaseWitness best{lo, t0, eval_f(r.params, phi, lo), f0};
    for (std::size_t i = 1; i < kWitnessGrid; ++i) {
      const double t = lo + h * static_cast<double>(i);
      const double f = eval_f(r.params, phi, t);
      if (f > best.f_lo) best = {t, t0, f, f0};
    }
    if (best.f_lo - f0 > 1e-12) {
      r.witness = best;
      return r;
    }
  }
  throw InternalConsistencyError("counterexample: no decrease witness below t0");
}

double example24_peak_poly(double t) {
  const double t3 = t * t * t;
  return 15.0 * t3 * t3 * t * t - 10.0 * t3 - 1.0;
}

double example24_curve(double t) {
  const double t5 = t * t * t * t * t;
  return 1.0 - t5 + std::sqrt(t5 * t5 + 2.0 * t5 + t * t + 1.0);
}

bool Example24Report::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const CheckRow& r) { return r.pass; });
}

std::map<std::string, std::string> Example24Report::key_values() const {
  return {
      {"t_star", format_double(t_star)},
      {"f_at_t_star", format_double(f_at_t_star)},
      {"f_at_1", format_double(f_at_1)},
      {"witness_t", format_double(construction.witness.t_lo)},
      {"params_a", format_complex(construction.params.a)},
      {"params_b", format_complex(construction.params.b)},
      {"params_c", format_complex(construction.params.c)},
  };
}

std::string Example24Report::text() const {
  std::ostringstream os;
  os << "phi(t) = 2t^5, a = -2, b = 1, c = 1 (equivalently phi = t^5, b = 2)\n";
  os << "  t1 = 4^(-1/5)      = " << format_double(t1) << '\n';
  os << "  15t1^8-10t1^3-1    = " << format_double(poly_at_t1) << '\n';
  os << "  peak t*            = " << format_double(t_star) << '\n';
  os << "  ||M_t*||           = " << format_double(f_at_t_star) << '\n';
  os << "  ||M_1||            = " << format_double(f_at_1) << '\n';
  os << "  decrease witness t = " << format_double(construction.witness.t_lo) << '\n';
  return os.str();
}

Example24Report run_example24() {
  Example24Report r{};
  const ParamSet p_b2{-2.0, 2.0, 1.0};
  const ParamSet p_b1{-2.0, 1.0, 1.0};
  const PhiFunction t5 = PhiFunction::power(0.0, 1.0, 5.0);
  const PhiFunction two_t5 = PhiFunction::power(0.0, 2.0, 5.0);
  auto curve = [&](double t) { return eval_f(p_b2, t5, t); };

  r.t1 = std::pow(4.0, -0.2);
  r.poly_at_t1 = example24_peak_poly(r.t1);
  r.poly_at_t1_closed = -6.25 * r.t1 * r.t1 * r.t1 - 1.0;
  r.poly_at_1 = example24_peak_poly(1.0);
  r.t_star = bisect_root(example24_peak_poly, Bracket(r.t1, 1.0), 1e-12);
  r.f_at_t_star = curve(r.t_star);
  r.f_at_1 = curve(1.0);

  constexpr std::size_t kGrid = 1001;
  for (std::size_t i = 0; i < kGrid; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(kGrid - 1);
    const double f = curve(t);
    r.max_family_gap = std::max(r.max_family_gap, std::abs(f - eval_f(p_b1, two_t5, t)));
    r.max_closed_gap = std::max(r.max_closed_gap, std::abs(f - example24_curve(t)));
  }
  r.rise_on_left = check_monotone_grid(curve, Bracket(0.0, r.t_star), 4096);
  r.fall_on_right = check_monotone_grid([&](double t) { return -curve(t); }, Bracket(r.t_star, 1.0), 4096);
  r.construction = construct_counterexample(two_t5, 1.0, 20.0);

  auto row = [&](std::string name, std::string expected, double observed, bool pass) {
    r.rows.push_back({std::move(name), std::move(expected), observed, pass});
  };
  row("h(t1) < 0", "< 0", r.poly_at_t1, r.poly_at_t1 < 0.0);
  row("h(t1) = -(25/4)t1^3 - 1", format_double(r.poly_at_t1_closed), r.poly_at_t1,
      std::abs(r.poly_at_t1 - r.poly_at_t1_closed) < 1e-12);
  row("h(1) > 0", "> 0", r.poly_at_1, r.poly_at_1 > 0.0);
  row("t*", "0.9431 +- 5e-4", r.t_star, std::abs(r.t_star - 0.9431) < 5e-4);
  row("||M_t*||", "2.2384 +- 5e-4", r.f_at_t_star, std::abs(r.f_at_t_star - 2.2384) < 5e-4);
  row("||M_1||", "sqrt(5) +- 5e-4", r.f_at_1, std::abs(r.f_at_1 - std::sqrt(5.0)) < 5e-4);
  row("||M_t*|| - ||M_1||", "> 2e-3", r.f_at_t_star - r.f_at_1, r.f_at_t_star - r.f_at_1 > 2e-3);
  row("closed form vs eval_f", "< 1e-12", r.max_closed_gap, r.max_closed_gap < 1e-12);
  row("(b=2, t^5) vs (b=1, 2t^5)", "< 1e-12", r.max_family_gap, r.max_family_gap < 1e-12);
  row("increasing on [0, t*]", to_string(MonotoneVerdict::StrictlyIncreasingOnGrid), 0.0,
      r.rise_on_left.verdict == MonotoneVerdict::StrictlyIncreasingOnGrid);
  row("decreasing on [t*, 1]", to_string(MonotoneVerdict::StrictlyIncreasingOnGrid) + " (of -f)", 0.0,
      r.fall_on_right.verdict == MonotoneVerdict::StrictlyIncreasingOnGrid);
  const ParamSet& cp = r.construction.params;
  row("constructed a", "-2", cp.a.real(), cp.a == Complex(-2.0, 0.0));
  row("constructed b", "1", cp.b.real(), cp.b == Complex(1.0, 0.0));
  row("constructed c", "1", cp.c.real(), cp.c == Complex(1.0, 0.0));
  return r;
}

Example24Report reproduce_example24() {
  Example24Report r = run_example24();
  if (!r.all_pass()) {
    std::string failed;
    for (const auto& row : r.rows)
      if (!row.pass) failed += " [" + row.name + "]";
    throw ReproductionFailed("phi = 2t^5 reproduction failed:" + failed);
  }
  return r;
}

}  // namespace normgate
