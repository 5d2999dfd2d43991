#include "normgate/curves.hpp"

#include <cmath>
#include <iomanip>

#include "normgate/errors.hpp"

namespace normgate {

void validate(const ParamSet& p) {
  if (!is_finite(p.a) || !is_finite(p.b) || !is_finite(p.c))
    throw InvalidInput("ParamSet has a non-finite component");
}

void validate(const NsParams& q) {
  if (!is_finite(q.a) || !is_finite(q.c) || !is_finite(q.d))
    throw InvalidInput("NsParams has a non-finite component");
}

namespace {

void check_t(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("curve parameter t must be finite and >= 0");
}

}  // namespace

Mat2 make_Mt(const ParamSet& p, const PhiFunction& phi, double t) {
  validate(p);
  check_t(t);
  return {p.a, t, p.c * t, p.b * phi(t)};
}

double eval_a11(const ParamSet& p, double t) { return std::norm(p.a) + std::norm(p.c) * t * t; }

double eval_a22(const ParamSet& p, const PhiFunction& phi, double t) {
  const double v = phi(t);
  return t * t + std::norm(p.b) * v * v;
}

Complex eval_h(const ParamSet& p, const PhiFunction& phi, double t) {
  return p.a + std::conj(p.b) * p.c * phi(t);
}

double eval_g(const ParamSet& p, const PhiFunction& phi, double t) {
  validate(p);
  check_t(t);
  const double diff = eval_a11(p, t) - eval_a22(p, phi, t);
  return diff * diff + 4.0 * t * t * std::norm(eval_h(p, phi, t));
}

double eval_f(const ParamSet& p, const PhiFunction& phi, double t) {
  validate(p);
  check_t(t);
  const double v = phi(t);
  const double a11 = std::norm(p.a) + std::norm(p.c) * t * t;
  const double a22 = t * t + std::norm(p.b) * v * v;
  const Complex h = p.a + std::conj(p.b) * p.c * v;
  const double g = (a11 - a22) * (a11 - a22) + 4.0 * t * t * std::norm(h);
  return std::sqrt(0.5 * (a11 + a22 + std::sqrt(g)));
}

namespace {

double block_constant(const ParamSet& p, double norm_a, double r) {
  const double n2 = norm_a * norm_a;
  const double aa = std::norm(p.a), bb = std::norm(p.b), cc = std::norm(p.c);
  const double k = std::norm(p.b + std::conj(p.a) * p.c) + std::norm(p.a + std::conj(p.b) * p.c);
  const double radicand = (aa - bb) * (aa - bb) + (cc - 1.0) * (cc - 1.0) * n2 * n2 + 2.0 * k * n2;
  return std::sqrt(0.5 * (r + std::sqrt(radicand)));
}

}  // namespace

double norm_block_constant(const ParamSet& p, double norm_a) {
  if (!(norm_a >= 0.0)) throw InvalidInput("norm_block_constant: ||A|| must be >= 0");
  const double r = std::norm(p.a) + std::norm(p.b) + (std::norm(p.c) + 1.0) * norm_a * norm_a;
  return block_constant(p, norm_a, r);
}

double norm_block_constant_printed(const ParamSet& p, double norm_a) {
  if (!(norm_a >= 0.0)) throw InvalidInput("norm_block_constant: ||A|| must be >= 0");
  const double r = std::norm(p.a) + std::norm(p.b) + std::norm(p.c) + 1.0;
  return block_constant(p, norm_a, r);
}

NsCase classify_ns(const NsParams& q) {
  validate(q);
  const Complex zero{};
  if (q.a == zero && q.c == zero && q.d == zero) return NsCase::StrictCaseIII;
  const double re = (std::conj(q.a) * q.c * q.d).real();
  if (re > 0.0) return NsCase::StrictCaseI;
  if (re == 0.0 && std::abs(q.c) + std::abs(q.d) > 0.0) return NsCase::StrictCaseII;
  return NsCase::NotStrict;
}

double eval_ns_norm(const NsParams& q, double s) {
  check_t(s);
  const double aa = std::norm(q.a), cc = std::norm(q.c), dd = std::norm(q.d);
  const double trace = aa + cc + dd + s * s;
  const double diff = s * s + dd - aa - cc;
  const double disc = diff * diff + 4.0 * std::norm(q.a * std::conj(q.d) + q.c * s);
  return std::sqrt(0.5 * (trace + std::sqrt(disc)));
}

Mat2 make_Ns(const NsParams& q, double s) { return {q.a, q.d, q.c, s}; }

double eval_phi_det(const ParamSet& p, const PhiFunction& phi, double lambda0, double t) {
  validate(p);
  check_t(t);
  return (lambda0 - eval_a11(p, t)) * (lambda0 - eval_a22(p, phi, t)) -
         t * t * std::norm(eval_h(p, phi, t));
}

MonotoneReport check_monotone_grid(const RealFunction& f, const Bracket& b, std::size_t n,
                                   double tie_tol) {
  if (n < 2) throw InvalidInput("check_monotone_grid needs n >= 2");
  const double step = b.width() / static_cast<double>(n - 1);
  double t_prev = b.lo;
  double f_prev = f(t_prev);
  for (std::size_t i = 1; i < n; ++i) {
    const double t = (i + 1 == n) ? b.hi : b.lo + step * static_cast<double>(i);
    const double v = f(t);
    if (v <= f_prev + tie_tol * std::max(1.0, f_prev))
      return {MonotoneVerdict::ViolationFound, MonotoneWitness{t_prev, t, f_prev, v}};
    t_prev = t;
    f_prev = v;
  }
  return {MonotoneVerdict::StrictlyIncreasingOnGrid, std::nullopt};
}

std::vector<CurveSample> sample_curve(const ParamSet& p, const PhiFunction& phi, const Bracket& b,
                                      std::size_t n) {
  if (n < 2) throw InvalidInput("curve sampling needs n >= 2");
  std::vector<CurveSample> out;
  out.reserve(n);
  const double step = b.width() / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = (i + 1 == n) ? b.hi : b.lo + step * static_cast<double>(i);
    out.push_back({t, eval_f(p, phi, t)});
  }
  return out;
}

void write_curve_csv(std::ostream& out, std::span<const CurveSample> samples) {
  const auto flags = out.flags();
  const auto prec = out.precision();
  out << "t,norm\n" << std::setprecision(17);
  for (const auto& s : samples) out << s.t << ',' << s.value << '\n';
  out.flags(flags);
  out.precision(prec);
}

std::string to_string(NsCase c) {
  switch (c) {
    case NsCase::StrictCaseI:
      return "STRICT_CASE_I";
    case NsCase::StrictCaseII:
      return "STRICT_CASE_II";
    case NsCase::StrictCaseIII:
      return "STRICT_CASE_III";
    case NsCase::NotStrict:
      return "NOT_STRICT";
  }
  return "?";
}

std::string to_string(MonotoneVerdict v) {
  return v == MonotoneVerdict::ViolationFound ? "VIOLATION_FOUND" : "STRICTLY_INCREASING_ON_GRID";
}

}  // namespace normgate
