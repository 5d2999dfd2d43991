#include "normgate/phicrit.hpp"

#include <cmath>
#include <variant>

#include "normgate/errors.hpp"

namespace normgate {

namespace {

double grid_point(const Bracket& b, std::size_t i, std::size_t n) {
  if (i + 1 == n) return b.hi;
  return b.lo + b.width() * static_cast<double>(i) / static_cast<double>(n - 1);
}

Certificate power_certificate(const PowerPhi& p) {
  // Constant phi: the curve is the constant-block norm, increasing in t.
  if (p.d == 0.0 || p.alpha == 0.0) return {CertStatus::CertifiedMonotone, Justification::Cor24Alpha, {}};
  if (p.alpha <= 4.0) return {CertStatus::CertifiedMonotone, Justification::Cor24Alpha, {}};
  // (b) fails exactly where k t^-alpha + d < alpha d / 4, i.e. t^alpha > k / (d (alpha/4 - 1)).
  const double threshold = std::pow(p.k / (p.d * (p.alpha / 4.0 - 1.0)), 1.0 / p.alpha);
  const double point = threshold < 1.0 ? 1.0 : 2.0 * threshold;
  return {CertStatus::CertifiedNotCondB, Justification::Cor24Alpha, point};
}

Certificate preset_certificate(PhiPreset p) {
  switch (p) {
    case PhiPreset::Sqrt:  // t phi' = phi / 2
    case PhiPreset::Atan:  // t / (1 + t^2) <= atan t
      return {CertStatus::CertifiedMonotone, Justification::Thm21B, {}};
    case PhiPreset::Expm1:  // 4 (e^5 - 1) < 5 e^5
      return {CertStatus::CertifiedNotCondB, Justification::Thm21B, 5.0};
    case PhiPreset::T4Log1p:  // t phi' = 4 phi + t^5 / (1 + t) > 4 phi everywhere
      return {CertStatus::CertifiedNotCondB, Justification::Thm21B, 1.0};
  }
  return {CertStatus::Inconclusive, Justification::NumericOnly, {}};
}

Certificate table_certificate(const PhiFunction& phi, const Bracket& b, std::size_t n) {
  if (!strictly_increasing_on_grid(phi, b, n))
    throw PreconditionError("condition (b) needs phi nonnegative and strictly increasing on the grid");
  bool near_miss = false;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = grid_point(b, i, n);
    if (t <= 0.0) continue;
    const double v = phi(t);
    const double margin = v - 0.25 * t * phi.derivative(t);
    if (margin >= 0.0) continue;
    if (margin < -1e-6 * std::max(1.0, std::abs(v)))
      return {CertStatus::CertifiedNotCondB, Justification::NumericOnly, t};
    near_miss = true;
  }
  if (near_miss) return {CertStatus::Inconclusive, Justification::NumericOnly, {}};
  return {CertStatus::CertifiedMonotone, Justification::NumericOnly, {}};
}

}  // namespace

bool strictly_increasing_on_grid(const PhiFunction& phi, const Bracket& b, std::size_t n) {
  if (n < 2) throw InvalidInput("grid needs at least 2 points");
  double prev = phi(b.lo);
  if (prev < 0.0) return false;
  for (std::size_t i = 1; i < n; ++i) {
    const double v = phi(grid_point(b, i, n));
    if (!(v - prev > 1e-13 * std::max(1.0, std::abs(prev)))) return false;
    prev = v;
  }
  return true;
}

Certificate check_condition_b(const PhiFunction& phi, const Bracket& b, std::size_t n) {
  const auto& kind = phi.kind();
  if (const auto* p = std::get_if<PowerPhi>(&kind)) return power_certificate(*p);
  if (std::holds_alternative<LogPhi>(kind))
    return {CertStatus::CertifiedMonotone, Justification::Cor26Log, {}};
  if (const auto* p = std::get_if<PhiPreset>(&kind)) return preset_certificate(*p);
  return table_certificate(phi, b, n);
}

bool check_condition_a(const PhiFunction& phi, double t0, const Bracket& b, std::size_t n) {
  if (!(t0 > 0.0)) throw PreconditionError("condition (a) needs t0 > 0");
  if (b.lo < t0) throw PreconditionError("condition (a) needs the bracket inside [t0, inf)");
  if (n < 2) throw InvalidInput("grid needs at least 2 points");
  const double anchor = phi(t0);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = grid_point(b, i, n);
    const double ratio = t / t0;
    if (phi(t) > anchor * ratio * ratio * ratio * ratio * (1.0 + 1e-12)) return false;
  }
  return true;
}

bool param_certificate(const ParamSet& p) {
  validate(p);
  return (std::conj(p.a) * std::conj(p.b) * p.c).real() >= 0.0;
}

bool is_symbolic(Justification j) { return j != Justification::NumericOnly; }

std::string to_string(CertStatus s) {
  switch (s) {
    case CertStatus::CertifiedMonotone:
      return "CERTIFIED_MONOTONE";
    case CertStatus::CertifiedNotCondB:
      return "CERTIFIED_NOT_COND_B";
    case CertStatus::Inconclusive:
      return "INCONCLUSIVE";
  }
  return "?";
}

std::string to_string(Justification j) {
  switch (j) {
    case Justification::Thm21B:
      return "THM21_B";
    case Justification::Cor24Alpha:
      return "COR24_ALPHA";
    case Justification::Cor26Log:
      return "COR26_LOG";
    case Justification::Cor27Params:
      return "COR27_PARAMS";
    case Justification::NumericOnly:
      return "NUMERIC_ONLY";
  }
  return "?";
}

}  // namespace normgate
