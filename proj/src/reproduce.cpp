#include "normgate/reproduce.hpp"

#include <algorithm>
#include <cmath>

#include "normgate/errors.hpp"
#include "normgate/format.hpp"
#include "normgate/specop.hpp"

namespace normgate {

namespace {

const ParamSet kPeakParams{-2.0, 2.0, 1.0};

PhiFunction t5() { return PhiFunction::power(0.0, 1.0, 5.0); }

void add(ReproSection& s, std::string name, std::string expected, double observed, bool pass) {
  s.rows.push_back({std::move(name), std::move(expected), observed, pass});
}

double bergman_value(std::size_t n) {
  const double k = static_cast<double>(n);
  return std::sqrt((k + 1.0) / (k + 2.0));
}

}  // namespace

bool ReproSection::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const CheckRow& r) { return r.pass; });
}

ReproSection reproduce_ex24() { return {"ex24", run_example24().rows}; }

ReproSection reproduce_ex311() {
  ReproSection s{"ex311", {}};
  const SpectrumSpec spec = preset_mult_op(1.0);
  const ParamSet p{1.0, 1.0, 1.0};
  const PhiFunction phi = PhiFunction::log(1.0);
  add(s, "attains_base", "false", attains_base(spec), !attains_base(spec));
  add(s, "monotone certificate", "true", monotone_certified(p, phi, spec.bound()),
      monotone_certified(p, phi, spec.bound()));
  const OmegaSet omega = compute_omega(spec, p, phi);
  add(s, "Omega singleton", "true", omega.is_singleton, omega.is_singleton);
  const double omega_point = omega.points.empty() ? -1.0 : omega.points.front();
  add(s, "Omega point", "1 +- 1e-9", omega_point, std::abs(omega_point - 1.0) < 1e-9);
  const AttainmentVerdict v = decide_attainment(spec, p, phi);
  add(s, "verdict", "NOT_ATTAINS (" + to_string(AttainCertificate::Thm38Monotone) + ")", 0.0,
      v.status == AttainStatus::NotAttains && v.certificate == AttainCertificate::Thm38Monotone);
  const AttainmentVerdict w = decide_attainment_by_omega(spec, p, phi);
  add(s, "Omega-path verdict", "NOT_ATTAINS (" + to_string(AttainCertificate::Lemma35Singleton) + ")",
      0.0, w.status == AttainStatus::NotAttains && w.certificate == AttainCertificate::Lemma35Singleton);
  return s;
}

std::size_t bergman_argmax_index(std::size_t n_max) {
  std::size_t best = 0;
  double best_value = example24_curve(bergman_value(0));
  for (std::size_t n = 1; n <= n_max; ++n) {
    const double v = example24_curve(bergman_value(n));
    if (v > best_value) {
      best_value = v;
      best = n;
    }
  }
  return best;
}

ReproSection reproduce_ex312(std::size_t n_max) {
  ReproSection s{"ex312", {}};
  const SpectrumSpec spec = preset_bergman(n_max);
  add(s, "||A||", "1", spec.sup(), spec.sup() == 1.0);
  add(s, "attains_base", "false", attains_base(spec), !attains_base(spec));
  const std::size_t n0 = bergman_argmax_index(n_max);
  const double expected = bergman_value(n0);
  const AttainmentVerdict v = decide_attainment(spec, kPeakParams, t5());
  add(s, "verdict", "ATTAINS (" + to_string(AttainCertificate::Lemma36Witness) + ")", 0.0,
      v.status == AttainStatus::Attains && v.certificate == AttainCertificate::Lemma36Witness);
  const double witness = v.witness.value_or(-1.0);
  add(s, "witness", "sqrt((n0+1)/(n0+2)), n0 = " + std::to_string(n0), witness,
      std::abs(witness - expected) < 1e-12);
  return s;
}

ReproSection reproduce_ex313(double t1, double t2) {
  ReproSection s{"ex313", {}};
  const double t_star = run_example24().t_star;
  add(s, "t* < t1 < t2 < 1", format_double(t_star) + " < t1", t1, t_star < t1 && t1 < t2 && t2 < 1.0);
  const SpectrumSpec spec = preset_ex313(t1, t2);
  add(s, "attains_base", "true", attains_base(spec), attains_base(spec));
  const OmegaSet omega = compute_omega(spec, kPeakParams, t5());
  add(s, "Omega singleton", "true", omega.is_singleton, omega.is_singleton);
  const double omega_point = omega.points.empty() ? -1.0 : omega.points.front();
  add(s, "Omega point", "t* +- 1e-6", omega_point, std::abs(omega_point - t_star) < 1e-6);
  const AttainmentVerdict v = decide_attainment(spec, kPeakParams, t5());
  add(s, "verdict", "NOT_ATTAINS (" + to_string(AttainCertificate::Lemma35Singleton) + ")", 0.0,
      v.status == AttainStatus::NotAttains && v.certificate == AttainCertificate::Lemma35Singleton);
  return s;
}

std::vector<ReproSection> reproduce(const std::string& which) {
  if (which == "ex24") return {reproduce_ex24()};
  if (which == "ex311") return {reproduce_ex311()};
  if (which == "ex312") return {reproduce_ex312()};
  if (which == "ex313") return {reproduce_ex313()};
  if (which == "all") return {reproduce_ex24(), reproduce_ex311(), reproduce_ex312(), reproduce_ex313()};
  throw InvalidInput("unknown reproduction '" + which + "' (ex24, ex311, ex312, ex313, all)");
}

}  // namespace normgate
