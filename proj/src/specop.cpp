#include "normgate/specop.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "normgate/errors.hpp"
#include "normgate/phicrit.hpp"

namespace normgate {

namespace {

double value_tol(double bound) { return 1e-12 * std::max(1.0, bound); }

void check_value(double v, double bound, const char* what) {
  if (!std::isfinite(v) || v < -value_tol(bound) || v > bound + value_tol(bound))
    throw InvalidSpec(std::string(what) + " outside [0, bound]");
}

double cluster_radius(double bound) { return 1e-6 * std::max(1.0, bound); }

}  // namespace

// ---------------------------------------------------------------------------
// SpectrumSpec

SpectrumSpec::SpectrumSpec(double bound, std::vector<ClosedInterval> intervals,
                           std::vector<double> eigenvalues, std::optional<EigenSequence> sequence,
                           std::vector<double> limit_points)
    : bound_(bound),
      intervals_(std::move(intervals)),
      eigenvalues_(std::move(eigenvalues)),
      sequence_(std::move(sequence)),
      limit_points_(std::move(limit_points)) {
  if (!std::isfinite(bound_) || !(bound_ > 0.0)) throw InvalidSpec("spectrum bound must be > 0");
  for (const auto& iv : intervals_) {
    check_value(iv.lo, bound_, "interval end");
    check_value(iv.hi, bound_, "interval end");
    if (iv.lo > iv.hi) throw InvalidSpec("interval with lo > hi");
  }
  for (double v : eigenvalues_) check_value(v, bound_, "eigenvalue");
  for (double v : limit_points_) check_value(v, bound_, "limit point");
  if (sequence_) {
    if (!sequence_->value) throw InvalidSpec("eigenvalue sequence without a generator");
    if (sequence_->limit_points.empty())
      throw InvalidSpec("eigenvalue sequence must declare its limit points");
    for (double v : sequence_->limit_points) check_value(v, bound_, "sequence limit point");
    for (std::size_t n = 0; n <= sequence_->n_max; ++n)
      check_value(sequence_->value(n), bound_, "sequence value");
  }
  if (intervals_.empty() && eigenvalues_.empty() && !sequence_ && limit_points_.empty())
    throw InvalidSpec("empty spectrum");
}

std::vector<double> SpectrumSpec::limit_points() const {
  std::vector<double> out = limit_points_;
  if (sequence_) out.insert(out.end(), sequence_->limit_points.begin(), sequence_->limit_points.end());
  return out;
}

std::vector<double> SpectrumSpec::point_spectrum() const {
  std::vector<double> out = eigenvalues_;
  if (sequence_)
    for (std::size_t n = 0; n <= sequence_->n_max; ++n) out.push_back(sequence_->value(n));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

double SpectrumSpec::sup() const {
  double s = -1.0;
  for (const auto& iv : intervals_) s = std::max(s, iv.hi);
  for (double v : eigenvalues_) s = std::max(s, v);
  for (double v : limit_points()) s = std::max(s, v);
  if (sequence_)
    for (std::size_t n = 0; n <= sequence_->n_max; ++n) s = std::max(s, sequence_->value(n));
  return s;
}

bool SpectrumSpec::is_finite() const {
  if (!intervals_.empty()) return false;
  const auto sigma_p = point_spectrum();
  const double tol = value_tol(bound_);
  for (double v : limit_points()) {
    const auto it = std::lower_bound(sigma_p.begin(), sigma_p.end(), v - tol);
    if (it == sigma_p.end() || *it > v + tol) return false;
  }
  return true;
}

SpectrumSpec SpectrumSpec::mapped(const std::function<double(double)>& map) const {
  std::vector<ClosedInterval> iv;
  for (const auto& x : intervals_) iv.push_back({map(x.lo), map(x.hi)});
  std::vector<double> ev;
  for (double v : eigenvalues_) ev.push_back(map(v));
  std::vector<double> lp;
  for (double v : limit_points_) lp.push_back(map(v));
  std::optional<EigenSequence> seq;
  if (sequence_) {
    EigenSequence s = *sequence_;
    s.value = [inner = sequence_->value, map](std::size_t n) { return map(inner(n)); };
    for (double& v : s.limit_points) v = map(v);
    seq = std::move(s);
  }
  return SpectrumSpec(map(bound_), std::move(iv), std::move(ev), std::move(seq), std::move(lp));
}

// ---------------------------------------------------------------------------
// Attainment

bool attains_base(const SpectrumSpec& spec) {
  const double top = spec.sup();
  const double tol = value_tol(spec.bound());
  const auto sigma_p = spec.point_spectrum();
  const auto it = std::lower_bound(sigma_p.begin(), sigma_p.end(), top - tol);
  return it != sigma_p.end() && *it <= top + tol;
}

void check_phi_hypothesis(const PhiFunction& phi, double bound) {
  const double phi0 = phi(0.0);
  if (phi0 < 0.0) throw PreconditionError("phi(0) must be >= 0");
  for (std::size_t i = 1; i < kHypothesisGrid; ++i) {
    const double t = i + 1 == kHypothesisGrid
                         ? bound
                         : bound * static_cast<double>(i) / static_cast<double>(kHypothesisGrid - 1);
    if (phi(t) < phi0) throw PreconditionError("phi(t) >= phi(0) fails on [0, bound]");
  }
}

namespace {

struct Candidate {
  double t;
  double value;
};

// Every point of the spectrum that may maximize ||M_t||: refined interval
// maxima, eigenvalues, sequence values and limit points.
std::vector<Candidate> collect_candidates(const SpectrumSpec& spec, const ParamSet& p,
                                          const PhiFunction& phi) {
  auto f = [&](double t) { return eval_f(p, phi, std::max(t, 0.0)); };
  std::vector<Candidate> out;
  for (const auto& iv : spec.intervals()) {
    if (iv.lo == iv.hi) {
      out.push_back({iv.lo, f(iv.lo)});
      continue;
    }
    for (const auto& m : local_maxima_on_interval(f, Bracket(iv.lo, iv.hi), kIntervalGrid))
      out.push_back({m.argmax, m.value});
  }
  for (double v : spec.point_spectrum()) out.push_back({v, f(v)});
  for (double v : spec.limit_points()) out.push_back({v, f(v)});
  return out;
}

}  // namespace

double block_norm(const SpectrumSpec& spec, const ParamSet& p, const PhiFunction& phi) {
  validate(p);
  check_phi_hypothesis(phi, spec.bound());
  auto f = [&](double t) { return eval_f(p, phi, std::max(t, 0.0)); };
  double best = 0.0;
  for (const auto& iv : spec.intervals()) {
    const double v = iv.lo == iv.hi ? f(iv.lo)
                                    : maximize_on_interval(f, Bracket(iv.lo, iv.hi), kIntervalGrid).value;
    best = std::max(best, v);
  }
  if (const auto& seq = spec.sequence())
    for (std::size_t n = 0; n <= seq->n_max; ++n) best = std::max(best, f(seq->value(n)));
  for (double v : spec.eigenvalues()) best = std::max(best, f(v));
  for (double v : spec.limit_points()) best = std::max(best, f(v));
  return best;
}

OmegaSet compute_omega(const SpectrumSpec& spec, const ParamSet& p, const PhiFunction& phi,
                       double tol) {
  OmegaSet omega;
  omega.tol = tol;
  omega.cluster_radius = cluster_radius(spec.bound());
  omega.norm = block_norm(spec, p, phi);

  auto candidates = collect_candidates(spec, p, phi);
  for (const auto& c : candidates) omega.norm = std::max(omega.norm, c.value);
  const double threshold = omega.norm * (1.0 - tol);
  std::erase_if(candidates, [&](const Candidate& c) { return c.value < threshold; });
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& x, const Candidate& y) { return x.t < y.t; });

  // Single-linkage clustering along t; each cluster keeps its best point.
  for (std::size_t i = 0; i < candidates.size();) {
    Candidate rep = candidates[i];
    std::size_t j = i + 1;
    while (j < candidates.size() && candidates[j].t - candidates[j - 1].t <= omega.cluster_radius) {
      if (candidates[j].value > rep.value) rep = candidates[j];
      ++j;
    }
    omega.points.push_back(rep.t);
    i = j;
  }
  omega.is_singleton = omega.points.size() == 1;
  return omega;
}

bool monotone_certified(const ParamSet& p, const PhiFunction& phi, double bound) {
  const Bracket range(0.0, bound);
  try {
    const Certificate cert = check_condition_b(phi, range, kHypothesisGrid);
    if (cert.status == CertStatus::CertifiedMonotone && is_symbolic(cert.justification)) return true;
  } catch (const PreconditionError&) {
  }
  return param_certificate(p) && strictly_increasing_on_grid(phi, range, kHypothesisGrid);
}

AttainmentVerdict decide_attainment_by_omega(const SpectrumSpec& spec, const ParamSet& p,
                                             const PhiFunction& phi) {
  const OmegaSet omega = compute_omega(spec, p, phi);
  const auto sigma_p = spec.point_spectrum();
  const double threshold = omega.norm * (1.0 - omega.tol);

  auto nearest = [&](double t) -> std::optional<double> {
    if (sigma_p.empty()) return std::nullopt;
    const auto it = std::lower_bound(sigma_p.begin(), sigma_p.end(), t);
    std::optional<double> best;
    if (it != sigma_p.end()) best = *it;
    if (it != sigma_p.begin() && (!best || t - *(it - 1) < *best - t)) best = *(it - 1);
    return best;
  };

  bool near_miss = false;
  std::optional<double> witness;
  double witness_value = -1.0;
  for (double w : omega.points) {
    const auto e = nearest(w);
    if (!e) continue;
    const double dist = std::abs(*e - w);
    if (dist <= omega.cluster_radius) {
      const double v = eval_f(p, phi, *e);
      if (v >= threshold) {
        if (v > witness_value) {
          witness = *e;
          witness_value = v;
        }
        continue;
      }
    }
    if (dist <= 10.0 * omega.cluster_radius) near_miss = true;
  }
  if (witness) return {AttainStatus::Attains, AttainCertificate::Lemma36Witness, witness, true};
  if (near_miss) return {AttainStatus::Unknown, AttainCertificate::SigmaPNearMiss, std::nullopt, true};
  if (omega.is_singleton)
    return {AttainStatus::NotAttains, AttainCertificate::Lemma35Singleton, std::nullopt, true};
  return {AttainStatus::Unknown, AttainCertificate::OmegaNotSingleton, std::nullopt, true};
}

AttainmentVerdict decide_attainment(const SpectrumSpec& spec, const ParamSet& p, const PhiFunction& phi) {
  validate(p);
  check_phi_hypothesis(phi, spec.bound());
  if (monotone_certified(p, phi, spec.bound())) {
    if (attains_base(spec))
      return {AttainStatus::Attains, AttainCertificate::Thm38Monotone, spec.sup(), false};
    return {AttainStatus::NotAttains, AttainCertificate::Thm38Monotone, std::nullopt, false};
  }
  return decide_attainment_by_omega(spec, p, phi);
}

// ---------------------------------------------------------------------------
// Presets and JSON

namespace {

EigenSequence bergman_sequence(std::size_t n_max) {
  return EigenSequence{"bergman", n_max,
                       [](std::size_t n) {
                         const double k = static_cast<double>(n);
                         return std::sqrt((k + 1.0) / (k + 2.0));
                       },
                       {1.0}};
}

}  // namespace

SpectrumSpec preset_bergman(std::size_t n_max) {
  return SpectrumSpec(1.0, {}, {}, bergman_sequence(n_max), {});
}

SpectrumSpec preset_mult_op(double d) {
  if (!(d > 0.0) || !std::isfinite(d)) throw InvalidSpec("multiplication operator needs d > 0");
  return SpectrumSpec(d, {{0.0, d}}, {});
}

SpectrumSpec preset_ex313(double t1, double t2) {
  if (!(0.0 < t1 && t1 < t2 && t2 < 1.0)) throw InvalidSpec("ex313 preset needs 0 < t1 < t2 < 1");
  return SpectrumSpec(1.0, {{0.0, t1}}, {1.0});
}

SpectrumSpec parse_spectrum_json(const std::string& text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidSpec(std::string("spectrum JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidSpec("spectrum JSON must be an object");
  static const std::vector<std::string> known = {"bound", "intervals", "eigenvalues", "sequence",
                                                 "limit_points"};
  for (const auto& [key, _] : doc.items())
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw InvalidSpec("spectrum JSON: unknown field '" + key + "'");

  auto number = [](const json& j, const char* what) {
    if (!j.is_number()) throw InvalidSpec(std::string("spectrum JSON: ") + what + " must be a number");
    return j.get<double>();
  };
  auto number_list = [&](const char* key) {
    std::vector<double> out;
    if (!doc.contains(key)) return out;
    if (!doc[key].is_array()) throw InvalidSpec(std::string("spectrum JSON: ") + key + " must be an array");
    for (const auto& v : doc[key]) out.push_back(number(v, key));
    return out;
  };

  if (!doc.contains("bound")) throw InvalidSpec("spectrum JSON: missing 'bound'");
  const double bound = number(doc["bound"], "bound");

  std::vector<ClosedInterval> intervals;
  if (doc.contains("intervals")) {
    if (!doc["intervals"].is_array()) throw InvalidSpec("spectrum JSON: intervals must be an array");
    for (const auto& iv : doc["intervals"]) {
      if (!iv.is_array() || iv.size() != 2) throw InvalidSpec("spectrum JSON: interval must be [lo, hi]");
      intervals.push_back({number(iv[0], "interval"), number(iv[1], "interval")});
    }
  }

  std::optional<EigenSequence> sequence;
  if (doc.contains("sequence")) {
    const auto& s = doc["sequence"];
    if (!s.is_object()) throw InvalidSpec("spectrum JSON: sequence must be an object");
    for (const auto& [key, _] : s.items())
      if (key != "preset" && key != "n_max")
        throw InvalidSpec("spectrum JSON: unknown sequence field '" + key + "'");
    if (!s.contains("preset") || !s["preset"].is_string())
      throw InvalidSpec("spectrum JSON: sequence needs a string 'preset'");
    if (s["preset"].get<std::string>() != "bergman")
      throw InvalidSpec("spectrum JSON: unknown sequence preset '" + s["preset"].get<std::string>() + "'");
    std::size_t n_max = kDefaultBergmanNMax;
    if (s.contains("n_max")) {
      if (!s["n_max"].is_number_unsigned()) throw InvalidSpec("spectrum JSON: n_max must be a non-negative integer");
      n_max = s["n_max"].get<std::size_t>();
    }
    sequence = bergman_sequence(n_max);
  }

  return SpectrumSpec(bound, std::move(intervals), number_list("eigenvalues"), std::move(sequence),
                      number_list("limit_points"));
}

SpectrumSpec load_spectrum_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidSpec("cannot open spectrum JSON '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_spectrum_json(ss.str());
}

std::string to_string(AttainStatus s) {
  switch (s) {
    case AttainStatus::Attains:
      return "ATTAINS";
    case AttainStatus::NotAttains:
      return "NOT_ATTAINS";
    case AttainStatus::Unknown:
      return "UNKNOWN";
  }
  return "?";
}

std::string to_string(AttainCertificate c) {
  switch (c) {
    case AttainCertificate::Lemma36Witness:
      return "LEMMA_36_WITNESS";
    case AttainCertificate::Lemma35Singleton:
      return "LEMMA_35_SINGLETON";
    case AttainCertificate::Thm38Monotone:
      return "THM_38_MONOTONE";
    case AttainCertificate::OmegaNotSingleton:
      return "OMEGA_NOT_SINGLETON";
    case AttainCertificate::SigmaPNearMiss:
      return "SIGMA_P_NEAR_MISS";
  }
  return "?";
}

}  // namespace normgate
