#pragma once

// Spectral-data model of the positive operator |A*| and norm attainment of
// the block operator T = [[aI, A], [cA*, b phi(|A|)]].
//
// ||T|| is the maximum of ||M_t|| over the spectrum of |A*|, and the set
// Omega of maximizers decides attainment: T attains its norm when Omega meets
// the point spectrum, and does not when Omega is a single point outside it.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "normgate/curves.hpp"
#include "normgate/phi.hpp"

namespace normgate {

struct ClosedInterval {
  double lo;
  double hi;
};

/// Eigenvalue sequence n -> value(n), n = 0..n_max, with the limit points it
/// accumulates at. Limit points belong to the spectrum, not the point spectrum.
struct EigenSequence {
  std::string name;
  std::size_t n_max = 0;
  std::function<double(std::size_t)> value;
  std::vector<double> limit_points;
};

class SpectrumSpec {
 public:
  /// Throws InvalidSpec when a value leaves [0, bound], an interval is
  /// reversed, bound <= 0, or the spectrum is empty.
  SpectrumSpec(double bound, std::vector<ClosedInterval> intervals, std::vector<double> eigenvalues,
               std::optional<EigenSequence> sequence = std::nullopt,
               std::vector<double> limit_points = {});

  double bound() const { return bound_; }
  const std::vector<ClosedInterval>& intervals() const { return intervals_; }
  const std::vector<double>& eigenvalues() const { return eigenvalues_; }
  const std::optional<EigenSequence>& sequence() const { return sequence_; }
  /// Declared limit points, including those of the sequence.
  std::vector<double> limit_points() const;

  /// Eigenvalues and sequence values, sorted ascending, duplicates removed.
  std::vector<double> point_spectrum() const;

  /// sup of the spectrum, i.e. ||A||.
  double sup() const;

  /// True when the spectrum is a finite set of eigenvalues.
  bool is_finite() const;

  /// Image of the spectrum under an increasing continuous map s -> map(s).
  SpectrumSpec mapped(const std::function<double(double)>& map) const;

 private:
  double bound_;
  std::vector<ClosedInterval> intervals_;
  std::vector<double> eigenvalues_;
  std::optional<EigenSequence> sequence_;
  std::vector<double> limit_points_;
};

struct OmegaSet {
  std::vector<double> points;  // one representative per cluster
  bool is_singleton = false;
  double tol = 0.0;            // relative threshold ||M_t|| >= ||T|| (1 - tol)
  double cluster_radius = 0.0;
  double norm = 0.0;           // ||T||
};

enum class AttainStatus { Attains, NotAttains, Unknown };

enum class AttainCertificate {
  Lemma36Witness,    // a maximizer lies in the point spectrum
  Lemma35Singleton,  // single maximizer outside the point spectrum
  Thm38Monotone,     // strictly increasing curve: T attains iff A attains
  OmegaNotSingleton, // several maximizers, none an eigenvalue
  SigmaPNearMiss,    // an eigenvalue sits just outside the clustering radius
};

struct AttainmentVerdict {
  AttainStatus status;
  AttainCertificate certificate;
  std::optional<double> witness;  // t0 in Omega and the point spectrum when Attains
  bool numeric;                   // the decision rests on floating tolerances
};

inline constexpr double kOmegaTol = 1e-9;
inline constexpr std::size_t kHypothesisGrid = 4096;
inline constexpr std::size_t kIntervalGrid = 4096;
inline constexpr std::size_t kDefaultBergmanNMax = 100000;

/// sup of the spectrum lies in the point spectrum (A attains its norm).
bool attains_base(const SpectrumSpec& spec);

/// Throws PreconditionError unless phi(t) >= phi(0) >= 0 on a 4096-point grid of [0, B].
void check_phi_hypothesis(const PhiFunction& phi, double bound);

/// max over the spectrum of ||M_t||.
double block_norm(const SpectrumSpec& spec, const ParamSet& p, const PhiFunction& phi);

OmegaSet compute_omega(const SpectrumSpec& spec, const ParamSet& p, const PhiFunction& phi,
                       double tol = kOmegaTol);

/// Decision ladder: monotonicity certificate, then Omega against the point spectrum.
AttainmentVerdict decide_attainment(const SpectrumSpec& spec, const ParamSet& p, const PhiFunction& phi);

/// The Omega-based steps only, skipping any monotonicity certificate.
AttainmentVerdict decide_attainment_by_omega(const SpectrumSpec& spec, const ParamSet& p,
                                             const PhiFunction& phi);

/// True when a symbolic argument shows t -> ||M_t|| strictly increasing on [0, bound].
bool monotone_certified(const ParamSet& p, const PhiFunction& phi, double bound);

/// Eigenvalues sqrt((n + 1) / (n + 2)), n = 0..n_max, accumulating at 1 (not an eigenvalue).
SpectrumSpec preset_bergman(std::size_t n_max = kDefaultBergmanNMax);
/// Multiplication by t on L^2[0, d]: spectrum [0, d], no eigenvalues.
SpectrumSpec preset_mult_op(double d);
/// Spectrum [0, t1] u {1} with point spectrum {1}; requires 0 < t1 < t2 < 1.
SpectrumSpec preset_ex313(double t1, double t2);

/// Parses {"bound", "intervals", "eigenvalues", "sequence", "limit_points"}.
SpectrumSpec parse_spectrum_json(const std::string& text);
SpectrumSpec load_spectrum_json_file(const std::string& path);

std::string to_string(AttainStatus s);
std::string to_string(AttainCertificate c);

}  // namespace normgate
