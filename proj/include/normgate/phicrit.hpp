#pragma once

// Monotonicity certificates for the norm curve t -> ||M_t||.
//
// Condition (b) is the differential inequality phi(t) >= t phi'(t) / 4 on
// t > 0; for a nonnegative strictly increasing phi it holds exactly when every
// norm curve of the family is strictly increasing. Condition (a) is the
// integrated form phi(t) <= phi(t0) (t / t0)^4 for t >= t0. Independently of
// phi, Re(conj(a) conj(b) c) >= 0 also forces strict increase.

#include <cstddef>
#include <optional>
#include <string>

#include "normgate/curves.hpp"
#include "normgate/numkit.hpp"
#include "normgate/phi.hpp"

namespace normgate {

enum class CertStatus { CertifiedMonotone, CertifiedNotCondB, Inconclusive };

enum class Justification {
  Thm21B,      // condition (b) known symbolically for a named preset
  Cor24Alpha,  // power family: alpha <= 4 (or constant phi)
  Cor26Log,    // log family
  Cor27Params, // Re(conj(a) conj(b) c) >= 0
  NumericOnly, // grid evidence on the sampled bracket
};

struct Certificate {
  CertStatus status;
  Justification justification;
  std::optional<double> violation_point;  // present iff CertifiedNotCondB
};

/// True when phi is nonnegative and rises by more than 1e-13 * max(1, phi)
/// between consecutive points of an n-point grid on `b`.
bool strictly_increasing_on_grid(const PhiFunction& phi, const Bracket& b, std::size_t n);

/// Condition (b). POWER, LOG and PRESET kinds are decided symbolically for
/// all t > 0 and ignore the bracket; TABLE kinds are checked on the grid and
/// answer with NumericOnly. Throws PreconditionError when a table phi is not
/// nonnegative and strictly increasing on the grid.
Certificate check_condition_b(const PhiFunction& phi, const Bracket& b, std::size_t n);

/// Condition (a) at one anchor t0 over an n-point grid on `b` (b.lo >= t0).
bool check_condition_a(const PhiFunction& phi, double t0, const Bracket& b, std::size_t n);

/// Re(conj(a) conj(b) c) >= 0.
bool param_certificate(const ParamSet& p);

/// True when the certificate rests on a closed-form argument.
bool is_symbolic(Justification j);

std::string to_string(CertStatus s);
std::string to_string(Justification j);

}  // namespace normgate
