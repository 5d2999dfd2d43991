#pragma once

// The scalar function phi of the matrix family M_t: named analytic families
// and tabulated samples, with derivative access.

#include <istream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace normgate {

/// phi(t) = k + d * t^alpha, k, d, alpha >= 0.
struct PowerPhi {
  double k;
  double d;
  double alpha;
};

/// phi(t) = ln(1 + alpha * t), alpha > 0.
struct LogPhi {
  double alpha;
};

/// Piecewise-linear interpolation of samples sorted strictly ascending in t.
struct TablePhi {
  std::vector<double> t;
  std::vector<double> value;
};

enum class PhiPreset {
  Sqrt,     // sqrt(t)
  Atan,     // atan(t)
  Expm1,    // e^t - 1
  T4Log1p,  // t^4 ln(1 + t)
};

class PhiFunction {
 public:
  using Kind = std::variant<PowerPhi, LogPhi, TablePhi, PhiPreset>;

  static PhiFunction power(double k, double d, double alpha);
  static PhiFunction constant(double k) { return power(k, 0.0, 0.0); }
  static PhiFunction log(double alpha);
  static PhiFunction table(std::vector<std::pair<double, double>> samples);
  static PhiFunction preset(PhiPreset which);
  /// Accepts "sqrt", "atan", "expm1", "t4log1p".
  static PhiFunction preset(std::string_view name);

  const Kind& kind() const { return kind_; }

  /// Throws DomainError for t < 0 or outside a table's sampled range.
  double operator()(double t) const;
  /// Derivative at t > 0: closed form for POWER and LOG, central finite
  /// difference with step 1e-6 * max(1, t) otherwise.
  double derivative(double t) const;

  double domain_min() const;
  /// Largest t at which the function is defined (infinite for analytic kinds).
  double domain_max() const;

  /// Flag-grammar spelling, e.g. "power:0,1,5".
  std::string describe() const;

 private:
  explicit PhiFunction(Kind kind) : kind_(std::move(kind)) {}
  Kind kind_;
};

inline double eval_phi(const PhiFunction& phi, double t) { return phi(t); }
inline double eval_dphi(const PhiFunction& phi, double t) { return phi.derivative(t); }

/// Reads a two-column CSV whose header starts with "t" ("t,phi" or "t,norm").
PhiFunction load_phi_table(std::istream& in);
PhiFunction load_phi_table_file(const std::string& path);

/// Parses the CLI grammar power:k,d,alpha | log:alpha | table:path.csv | preset:name.
PhiFunction parse_phi_spec(std::string_view spec);

std::string to_string(PhiPreset p);

}  // namespace normgate
