#include "normgate/phi.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "normgate/errors.hpp"

namespace normgate {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double preset_value(PhiPreset p, double t) {
  switch (p) {
    case PhiPreset::Sqrt:
      return std::sqrt(t);
    case PhiPreset::Atan:
      return std::atan(t);
    case PhiPreset::Expm1:
      return std::expm1(t);
    case PhiPreset::T4Log1p:
      return t * t * t * t * std::log1p(t);
  }
  return 0.0;
}

double table_value(const TablePhi& tab, double t) {
  const double eps = 1e-12 * std::max(1.0, std::abs(tab.t.back()));
  if (t < tab.t.front() - eps || t > tab.t.back() + eps)
    throw DomainError("table phi: t = " + std::to_string(t) + " outside the sampled range");
  if (t <= tab.t.front()) return tab.value.front();
  if (t >= tab.t.back()) return tab.value.back();
  const auto it = std::upper_bound(tab.t.begin(), tab.t.end(), t);
  const std::size_t j = static_cast<std::size_t>(it - tab.t.begin());
  const double t0 = tab.t[j - 1], t1 = tab.t[j];
  const double w = (t - t0) / (t1 - t0);
  return (1.0 - w) * tab.value[j - 1] + w * tab.value[j];
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

double parse_double(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw InvalidInput("cannot parse number '" + std::string(s) + "'");
  return v;
}

std::vector<double> parse_list(std::string_view s) {
  std::vector<double> out;
  while (true) {
    const auto comma = s.find(',');
    out.push_back(parse_double(s.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

PhiFunction PhiFunction::power(double k, double d, double alpha) {
  for (double v : {k, d, alpha})
    if (!std::isfinite(v) || v < 0.0) throw InvalidInput("power phi needs finite k, d, alpha >= 0");
  return PhiFunction(PowerPhi{k, d, alpha});
}

PhiFunction PhiFunction::log(double alpha) {
  if (!std::isfinite(alpha) || alpha <= 0.0) throw InvalidInput("log phi needs alpha > 0");
  return PhiFunction(LogPhi{alpha});
}

PhiFunction PhiFunction::table(std::vector<std::pair<double, double>> samples) {
  if (samples.size() < 2) throw InvalidInput("table phi needs at least two samples");
  TablePhi tab;
  for (const auto& [t, v] : samples) {
    if (!std::isfinite(t) || !std::isfinite(v)) throw InvalidInput("table phi: non-finite sample");
    if (!tab.t.empty() && !(t > tab.t.back()))
      throw InvalidInput("table phi: samples must be strictly ascending in t");
    tab.t.push_back(t);
    tab.value.push_back(v);
  }
  if (tab.t.front() < 0.0) throw InvalidInput("table phi: negative t sample");
  return PhiFunction(std::move(tab));
}

PhiFunction PhiFunction::preset(PhiPreset which) { return PhiFunction(which); }

PhiFunction PhiFunction::preset(std::string_view name) {
  for (PhiPreset p : {PhiPreset::Sqrt, PhiPreset::Atan, PhiPreset::Expm1, PhiPreset::T4Log1p})
    if (to_string(p) == name) return preset(p);
  throw InvalidInput("unknown phi preset '" + std::string(name) + "'");
}

double PhiFunction::operator()(double t) const {
  if (!(t >= 0.0)) throw DomainError("phi is defined on t >= 0 only");
  return std::visit(overloaded{
                        [t](const PowerPhi& p) { return p.k + p.d * std::pow(t, p.alpha); },
                        [t](const LogPhi& p) { return std::log1p(p.alpha * t); },
                        [t](const TablePhi& p) { return table_value(p, t); },
                        [t](PhiPreset p) { return preset_value(p, t); },
                    },
                    kind_);
}

double PhiFunction::derivative(double t) const {
  if (!(t > 0.0)) throw DomainError("phi derivative is taken at t > 0 only");
  if (const auto* p = std::get_if<PowerPhi>(&kind_)) {
    if (p->d == 0.0 || p->alpha == 0.0) return 0.0;
    return p->d * p->alpha * std::pow(t, p->alpha - 1.0);
  }
  if (const auto* p = std::get_if<LogPhi>(&kind_)) return p->alpha / (1.0 + p->alpha * t);

  const double h = 1e-6 * std::max(1.0, t);
  const double hi_limit = domain_max();
  double lo = t - h;
  double hi = t + h;
  if (lo < domain_min()) lo = t;
  if (hi > hi_limit) hi = t;
  if (!(hi > lo)) throw DomainError("phi derivative: no room for a difference quotient");
  return ((*this)(hi) - (*this)(lo)) / (hi - lo);
}

double PhiFunction::domain_min() const {
  if (const auto* p = std::get_if<TablePhi>(&kind_)) return p->t.front();
  return 0.0;
}

double PhiFunction::domain_max() const {
  if (const auto* p = std::get_if<TablePhi>(&kind_)) return p->t.back();
  return std::numeric_limits<double>::infinity();
}

std::string PhiFunction::describe() const {
  return std::visit(
      overloaded{
          [](const PowerPhi& p) { return "power:" + fmt(p.k) + "," + fmt(p.d) + "," + fmt(p.alpha); },
          [](const LogPhi& p) { return "log:" + fmt(p.alpha); },
          [](const TablePhi& p) {
            return "table:" + std::to_string(p.t.size()) + " samples on [" + fmt(p.t.front()) +
                   "," + fmt(p.t.back()) + "]";
          },
          [](PhiPreset p) { return "preset:" + to_string(p); },
      },
      kind_);
}

std::string to_string(PhiPreset p) {
  switch (p) {
    case PhiPreset::Sqrt:
      return "sqrt";
    case PhiPreset::Atan:
      return "atan";
    case PhiPreset::Expm1:
      return "expm1";
    case PhiPreset::T4Log1p:
      return "t4log1p";
  }
  return "?";
}

PhiFunction load_phi_table(std::istream& in) {
  std::string line;
  bool header_seen = false;
  std::vector<std::pair<double, double>> samples;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos)
      throw InvalidInput("table CSV line " + std::to_string(lineno) + ": expected two columns");
    if (!header_seen) {
      std::string first = line.substr(0, comma);
      first.erase(0, first.find_first_not_of(" \t"));
      first.erase(first.find_last_not_of(" \t") + 1);
      if (first != "t") throw InvalidInput("table CSV header must start with column 't'");
      header_seen = true;
      continue;
    }
    try {
      samples.emplace_back(parse_double(std::string_view(line).substr(0, comma)),
                           parse_double(std::string_view(line).substr(comma + 1)));
    } catch (const InvalidInput& e) {
      throw InvalidInput("table CSV line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!header_seen) throw InvalidInput("table CSV is empty");
  return PhiFunction::table(std::move(samples));
}

PhiFunction load_phi_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open table CSV '" + path + "'");
  return load_phi_table(in);
}

PhiFunction parse_phi_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos)
    throw InvalidInput("phi spec must look like kind:args, got '" + std::string(spec) + "'");
  const std::string_view kind = spec.substr(0, colon);
  const std::string_view args = spec.substr(colon + 1);
  if (kind == "power") {
    const auto v = parse_list(args);
    if (v.size() != 3) throw InvalidInput("power phi takes k,d,alpha");
    return PhiFunction::power(v[0], v[1], v[2]);
  }
  if (kind == "log") {
    const auto v = parse_list(args);
    if (v.size() != 1) throw InvalidInput("log phi takes a single alpha");
    return PhiFunction::log(v[0]);
  }
  if (kind == "table") return load_phi_table_file(std::string(args));
  if (kind == "preset") return PhiFunction::preset(args);
  throw InvalidInput("unknown phi kind '" + std::string(kind) + "'");
}

}  // namespace normgate
