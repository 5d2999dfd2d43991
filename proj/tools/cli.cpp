#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "normgate/counterex.hpp"
#include "normgate/curves.hpp"
#include "normgate/errors.hpp"
#include "normgate/format.hpp"
#include "normgate/oracle.hpp"
#include "normgate/phicrit.hpp"
#include "normgate/reproduce.hpp"
#include "normgate/specop.hpp"

namespace normgate::cli {

namespace {

struct ParamFlags {
  std::string a;
  std::string b;
  std::string c;

  bool given() const { return !a.empty() || !b.empty() || !c.empty(); }
  ParamSet resolve(const ParamSet& fallback) const {
    return {a.empty() ? fallback.a : parse_complex(a), b.empty() ? fallback.b : parse_complex(b),
            c.empty() ? fallback.c : parse_complex(c)};
  }
};

void add_param_flags(CLI::App* cmd, ParamFlags& flags) {
  cmd->add_option("--a", flags.a, "complex a, e.g. -2 or 1+0.5i");
  cmd->add_option("--b", flags.b, "complex b");
  cmd->add_option("--c", flags.c, "complex c");
}

Bracket parse_range(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw InvalidInput("range must be lo,hi");
  return Bracket(parse_real(text.substr(0, comma)), parse_real(text.substr(comma + 1)));
}

std::string params_line(const ParamSet& p) {
  return "a=" + format_complex(p.a) + " b=" + format_complex(p.b) + " c=" + format_complex(p.c);
}

void print_rows(std::ostream& out, const ReproSection& s) {
  out << "== " << s.name << " ==\n";
  for (const auto& row : s.rows)
    out << (row.pass ? "PASS" : "FAIL") << "  " << row.name << "  expected " << row.expected
        << "  observed " << format_double(row.observed) << '\n';
}

// --- curve ------------------------------------------------------------------

struct CurveArgs {
  ParamFlags params;
  std::string phi;
  std::string range = "0,1";
  std::size_t n = 1001;
  std::string out_path;
};

int cmd_curve(const CurveArgs& args, std::ostream& out) {
  const ParamSet p = args.params.resolve({1.0, 1.0, 1.0});
  const PhiFunction phi = parse_phi_spec(args.phi);
  const auto samples = sample_curve(p, phi, parse_range(args.range), args.n);
  if (args.out_path.empty()) {
    write_curve_csv(out, samples);
  } else {
    std::ofstream file(args.out_path);
    if (!file) throw InvalidInput("cannot write '" + args.out_path + "'");
    write_curve_csv(file, samples);
  }
  return kOk;
}

// --- certify ----------------------------------------------------------------

struct CertifyArgs {
  ParamFlags params;
  std::string phi;
  std::string range = "0,10";
  std::size_t n = 4096;
};

int report_certificate(std::ostream& out, CertStatus status, Justification why,
                       std::optional<double> point, int code) {
  out << "status: " << to_string(status) << '\n';
  out << "justification: " << to_string(why) << '\n';
  if (point) out << "violation_point: " << format_double(*point) << '\n';
  return code;
}

int cmd_certify(const CertifyArgs& args, std::ostream& out) {
  const PhiFunction phi = parse_phi_spec(args.phi);
  const Bracket range = parse_range(args.range);
  out << "phi: " << phi.describe() << '\n';
  out << "grid: " << args.n << " points on [" << format_double(range.lo) << ","
      << format_double(range.hi) << "]\n";
  out << "increase_tolerance: 1e-13 relative; condition_b_noise_band: 1e-6 relative\n";

  std::optional<Certificate> cond_b;
  try {
    cond_b = check_condition_b(phi, range, args.n);
  } catch (const PreconditionError& e) {
    out << "condition_b: not applicable (" << e.what() << ")\n";
  }
  if (cond_b && cond_b->status == CertStatus::CertifiedMonotone && is_symbolic(cond_b->justification))
    return report_certificate(out, cond_b->status, cond_b->justification, std::nullopt, kOk);

  if (args.params.given()) {
    const ParamSet p = args.params.resolve({0.0, 0.0, 0.0});
    out << "params: " << params_line(p) << '\n';
    if (param_certificate(p) && strictly_increasing_on_grid(phi, range, args.n)) {
      if (cond_b && cond_b->status == CertStatus::CertifiedNotCondB)
        out << "note: condition (b) fails at t = " << format_double(*cond_b->violation_point)
            << "; monotonicity here rests on the parameters\n";
      return report_certificate(out, CertStatus::CertifiedMonotone, Justification::Cor27Params,
                                std::nullopt, kOk);
    }
  }
  if (!cond_b) return report_certificate(out, CertStatus::Inconclusive, Justification::NumericOnly,
                                         std::nullopt, kInconclusive);
  switch (cond_b->status) {
    case CertStatus::CertifiedMonotone:
      return report_certificate(out, cond_b->status, cond_b->justification, std::nullopt, kOk);
    case CertStatus::CertifiedNotCondB:
      return report_certificate(out, cond_b->status, cond_b->justification, cond_b->violation_point,
                                kNotCondB);
    case CertStatus::Inconclusive:
      break;
  }
  return report_certificate(out, CertStatus::Inconclusive, cond_b->justification, std::nullopt,
                            kInconclusive);
}

// --- counterexample ---------------------------------------------------------

struct CounterexampleArgs {
  std::string phi;
  double t0 = 1.0;
  std::optional<double> margin;
};

int cmd_counterexample(const CounterexampleArgs& args, std::ostream& out) {
  const PhiFunction phi = parse_phi_spec(args.phi);
  const double margin = args.margin.value_or(default_margin(args.t0));
  const CounterexampleResult r = construct_counterexample(phi, args.t0, margin);
  out << "phi: " << phi.describe() << '\n';
  out << "t0: " << format_double(r.t0) << '\n';
  out << "margin: " << format_double(r.margin) << '\n';
  out << "params: " << params_line(r.params) << '\n';
  out << "d1: " << format_double(r.d1) << '\n';
  out << "d2: " << format_double(r.d2) << '\n';
  out << "slope_gap: " << format_double(r.slope_gap) << '\n';
  out << "witness_t: " << format_double(r.witness.t_lo) << '\n';
  out << "norm_at_witness: " << format_double(r.witness.f_lo) << '\n';
  out << "norm_at_t0: " << format_double(r.witness.f_t0) << '\n';
  out << "decrease: " << format_double(r.witness.f_lo - r.witness.f_t0) << " (> 1e-12)\n";
  return kOk;
}

// --- analyze ----------------------------------------------------------------

struct AnalyzeArgs {
  ParamFlags params;
  std::string phi = "power:0,1,5";
  std::string spec_path;
  std::string preset;
  std::size_t n_max = kDefaultBergmanNMax;
  double d = 1.0;
  double t1 = 0.96;
  double t2 = 0.98;
};

int cmd_analyze(const AnalyzeArgs& args, std::ostream& out) {
  if (args.spec_path.empty() == args.preset.empty())
    throw InvalidInput("analyze needs exactly one of --spec or --preset");
  const SpectrumSpec spec = [&] {
    if (!args.spec_path.empty()) return load_spectrum_json_file(args.spec_path);
    if (args.preset == "bergman") return preset_bergman(args.n_max);
    if (args.preset == "mult-op") return preset_mult_op(args.d);
    if (args.preset == "ex313") return preset_ex313(args.t1, args.t2);
    throw InvalidInput("unknown preset '" + args.preset + "' (bergman, mult-op, ex313)");
  }();
  const ParamSet p = args.params.resolve({-2.0, 2.0, 1.0});
  const PhiFunction phi = parse_phi_spec(args.phi);

  out << "params: " << params_line(p) << '\n';
  out << "phi: " << phi.describe() << '\n';
  out << "norm_A: " << format_double(spec.sup()) << '\n';
  out << "attains_base: " << (attains_base(spec) ? "true" : "false") << '\n';
  const OmegaSet omega = compute_omega(spec, p, phi);
  out << "norm_T: " << format_double(omega.norm) << '\n';
  out << "omega:";
  for (double w : omega.points) out << ' ' << format_double(w);
  out << '\n';
  out << "omega_singleton: " << (omega.is_singleton ? "true" : "false") << '\n';
  out << "omega_tol: " << format_double(omega.tol) << " relative, cluster_radius "
      << format_double(omega.cluster_radius) << '\n';
  const AttainmentVerdict v = decide_attainment(spec, p, phi);
  out << "verdict: " << to_string(v.status) << '\n';
  out << "certificate: " << to_string(v.certificate) << '\n';
  if (v.witness) out << "witness: " << format_double(*v.witness) << '\n';
  out << "numeric: " << (v.numeric ? "true" : "false") << '\n';
  switch (v.status) {
    case AttainStatus::Attains:
      return kOk;
    case AttainStatus::NotAttains:
      return kNotAttains;
    case AttainStatus::Unknown:
      break;
  }
  return kUnknown;
}

// --- reproduce / oracle -----------------------------------------------------

int cmd_reproduce(const std::string& which, std::ostream& out) {
  bool ok = true;
  for (const auto& section : reproduce(which)) {
    print_rows(out, section);
    ok = ok && section.all_pass();
  }
  out << (ok ? "ALL PASS" : "FAILURES PRESENT") << '\n';
  return ok ? kOk : kRuntimeError;
}

struct OracleArgs {
  std::optional<std::uint64_t> seed;
  std::size_t trials = 100;
  std::size_t max_dim = 16;
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("NORMGATE_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw InvalidInput("NORMGATE_SEED must be an unsigned integer");
    }
  }
  return 42;
}

int cmd_oracle(const OracleArgs& args, std::ostream& out) {
  const std::uint64_t seed = args.seed.value_or(default_seed());
  const OracleBatchReport r = run_oracle_battery(seed, args.trials, args.max_dim);
  out << "seed: " << seed << '\n';
  out << "trials: " << r.trials << '\n';
  out << "max_dim: " << args.max_dim << '\n';
  out << "tolerance: " << format_double(r.tolerance) << '\n';
  out << "max_dev_T_vs_Ttilde: " << format_double(r.max_t_vs_ttilde) << '\n';
  out << "max_dev_constant_block: " << format_double(r.max_constant_block) << '\n';
  out << "max_dev_block_norm: " << format_double(r.max_block_norm) << '\n';
  out << "max_dev_scalar: " << format_double(r.max_scalar) << '\n';
  out << (r.all_within() ? "PASS" : "FAIL") << '\n';
  return r.all_within() ? kOk : kRuntimeError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Norm curves of [[a, t], [ct, b phi(t)]] and norm attainment of block operators",
               "normgate"};
  app.require_subcommand(1);

  CurveArgs curve;
  auto* c_curve = app.add_subcommand("curve", "emit the norm curve as t,norm CSV");
  add_param_flags(c_curve, curve.params);
  c_curve->add_option("--phi", curve.phi, "power:k,d,alpha | log:alpha | table:path.csv | preset:name")
      ->required();
  c_curve->add_option("--range", curve.range, "lo,hi");
  c_curve->add_option("--n", curve.n, "number of samples")->check(CLI::Range(std::size_t{2}, std::size_t{100000000}));
  c_curve->add_option("--out", curve.out_path, "output file (default stdout)");

  CertifyArgs certify;
  auto* c_certify = app.add_subcommand("certify", "certify monotonicity of the norm curve");
  add_param_flags(c_certify, certify.params);
  c_certify->add_option("--phi", certify.phi, "phi specification")->required();
  c_certify->add_option("--range", certify.range, "lo,hi grid range for numeric checks");
  c_certify->add_option("--n", certify.n, "grid size")->check(CLI::Range(std::size_t{2}, std::size_t{100000000}));

  CounterexampleArgs cex;
  auto* c_cex = app.add_subcommand("counterexample", "construct parameters with a non-monotone curve");
  c_cex->add_option("--phi", cex.phi, "phi specification")->required();
  c_cex->add_option("--t0", cex.t0, "point where condition (b) fails")->required();
  c_cex->add_option("--margin", cex.margin, "any number > 4 t0 (default 4 t0 + 1)");

  AnalyzeArgs analyze;
  auto* c_analyze = app.add_subcommand("analyze", "decide norm attainment from spectral data");
  add_param_flags(c_analyze, analyze.params);
  c_analyze->add_option("--phi", analyze.phi, "phi specification (default power:0,1,5)");
  c_analyze->add_option("--spec", analyze.spec_path, "spectrum JSON file");
  c_analyze->add_option("--preset", analyze.preset, "bergman | mult-op | ex313");
  c_analyze->add_option("--n-max", analyze.n_max, "bergman truncation index");
  c_analyze->add_option("--d", analyze.d, "mult-op spectrum [0, d]");
  c_analyze->add_option("--t1", analyze.t1, "ex313 t1");
  c_analyze->add_option("--t2", analyze.t2, "ex313 t2");

  std::string which = "all";
  auto* c_repro = app.add_subcommand("reproduce", "re-run the worked examples");
  c_repro->add_option("which", which, "ex24 | ex311 | ex312 | ex313 | all")
      ->check(CLI::IsMember({"ex24", "ex311", "ex312", "ex313", "all"}));

  OracleArgs oracle;
  auto* c_oracle = app.add_subcommand("oracle", "randomized brute-force validation battery");
  c_oracle->add_option("--seed", oracle.seed, "RNG seed (default NORMGATE_SEED or 42)");
  c_oracle->add_option("--trials", oracle.trials, "number of random trials");
  c_oracle->add_option("--max-dim", oracle.max_dim, "largest matrix dimension")
      ->check(CLI::Range(std::size_t{1}, kOracleMaxDim));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*c_curve) return cmd_curve(curve, out);
    if (*c_certify) return cmd_certify(certify, out);
    if (*c_cex) return cmd_counterexample(cex, out);
    if (*c_analyze) return cmd_analyze(analyze, out);
    if (*c_repro) return cmd_reproduce(which, out);
    if (*c_oracle) return cmd_oracle(oracle, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kRuntimeError;
  }
  return kUsageError;
}

}  // namespace normgate::cli
