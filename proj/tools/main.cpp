// coverr: coverage-error predictions for Student-t and Norm confidence
// intervals, with exact-oracle and Monte Carlo verification.
//
// Subcommands: table, predict, quantile, simulate.  Output is CSV or TSV on
// stdout (six significant digits) and, with --out, a full-precision file.
// Exit codes: 0 success (simulate: all comparisons passed), 1 simulate ran
// but a comparison failed, 2 usage or configuration error, 3 output I/O
// error.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "coverr/distributions.hpp"
#include "coverr/edgeworth.hpp"
#include "coverr/mc.hpp"
#include "coverr/output_table.hpp"
#include "coverr/specfun.hpp"

namespace {

using namespace coverr;

constexpr int kExitOk = 0;
constexpr int kExitComparisonFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct CommonOut {
  std::string out_path;
  std::string format = "csv";
};

output::TableFormat parse_format(const std::string& f) {
  if (f == "csv") return output::TableFormat::Csv;
  if (f == "tsv") return output::TableFormat::Tsv;
  throw CLI::ValidationError("--format must be csv or tsv");
}

int emit(const output::OutputTable& table, const CommonOut& common) {
  output::TableFormat fmt = parse_format(common.format);
  std::fputs(output::render(table, fmt, /*full_precision=*/false).c_str(), stdout);
  if (!common.out_path.empty()) {
    std::ofstream f(common.out_path, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot open output path: " << common.out_path << "\n";
      return kExitIo;
    }
    f << output::render(table, fmt, /*full_precision=*/true);
    if (!f) {
      std::cerr << "error: write failed: " << common.out_path << "\n";
      return kExitIo;
    }
  }
  return kExitOk;
}

std::string render_entry(const edgeworth::ErrorEntry& e, int digits) {
  auto term = [digits](double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v < 0 ? -v : v);
    return std::string(buf);
  };
  std::string s = term(e.a_kappa) + "κ";  // kappa
  s += e.a_gamma2 < 0 ? " - " : " + ";
  s += term(e.a_gamma2) + "γ²";  // gamma^2
  if (e.a_0 != 0.0) {
    s += e.a_0 < 0 ? " - " : " + ";
    s += term(e.a_0);
  }
  return s;
}

// --- family flags shared by predict and simulate ---------------------------

struct FamilyFlags {
  std::string family;
  double mu = 0.0, sigma = 1.0;
  double rate = 1.0;
  int shape = 1;
  double a = 0.0, b = 1.0;
  double mlog = 0.0, slog = 1.0;

  void attach(CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("--family", family,
                                "sampling family: normal|exponential|gamma|uniform|lognormal");
    if (required) opt->required();
    cmd->add_option("--mu", mu, "normal mean");
    cmd->add_option("--sigma", sigma, "normal standard deviation");
    cmd->add_option("--rate", rate, "exponential/gamma rate");
    cmd->add_option("--shape", shape, "gamma integer shape");
    cmd->add_option("--a", a, "uniform lower endpoint");
    cmd->add_option("--b", b, "uniform upper endpoint");
    cmd->add_option("--mlog", mlog, "lognormal log-scale mean");
    cmd->add_option("--slog", slog, "lognormal log-scale sd");
  }

  distributions::DistributionSpec build() const {
    using distributions::DistributionSpec;
    if (family == "normal") return DistributionSpec::normal(mu, sigma);
    if (family == "exponential") return DistributionSpec::exponential(rate);
    if (family == "gamma") return DistributionSpec::gamma_int(shape, rate);
    if (family == "uniform") return DistributionSpec::uniform(a, b);
    if (family == "lognormal") return DistributionSpec::lognormal(mlog, slog);
    throw CLI::ValidationError("unknown --family: " + family);
  }
};

IntervalKind parse_kind(const std::string& k) {
  if (k == "t" || k == "studentt") return IntervalKind::StudentT;
  if (k == "norm") return IntervalKind::Norm;
  throw CLI::ValidationError("--kind must be t or norm");
}

// --- subcommand bodies ------------------------------------------------------

int cmd_table(double alpha, int digits, const CommonOut& common) {
  output::OutputTable t;
  t.header = {"kind", "a_kappa", "a_gamma2", "a_0", "entry"};
  for (IntervalKind kind : {IntervalKind::Norm, IntervalKind::StudentT}) {
    edgeworth::ErrorEntry e = edgeworth::entry_coefficients(Probability(alpha), kind);
    t.add_row({kind_name(kind), e.a_kappa, e.a_gamma2, e.a_0, render_entry(e, digits)});
  }
  return emit(t, common);
}

int cmd_predict(const std::optional<distributions::DistributionSpec>& spec,
                std::optional<double> gamma, std::optional<double> kappa,
                std::int64_t n, double alpha, IntervalKind kind,
                const CommonOut& common) {
  MomentProfile m = spec ? spec->moments : MomentProfile(*gamma, *kappa);
  Probability al(alpha);
  edgeworth::ErrorEntry e = edgeworth::entry_coefficients(al, kind);
  double err = edgeworth::two_sided_error(al, n, m, kind);
  double nominal = 1.0 - 2.0 * alpha;

  output::OutputTable t;
  t.header = {"source",  "gamma", "kappa",           "n",
              "alpha",   "kind",  "entry",           "predicted_error",
              "predicted_coverage"};
  t.add_row({spec ? spec->family_name() + "(" + spec->params_label() + ")"
                  : std::string("moments"),
             m.gamma, m.kappa, n, alpha, kind_name(kind), e.value(m), err,
             nominal + err});
  return emit(t, common);
}

int cmd_quantile(double nu, double p, int order, const CommonOut& common) {
  DegreesOfFreedom dof(nu);
  Probability prob(p);
  double exact = specfun::t_quantile(prob, dof);

  output::OutputTable t;
  t.header = {"nu", "p", "exact"};
  for (int k = 0; k <= order; ++k) t.header.push_back("order" + std::to_string(k));
  for (int k = 0; k <= order; ++k) t.header.push_back("abs_err" + std::to_string(k));
  std::vector<output::Cell> row = {nu, p, exact};
  std::vector<double> vals;
  for (int k = 0; k <= order; ++k) {
    double v = specfun::t_quantile_expansion(prob, dof, ExpansionOrder(k));
    vals.push_back(v);
    row.emplace_back(v);
  }
  for (int k = 0; k <= order; ++k) {
    double e = vals[static_cast<std::size_t>(k)] - exact;
    row.emplace_back(e < 0 ? -e : e);
  }
  t.add_row(std::move(row));
  return emit(t, common);
}

int cmd_simulate(const mc::SimulationConfig& cfg,
                 const distributions::DistributionSpec& spec,
                 const CommonOut& common) {
  std::vector<mc::CoverageResult> results = mc::run(cfg);

  output::OutputTable t;
  t.header = {"family",      "params", "n",  "alpha", "kind",
              "reps",        "seed",   "coverage", "se", "scaled_error",
              "scaled_se",   "predicted_scaled_error", "z_score", "pass"};
  bool all_pass = true;
  for (const mc::CoverageResult& r : results) {
    mc::Verdict v = mc::compare(r);
    all_pass = all_pass && v.pass;
    t.add_row({spec.family_name(), spec.params_label(), cfg.n, cfg.alpha.value(),
               kind_name(r.kind), r.reps, cfg.master_seed, r.coverage, r.se,
               r.scaled_error, r.scaled_se, r.predicted_scaled_error, v.z_score,
               v.pass});
  }
  int rc = emit(t, common);
  if (rc != kExitOk) return rc;
  return all_pass ? kExitOk : kExitComparisonFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coverage-error analysis for Student-t and Norm confidence intervals"};
  app.require_subcommand(1);

  // table
  auto* table = app.add_subcommand("table", "entry coefficients for both interval kinds");
  double t_alpha = 0.025;
  int t_digits = 2;
  CommonOut t_common;
  table->add_option("--alpha", t_alpha, "one-sided level in (0,0.5)")->required();
  table->add_option("--digits", t_digits, "rounding digits for the rendered entry")
      ->check(CLI::Range(0, 12));
  table->add_option("--out", t_common.out_path, "write full-precision file");
  table->add_option("--format", t_common.format, "csv|tsv");

  // predict
  auto* predict = app.add_subcommand("predict", "predicted coverage error");
  FamilyFlags p_fam;
  p_fam.attach(predict, /*required=*/false);
  std::optional<double> p_gamma, p_kappa;
  predict->add_option("--gamma", p_gamma, "skewness (with --kappa, instead of --family)");
  predict->add_option("--kappa", p_kappa, "excess kurtosis");
  std::int64_t p_n = 0;
  double p_alpha = 0.0;
  std::string p_kind;
  CommonOut p_common;
  predict->add_option("--n", p_n, "sample size")->required();
  predict->add_option("--alpha", p_alpha, "one-sided level in (0,0.5)")->required();
  predict->add_option("--kind", p_kind, "interval kind: t|norm")->required();
  predict->add_option("--out", p_common.out_path, "write full-precision file");
  predict->add_option("--format", p_common.format, "csv|tsv");

  // quantile
  auto* quantile = app.add_subcommand("quantile", "t quantile vs its expansion");
  double q_nu = 0.0, q_p = 0.0;
  int q_order = 4;
  CommonOut q_common;
  quantile->add_option("--nu", q_nu, "degrees of freedom (>= 1)")->required();
  quantile->add_option("--p", q_p, "probability in (0,1)")->required();
  quantile->add_option("--order", q_order, "max expansion order (0..4)")
      ->check(CLI::Range(0, 4));
  quantile->add_option("--out", q_common.out_path, "write full-precision file");
  quantile->add_option("--format", q_common.format, "csv|tsv");

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo coverage measurement");
  FamilyFlags s_fam;
  s_fam.attach(simulate, /*required=*/true);
  std::int64_t s_n = 0, s_reps = 0;
  double s_alpha = 0.0;
  std::uint64_t s_seed = 0;
  int s_workers = static_cast<int>(std::thread::hardware_concurrency());
  std::string s_kind = "both";
  CommonOut s_common;
  simulate->add_option("--n", s_n, "sample size per replicate")->required();
  simulate->add_option("--alpha", s_alpha, "one-sided level in (0,0.5)")->required();
  simulate->add_option("--reps", s_reps, "replicates (>= 1000)")->required();
  simulate->add_option("--seed", s_seed, "master seed (required for reproducibility)")
      ->required();
  simulate->add_option("--workers", s_workers, "worker threads (result-invariant)");
  simulate->add_option("--kind", s_kind, "t|norm|both");
  simulate->add_option("--out", s_common.out_path, "write full-precision CSV");
  simulate->add_option("--format", s_common.format, "csv|tsv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (table->parsed()) return cmd_table(t_alpha, t_digits, t_common);

    if (predict->parsed()) {
      bool has_family = !p_fam.family.empty();
      bool has_moments = p_gamma.has_value() || p_kappa.has_value();
      if (has_family == has_moments) {
        std::cerr << "error: give exactly one moment source: --family ... or "
                     "--gamma/--kappa\n";
        return kExitUsage;
      }
      if (has_moments && (!p_gamma.has_value() || !p_kappa.has_value())) {
        std::cerr << "error: --gamma and --kappa must be given together\n";
        return kExitUsage;
      }
      std::optional<distributions::DistributionSpec> spec;
      if (has_family) spec = p_fam.build();
      return cmd_predict(spec, p_gamma, p_kappa, p_n, p_alpha, parse_kind(p_kind),
                         p_common);
    }

    if (quantile->parsed()) return cmd_quantile(q_nu, q_p, q_order, q_common);

    if (simulate->parsed()) {
      distributions::DistributionSpec spec = s_fam.build();
      mc::SimulationConfig cfg{spec,
                               s_n,
                               Probability(s_alpha),
                               s_reps,
                               s_seed,
                               s_workers < 1 ? 1 : s_workers,
                               s_kind == "both" || s_kind == "t",
                               s_kind == "both" || s_kind == "norm"};
      if (s_kind != "both" && s_kind != "t" && s_kind != "norm")
        throw CLI::ValidationError("--kind must be t, norm or both");
      cfg.validate();
      return cmd_simulate(cfg, spec, s_common);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
