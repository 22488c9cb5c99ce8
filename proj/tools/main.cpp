// sobocirc: command-line surface of the toolkit.  Every subcommand runs a
// deterministic batch computation and emits a machine-readable report:
// JSON ({command, config, results[], assertions[]}, each numeric result with
// its tolerance) or CSV (plot-ready rows; traces use the fixed columns
// step, alpha_n, F, min_v, max_vinv2, constraint).
//
// Exit status: 0 when all assertions pass, 1 when a property fails (the
// failing assertion is named on stderr), 2 on usage errors.
//
// Every flag can also be set through an environment variable with the
// SOBOCIRC_ prefix (e.g. SOBOCIRC_N, SOBOCIRC_SCHEME, SOBOCIRC_FORMAT).

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sobocirc/circle.hpp"
#include "sobocirc/closed_forms.hpp"
#include "sobocirc/functionals.hpp"
#include "sobocirc/iteration.hpp"
#include "sobocirc/oracle.hpp"
#include "sobocirc/symmetries.hpp"

using json = nlohmann::ordered_json;
using namespace sobocirc;

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct RunConfig {
  int n = 512;
  std::string scheme = "spectral";
  std::uint64_t seed = 1;
  std::string format = "json";
  std::string out;

  // Profile selection shared by the profile-driven subcommands.
  std::string profile = "cosine-perturbation";
  double alpha = 0.5;
  double theta0 = 0.0;
  double amplitude = 0.1;
  int harmonic = 1;
  std::string csv_in;

  DiffScheme diff() const {
    return scheme == "central" ? DiffScheme::Central : DiffScheme::Spectral;
  }
};

// Collects results and assertions; renders as JSON or name,value,tol CSV.
struct Report {
  std::string command;
  json config = json::object();
  json results = json::array();
  json assertions = json::array();
  std::vector<std::string> csv_rows;  // overrides the name,value,tol table
  std::string csv_header;
  int failed = 0;

  void result(const std::string& name, double value, double tol) {
    results.push_back({{"name", name}, {"value", value}, {"tolerance", tol}});
  }
  void label(const std::string& name, const std::string& value) {
    results.push_back({{"name", name}, {"value", value}});
  }
  void check(const std::string& name, bool passed, const std::string& detail) {
    assertions.push_back(
        {{"name", name}, {"passed", passed}, {"detail", detail}});
    if (!passed) {
      ++failed;
      std::cerr << "assertion failed: " << name << " (" << detail << ")\n";
    }
  }

  std::string render(const RunConfig& cfg) const {
    if (cfg.format == "csv") {
      std::ostringstream os;
      if (!csv_rows.empty()) {
        os << csv_header << "\n";
        for (const auto& r : csv_rows) os << r << "\n";
      } else {
        os << "name,value,tolerance\n";
        for (const auto& r : results)
          if (r["value"].is_number())
            os << r["name"].get<std::string>() << ","
               << fmt(r["value"].get<double>()) << ","
               << fmt(r["tolerance"].get<double>()) << "\n";
          else
            os << r["name"].get<std::string>() << ","
               << r["value"].get<std::string>() << ",\n";
      }
      return os.str();
    }
    json j;
    j["command"] = command;
    j["config"] = config;
    j["results"] = results;
    j["assertions"] = assertions;
    return j.dump(2) + "\n";
  }
};

json base_config(const RunConfig& cfg) {
  return {{"n", cfg.n},
          {"scheme", cfg.scheme},
          {"seed", cfg.seed},
          {"format", cfg.format}};
}

CircleFunction load_profile(const RunConfig& cfg) {
  if (!cfg.csv_in.empty()) {
    std::ifstream in(cfg.csv_in);
    if (!in) throw CLI::ValidationError("--csv", "cannot open " + cfg.csv_in);
    std::vector<double> samples;
    double x;
    while (in >> x) samples.push_back(x);
    CircleFunction v{std::move(samples), Role::V, Interp::Cubic};
    v.validate();
    return v;
  }
  if (cfg.profile == "constant")
    return sample_circle(cfg.n, [](double) { return 1.0; }, Role::V);
  if (cfg.profile == "nu") {
    // The equality family: v^-2 equals the conformal factor.
    const double a = cfg.alpha, t0 = cfg.theta0;
    const double r = std::sqrt(1 - a * a);
    return sample_circle(
        cfg.n,
        [a, t0, r](double t) {
          return std::sqrt((1 + a * std::cos(t - t0)) / r);
        },
        Role::V);
  }
  if (cfg.profile == "cosine-perturbation") {
    const double a = cfg.amplitude;
    const int k = cfg.harmonic;
    const double t0 = cfg.theta0;
    return sample_circle(
        cfg.n, [a, k, t0](double t) { return 1 + a * std::cos(k * (t - t0)); },
        Role::V);
  }
  throw CLI::ValidationError("--profile", "unknown profile " + cfg.profile);
}

void emit(const Report& rep, const RunConfig& cfg) {
  const std::string text = rep.render(cfg);
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(cfg.out, std::ios::binary);
    out << text;
  }
}

void add_common_flags(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--n", cfg.n, "grid size (even, >= 8)")
      ->envname("SOBOCIRC_N");
  sub->add_option("--scheme", cfg.scheme, "derivative scheme")
      ->check(CLI::IsMember({"spectral", "central"}))
      ->envname("SOBOCIRC_SCHEME");
  sub->add_option("--seed", cfg.seed, "corpus seed")->envname("SOBOCIRC_SEED");
  sub->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->envname("SOBOCIRC_FORMAT");
  sub->add_option("--out", cfg.out, "write the report to PATH")
      ->envname("SOBOCIRC_OUT");
}

void add_profile_flags(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--profile", cfg.profile,
                  "constant | nu | cosine-perturbation")
      ->check(CLI::IsMember({"constant", "nu", "cosine-perturbation"}));
  sub->add_option("--alpha", cfg.alpha, "boost strength of the nu profile")
      ->check(CLI::Range(-0.999, 0.999));
  sub->add_option("--theta0", cfg.theta0, "profile center");
  sub->add_option("--amplitude", cfg.amplitude, "perturbation amplitude");
  sub->add_option("--harmonic", cfg.harmonic, "perturbation harmonic")
      ->check(CLI::PositiveNumber);
  sub->add_option("--csv", cfg.csv_in, "read v samples from a CSV file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "sobocirc: numerical checks of the sharp lower bound for\n"
      "F[v] = int [4 v'^2 - v^2] on the circle.  Flags may be supplied via\n"
      "environment variables with the SOBOCIRC_ prefix."};
  app.require_subcommand(1);

  RunConfig cfg;

  // --- check ---------------------------------------------------------------
  auto* c_check = app.add_subcommand(
      "check", "inequality report on a profile or a seeded corpus");
  add_common_flags(c_check, cfg);
  add_profile_flags(c_check, cfg);
  int corpus_count = 0;
  double tol_slack = 1e-6;
  c_check->add_option("--corpus", corpus_count,
                      "check COUNT corpus members instead of one profile");
  c_check->add_option("--tol-slack", tol_slack, "slack floor (negated)");

  // --- iterate ---------------------------------------------------------------
  auto* c_iter = app.add_subcommand(
      "iterate", "competing-symmetries iteration with a per-step audit");
  add_common_flags(c_iter, cfg);
  add_profile_flags(c_iter, cfg);
  int max_steps = 200;
  double flat_tol = 1e-3, tol_step = 1e-10, tol_budget = 1e-6;
  c_iter->add_option("--max-steps", max_steps, "step cap");
  c_iter->add_option("--flat-tol", flat_tol, "tail-flatness stopping level");
  c_iter->add_option("--tol-step", tol_step, "monotonicity slip per step");
  c_iter->add_option("--tol-budget", tol_budget, "boost error budget");

  // --- critical --------------------------------------------------------------
  auto* c_crit = app.add_subcommand(
      "critical", "closed-form stationary family: value and residual");
  add_common_flags(c_crit, cfg);
  double crit_alpha = 0.0, crit_theta0 = 0.0;
  double tol_value = 1e-8, tol_residual = 1e-7;
  c_crit->add_option("--alpha", crit_alpha)->check(CLI::Range(-0.999, 0.999));
  c_crit->add_option("--theta0", crit_theta0);
  c_crit->add_option("--tol-value", tol_value, "|F + 2 pi| cap");
  c_crit->add_option("--tol-residual", tol_residual, "stationarity cap");

  // --- spectrum --------------------------------------------------------------
  auto* c_spec = app.add_subcommand(
      "spectrum", "second-variation eigenvalues 8 m (m + 2)");
  add_common_flags(c_spec, cfg);
  int max_m = 3;
  double tol_kappa = 1e-9;
  c_spec->add_option("--max-m", max_m)->check(CLI::NonNegativeNumber);
  c_spec->add_option("--tol-kappa", tol_kappa, "eigenvalue mismatch cap");

  // --- dirichlet -------------------------------------------------------------
  auto* c_dir = app.add_subcommand(
      "dirichlet", "interval minimizers with prescribed min/max/mass");
  add_common_flags(c_dir, cfg);
  double dm = 0.5, dM = 1.0, dc = kTwoPi;
  int sweep = 0;
  double tol_mass = 1e-6;
  c_dir->add_option("--m", dm, "prescribed minimum")->check(CLI::PositiveNumber);
  c_dir->add_option("--M", dM, "prescribed maximum")->check(CLI::PositiveNumber);
  c_dir->add_option("--c", dc, "prescribed integral of v^-2");
  c_dir->add_option("--sweep", sweep, "emit an N-point (c, E, lambda) series");
  c_dir->add_option("--tol-mass", tol_mass, "mass reproduction cap");

  // --- oracle ----------------------------------------------------------------
  auto* c_oracle = app.add_subcommand(
      "oracle", "projected gradient descent to the sharp value");
  add_common_flags(c_oracle, cfg);
  add_profile_flags(c_oracle, cfg);
  double tol_oracle = 1e-3;
  c_oracle->add_option("--tol-value", tol_oracle, "|F + 2 pi| cap");

  // --- stereo ----------------------------------------------------------------
  auto* c_stereo = app.add_subcommand(
      "stereo", "transplant the bound to the line through x = cot(theta/2)");
  add_common_flags(c_stereo, cfg);
  add_profile_flags(c_stereo, cfg);
  std::string variant = "a";
  double tol_stereo = 1e-6, window = 1e6;
  c_stereo->add_option("--variant", variant)
      ->check(CLI::IsMember({"a", "b"}));
  c_stereo->add_option("--window", window, "half-width of the line window");
  auto* stereo_tol_opt = c_stereo->add_option(
      "--tol-residual", tol_stereo,
      "transplant residual cap (default 1e-6; 1e-5 for variant b, whose "
      "window truncation contributes O(1/window) tails)");

  // --- interval --------------------------------------------------------------
  auto* c_interval = app.add_subcommand(
      "interval", "the bound on [0, l] via even reflection");
  add_common_flags(c_interval, cfg);
  double length = kPi, int_alpha = 0.5;
  double tol_islack = 1e-6;
  std::string interval_csv;
  c_interval->add_option("--l", length, "interval length")
      ->check(CLI::PositiveNumber);
  c_interval->add_option("--alpha", int_alpha,
                         "equality-profile parameter (when no CSV is given)");
  c_interval->add_option("--csv", interval_csv, "read samples on [0, l]");
  c_interval->add_option("--tol-slack", tol_islack, "equality slack cap");

  // --- vanishing -------------------------------------------------------------
  auto* c_vanish = app.add_subcommand(
      "vanishing", "degenerate form 4 int w'^2 >= int w^2 at a zero of w");
  add_common_flags(c_vanish, cfg);
  std::string vprofile = "abs-sin";
  double tol_vanish = 1e-6;
  c_vanish->add_option("--profile", vprofile)
      ->check(CLI::IsMember({"abs-sin", "sin-squared", "zero"}));
  c_vanish->add_option("--tol-gap", tol_vanish, "allowed rhs - lhs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Report rep;
  rep.config = base_config(cfg);

  try {
    if (*c_check) {
      rep.command = "check";
      rep.config["tol_slack"] = tol_slack;
      std::vector<CircleFunction> members;
      if (corpus_count > 0) {
        CorpusSpec spec;
        spec.seed = cfg.seed;
        spec.count = corpus_count;
        spec.n = cfg.n;
        members = random_corpus(spec);
        rep.config["corpus"] = corpus_count;
      } else {
        rep.config["profile"] = cfg.profile;
        members.push_back(load_profile(cfg));
      }
      rep.csv_header = "member,F,constraint,Q,bound,slack";
      double worst = 1e300;
      for (std::size_t i = 0; i < members.size(); ++i) {
        const auto r = inequality_report(members[i], cfg.diff());
        const std::string tag =
            members.size() == 1 ? "" : "[" + std::to_string(i) + "]";
        rep.result("F" + tag, r.F, 0);
        rep.result("constraint" + tag, r.constraint, 0);
        rep.result("Q" + tag, r.Q, 0);
        rep.result("bound" + tag, r.bound, 0);
        rep.result("slack" + tag, r.slack, tol_slack);
        rep.csv_rows.push_back(std::to_string(i) + "," + fmt(r.F) + "," +
                               fmt(r.constraint) + "," + fmt(r.Q) + "," +
                               fmt(r.bound) + "," + fmt(r.slack));
        worst = std::min(worst, r.slack);
      }
      rep.check("slack_nonnegative", worst >= -tol_slack,
                "min slack " + fmt(worst) + " >= " + fmt(-tol_slack));
    } else if (*c_iter) {
      rep.command = "iterate";
      rep.config["profile"] = cfg.profile;
      rep.config["max_steps"] = max_steps;
      rep.config["flat_tol"] = flat_tol;
      auto trace = run_iteration(load_profile(cfg), max_steps, flat_tol);
      auto diag = diagnose_trace(trace, tol_step, tol_budget);
      rep.csv_header = "step,alpha_n,F,min_v,max_vinv2,constraint";
      for (const auto& s : trace.steps)
        rep.csv_rows.push_back(std::to_string(s.step) + "," + fmt(s.alpha_n) +
                               "," + fmt(s.F) + "," + fmt(s.min_v) + "," +
                               fmt(s.max_vinv2) + "," + fmt(s.constraint));
      rep.result("steps", static_cast<double>(trace.steps.size()), 0);
      rep.result("final_F", trace.steps.back().F, 0);
      rep.result("tail_flatness", trace.tail_flatness, flat_tol);
      rep.result("product_lhs", diag.product_lhs, tol_budget);
      rep.result("product_rhs", diag.product_rhs, tol_budget);
      rep.check("converged", trace.converged,
                "tail flatness " + fmt(trace.tail_flatness) + " < " +
                    fmt(flat_tol) + " within " + std::to_string(max_steps) +
                    " steps");
      rep.check("trace_audit", diag.ok,
                diag.ok ? "monotonicities, constraint, and product bound hold"
                        : diag.violations.front());
    } else if (*c_crit) {
      rep.command = "critical";
      rep.config["alpha"] = crit_alpha;
      rep.config["theta0"] = crit_theta0;
      auto f = critical_profile(crit_alpha, crit_theta0, cfg.n);
      auto v = f;
      v.role = Role::V;
      for (double& y : v.values) y = 1.0 / std::sqrt(y);
      const auto r = inequality_report(v, cfg.diff());
      const double res = [&] {
        double m = 0;
        for (double x : el_residual(f, cfg.diff()).values)
          m = std::max(m, std::abs(x));
        return m;
      }();
      rep.result("F", r.F, tol_value);
      rep.result("Q", r.Q, tol_value * kTwoPi);
      rep.result("slack", r.slack, tol_value);
      rep.result("el_residual_max", res, tol_residual);
      rep.check("value", std::abs(r.F + kTwoPi) <= tol_value,
                "|F + 2 pi| = " + fmt(std::abs(r.F + kTwoPi)));
      rep.check("slack_zero", std::abs(r.slack) <= tol_value,
                "|slack| = " + fmt(std::abs(r.slack)));
      rep.check("stationary", res <= tol_residual,
                "max residual = " + fmt(res));
    } else if (*c_spec) {
      rep.command = "spectrum";
      rep.config["max_m"] = max_m;
      rep.csv_header = "m,kappa,dimension";
      bool ok = true;
      for (const auto& e : second_variation_spectrum(max_m, cfg.n).entries) {
        rep.result("kappa[" + std::to_string(e.m) + "]", e.kappa, tol_kappa);
        rep.csv_rows.push_back(std::to_string(e.m) + "," + fmt(e.kappa) + "," +
                               std::to_string(e.dimension));
        ok = ok && std::abs(e.kappa - 8.0 * e.m * (e.m + 2)) <= tol_kappa &&
             e.dimension == 2;
      }
      rep.check("matches_8m_m_plus_2", ok,
                "kappa_m = 8 m (m + 2), dimension 2, m <= " +
                    std::to_string(max_m));
    } else if (*c_dir) {
      rep.command = "dirichlet";
      rep.config["m"] = dm;
      rep.config["M"] = dM;
      const auto t = dirichlet_thresholds(dm, dM);
      if (sweep > 0) {
        rep.config["sweep"] = sweep;
        std::vector<double> grid;
        const double lo = t.c_cap * 1.02, hi = t.c_floor * 0.98;
        for (int i = 0; i < sweep; ++i)
          grid.push_back(sweep == 1 ? lo : lo + (hi - lo) * i / (sweep - 1));
        rep.csv_header = "c,E,lambda,case";
        bool signs = true;
        for (const auto& p : dirichlet_energy_curve(dm, dM, grid)) {
          rep.csv_rows.push_back(
              fmt(p.c) + "," + fmt(p.E) + "," + fmt(p.lambda) + "," +
              std::string(1, "abcde"[static_cast<int>(p.shape)]));
          rep.result("E(c=" + fmt(p.c) + ")", p.E, 0);
          if ((p.c < t.c_lambda0) != (p.lambda < 0)) signs = false;
        }
        rep.check("lambda_sign_change_at_c_lambda0", signs,
                  "lambda < 0 exactly for c < " + fmt(t.c_lambda0));
      } else {
        rep.config["c"] = dc;
        const auto sol = dirichlet_solve({dm, dM, dc});
        rep.label("case", std::string(1, "abcde"[static_cast<int>(sol.shape)]));
        rep.result("lambda", sol.lambda, 0);
        rep.result("E", sol.energy, 0);
        // Reproduce the prescribed mass from the closed-form profile.
        const int q = 20000;
        double mass = 0;
        for (int j = 0; j < q; ++j) {
          const double v = sol.eval(kPi * (j + 0.5) / q);
          mass += kPi / q / (v * v);
        }
        rep.result("mass", mass, tol_mass);
        rep.check("mass_reproduced", std::abs(mass - dc) <= tol_mass,
                  "|int v^-2 - c| = " + fmt(std::abs(mass - dc)));
      }
    } else if (*c_oracle) {
      rep.command = "oracle";
      rep.config["profile"] = cfg.profile;
      const auto res = descend_oracle(normalize_constraint(load_profile(cfg)));
      rep.result("F", res.F, tol_oracle);
      rep.result("steps", static_cast<double>(res.steps_taken), 0);
      rep.result("final_rate", res.final_rate, 0);
      rep.check("reaches_sharp_value",
                !res.diverged && std::abs(res.F + kTwoPi) <= tol_oracle,
                "|F + 2 pi| = " + fmt(std::abs(res.F + kTwoPi)));
    } else if (*c_stereo) {
      rep.command = "stereo";
      rep.config["profile"] = cfg.profile;
      rep.config["variant"] = variant;
      if (variant == "b" && stereo_tol_opt->count() == 0) tol_stereo = 1e-5;
      StereoReport r;
      if (variant == "a") {
        r = stereographic_check(load_profile(cfg), StereoVariant::A);
      } else if (cfg.profile == "constant") {
        r = stereographic_check_b(
            {[](double) { return 1.0; }, [](double) { return 0.0; }}, window);
      } else if (cfg.profile == "nu") {
        // The weighted variant needs analytic tails: use the half-angle
        // equality family.
        const double a = cfg.alpha, w = std::sqrt(1 - a * a);
        r = stereographic_check_b(
            {[a, w](double th) {
               return std::sqrt((1 + a * std::cos(th / 2)) / w);
             },
             [a, w](double th) {
               return -a * std::sin(th / 2) /
                      (4 * std::sqrt(w * (1 + a * std::cos(th / 2))));
             }},
            window);
      } else {
        throw CLI::ValidationError(
            "--variant", "variant b needs an analytic profile (constant, nu)");
      }
      rep.result("circle_side", r.circle_side, 0);
      rep.result("line_side", r.line_side, 0);
      rep.result("bound_side", r.bound_side, 0);
      rep.result("residual", r.residual, tol_stereo);
      rep.check("transplant_identity", r.residual <= tol_stereo,
                "residual = " + fmt(r.residual));
    } else if (*c_interval) {
      rep.command = "interval";
      rep.config["l"] = length;
      std::vector<double> samples;
      if (!interval_csv.empty()) {
        std::ifstream in(interval_csv);
        if (!in)
          throw CLI::ValidationError("--csv", "cannot open " + interval_csv);
        double x;
        while (in >> x) samples.push_back(x);
      } else {
        rep.config["alpha"] = int_alpha;
        const double a = int_alpha, r = std::sqrt(1 - a * a);
        for (int j = 0; j <= 256; ++j) {
          const double th = length * j / 256;
          samples.push_back(
              std::sqrt((1 + a * std::cos(kPi * th / length)) / r));
        }
      }
      const auto r = interval_check(samples, length);
      rep.result("F", r.F, 0);
      rep.result("constraint", r.constraint, 0);
      rep.result("bound", r.bound, 0);
      rep.result("slack", r.slack, tol_islack);
      rep.check("slack_nonnegative", r.slack >= -tol_islack,
                "slack = " + fmt(r.slack));
    } else if (*c_vanish) {
      rep.command = "vanishing";
      rep.config["profile"] = vprofile;
      auto w = sample_circle(cfg.n, [&](double t) -> double {
        if (vprofile == "zero") return 0.0;
        const double s = std::sin(t / 2);
        return vprofile == "abs-sin" ? std::abs(s) : s * s;
      });
      const auto [lhs, rhs] = vanishing_check(w);
      rep.result("lhs", lhs, tol_vanish);
      rep.result("rhs", rhs, tol_vanish);
      rep.check("dirichlet_dominates", lhs >= rhs - tol_vanish,
                "lhs - rhs = " + fmt(lhs - rhs));
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  emit(rep, cfg);
  return rep.failed == 0 ? 0 : 1;
}
