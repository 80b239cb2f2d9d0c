// Copyright 2026 The rggdist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rgg/commands.hpp"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <map>
#include <ostream>
#include <sstream>

#include "rgg/distances.hpp"
#include "rgg/entropy_bounds.hpp"
#include "rgg/errors.hpp"
#include "rgg/random.hpp"
#include "rgg/validation.hpp"

namespace rgg::cli {
namespace {

using nlohmann::ordered_json;

constexpr int kMaxMcNodes = 6;

std::string edge_string(int n, std::uint64_t code) {
  std::string s;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      s.push_back(((code >> pair_index(i, j, n)) & 1U) != 0 ? '1' : '0');
    }
  }
  return s;
}

ordered_json mc_json(const McSettings& mc) {
  return {{"samples", mc.samples}, {"seed", mc.seed}, {"workers", mc.workers}, {"rng", std::string(kGeneratorName)}};
}

ordered_json quad_json(const QuadratureSettings& q) {
  return {{"abs_tol", q.abs_tol}, {"rel_tol", q.rel_tol}, {"max_subdivisions", q.max_subdivisions}};
}

ordered_json pmf_json(const GraphPmf& pmf) {
  ordered_json entries = ordered_json::array();
  for (std::size_t c = 0; c < pmf.probs.size(); ++c) {
    entries.push_back({{"code", c}, {"edges", edge_string(pmf.n, c)}, {"p", pmf.probs[c]}});
  }
  return {{"n", pmf.n},
          {"method", std::string(to_string(pmf.method))},
          {"error_estimate", pmf.error_estimate},
          {"p_connected", prob_connected(pmf)},
          {"p_complete", prob_complete(pmf)},
          {"entropy_bits", entropy(pmf)},
          {"probs", entries}};
}

std::string comment_line(const SweepSpec& spec, const DiskDomain& domain) {
  std::string line = "# ";
  if (spec.mc) {
    line += fmt::format("seed={} samples={} workers={} ", spec.mc->seed, spec.mc->samples, spec.mc->workers);
  } else {
    line += fmt::format("seed={} samples=0 workers=1 ", spec.seed);
  }
  line += fmt::format("model={} n={} diameter={} r0_start={} r0_stop={} steps={} abs_tol={} rng={}",
                      spec.model_kind, spec.n, format_number(domain.diameter()), format_number(spec.r0_start),
                      format_number(spec.r0_stop), spec.steps, format_number(spec.quad.abs_tol),
                      std::string(kGeneratorName));
  return line;
}

// Flags shared by several subcommands.
struct Common {
  double diameter = 1.0;
  std::string model = "hard:r0=0.5";
  McSettings mc;
  double abs_tol = -1.0;  // negative: per-command default
  std::string out_path;

  DiskDomain domain() const { return DiskDomain(diameter); }
  QuadratureSettings quad(QuadratureSettings base) const {
    if (abs_tol >= 0.0) base.abs_tol = abs_tol;
    base.validate();
    return base;
  }
};

void add_common(CLI::App* sub, Common& c, bool with_model, bool with_mc) {
  sub->add_option("--diameter", c.diameter, "Disk diameter D")->capture_default_str();
  if (with_model) sub->add_option("--model", c.model, "Connection model spec")->capture_default_str();
  sub->add_option("--seed", c.mc.seed, "Random seed")->capture_default_str();
  if (with_mc) {
    sub->add_option("--samples", c.mc.samples, "Monte Carlo samples")->capture_default_str();
    sub->add_option("--workers", c.mc.workers, "Monte Carlo worker threads")->capture_default_str();
  }
  sub->add_option("--abs-tol", c.abs_tol, "Quadrature absolute tolerance");
  sub->add_option("--out", c.out_path, "Output path (default stdout)");
}

// Writes the payload to --out or to the given stream.
void emit(const Common& c, std::ostream& out, const std::string& payload) {
  if (c.out_path.empty()) {
    out << payload;
    out.flush();
    return;
  }
  std::ofstream file(c.out_path, std::ios::binary);
  if (!file) throw ArgumentError("cannot open output file '" + c.out_path + "'");
  file << payload;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string format_number(double value) {
  if (value == 0.0) return "0";  // no negative zero in output
  return fmt::format("{:.12g}", value);
}

void SweepSpec::validate(const DiskDomain& domain) const {
  if (!(r0_start >= 0.0 && r0_start < r0_stop && r0_stop <= domain.diameter())) {
    throw ArgumentError("sweep needs 0 <= r0-start < r0-stop <= D");
  }
  if (steps < 2) throw ArgumentError("sweep needs at least 2 steps");
  if (n < 2) throw ArgumentError("sweep needs n >= 2");
  if (mc) {
    mc->validate();
    if (n > kMaxMcNodes) throw UnsupportedError("Monte Carlo sweeps support n <= 6");
  } else if (n > 3) {
    throw UnsupportedError("exact results exist only for n <= 3; pass --mc for n = " + std::to_string(n));
  }
  quad.validate();
  (void)model_at(r0_stop);
}

std::vector<double> SweepSpec::grid() const {
  std::vector<double> g(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    g[static_cast<std::size_t>(i)] =
        i == steps - 1 ? r0_stop : r0_start + (r0_stop - r0_start) * static_cast<double>(i) / (steps - 1);
  }
  return g;
}

ConnectionModel SweepSpec::model_at(double r0) const {
  // The kind may omit r0; a placeholder makes it parseable before substitution.
  std::string text = model_kind;
  if (text.find("r0=") == std::string::npos) {
    const auto colon = text.find(':');
    text = colon == std::string::npos ? text + ":r0=1" : text.substr(0, colon + 1) + "r0=1," + text.substr(colon + 1);
  }
  const auto base = ConnectionModel::parse(text);
  // A zero range connects nothing in every model, the limit of the soft kernels.
  if (r0 == 0.0) return ConnectionModel::hard_disk(0.0);
  return base.with_range(r0);
}

GraphPmf sweep_pmf(const SweepSpec& spec, const DiskDomain& domain, double r0) {
  const auto model = spec.model_at(r0);
  if (spec.mc) return estimate_pmf(spec.n, model, domain, *spec.mc);
  return exact_pmf(spec.n, model, domain, spec.quad);
}

std::vector<ConnectivityRow> connectivity_sweep(const SweepSpec& spec, const DiskDomain& domain) {
  spec.validate(domain);
  std::vector<ConnectivityRow> rows;
  for (double r0 : spec.grid()) {
    const auto pmf = sweep_pmf(spec, domain, r0);
    ConnectivityRow row{r0, prob_connected(pmf), prob_complete(pmf), pmf.method, pmf.error_estimate};
    if (spec.mc) {
      const double n = static_cast<double>(spec.mc->samples);
      const double v = std::max(row.p_connected * (1.0 - row.p_connected), row.p_complete * (1.0 - row.p_complete));
      row.err_est = std::sqrt(v / n);
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<EntropyRow> entropy_sweep(const SweepSpec& spec, const DiskDomain& domain) {
  spec.validate(domain);
  std::vector<EntropyRow> rows;
  for (double r0 : spec.grid()) {
    const auto model = spec.model_at(r0);
    EntropyRow row{};
    row.r0 = r0;
    if (spec.mc) {
      const auto est = estimate_entropy(spec.n, model, domain, *spec.mc);
      row.h_bits = est.entropy_bits;
      row.h_std_err = est.std_error;
    } else {
      row.h_bits = entropy(exact_pmf(spec.n, model, domain, spec.quad));
    }
    const double h2 = entropy(pmf_n2(model, domain, spec.quad));
    row.bound_from_g2 = spec.n == 2 ? h2 : boost::rational_cast<double>(shearer_factor(spec.n, 2)) * h2;
    if (spec.n >= 3) {
      const double h3 = entropy(pmf_n3(model, domain, spec.quad));
      row.bound_from_g3 = spec.n == 3 ? h3 : boost::rational_cast<double>(shearer_factor(spec.n, 3)) * h3;
    }
    rows.push_back(row);
  }
  return rows;
}

void write_connectivity_csv(std::ostream& out, const SweepSpec& spec, const DiskDomain& domain,
                            const std::vector<ConnectivityRow>& rows) {
  std::string text = comment_line(spec, domain) + "\nr0,p_connected,p_complete,method,err_est\n";
  for (const auto& r : rows) {
    text += fmt::format("{},{},{},{},{}\n", format_number(r.r0), format_number(r.p_connected),
                        format_number(r.p_complete), to_string(r.method), format_number(r.err_est));
  }
  out << text;
}

void write_entropy_csv(std::ostream& out, const SweepSpec& spec, const DiskDomain& domain,
                       const std::vector<EntropyRow>& rows) {
  auto opt = [](const std::optional<double>& v) { return v ? format_number(*v) : std::string(); };
  std::string text = comment_line(spec, domain) + "\nr0,H_exact_or_mc,H_std_err,bound_from_G3,bound_from_G2\n";
  for (const auto& r : rows) {
    text += fmt::format("{},{},{},{},{}\n", format_number(r.r0), format_number(r.h_bits),
                        format_number(r.h_std_err), opt(r.bound_from_g3), opt(r.bound_from_g2));
  }
  out << text;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Distributions, connectivity and entropy of random geometric graphs in a disk", "rgg"};
  app.require_subcommand(1);
  Common c;
  int status = kExitOk;
  std::function<void()> action;

  // pdf3
  double r12 = 0.0, r13 = 0.0, r23 = 0.0;
  auto* pdf3 = app.add_subcommand("pdf3", "Joint pdf of the three side lengths");
  pdf3->add_option("--r12", r12)->required();
  pdf3->add_option("--r13", r13)->required();
  pdf3->add_option("--r23", r23)->required();
  add_common(pdf3, c, false, false);
  pdf3->callback([&] {
    action = [&] {
      const auto domain = c.domain();
      const TriangleSides sides{r12, r13, r23};
      validate_sides(sides);
      const auto value = joint_pdf3(sides, domain);
      const auto tq = triangle_quantities(sides);
      ordered_json j{{"density", value.density},
                     {"case_tag", std::string(to_string(value.branch))},
                     {"Q", tq.q},
                     {"d", tq.circumdiameter ? ordered_json(*tq.circumdiameter) : ordered_json(nullptr)},
                     {"rbar", tq.rbar},
                     {"settings", {{"diameter", c.diameter}, {"r12", r12}, {"r13", r13}, {"r23", r23}}}};
      emit(c, out, dump(j));
    };
  });

  // pairpdf
  double r = 0.0;
  auto* pair = app.add_subcommand("pairpdf", "Pdf of the distance between two points");
  pair->add_option("--r", r)->required();
  add_common(pair, c, false, false);
  pair->callback([&] {
    action = [&] {
      const auto domain = c.domain();
      ordered_json j{{"density", pair_pdf(r, domain)}, {"r", r}, {"settings", {{"diameter", c.diameter}}}};
      emit(c, out, dump(j));
    };
  });

  // pmf / entropy
  int n = 3;
  bool use_mc = false;
  auto* pmf = app.add_subcommand("pmf", "Probability mass function of the graph");
  pmf->add_option("--n", n, "Node count (2 or 3; up to 6 with --mc)")->capture_default_str();
  pmf->add_flag("--mc", use_mc, "Estimate by Monte Carlo");
  add_common(pmf, c, true, true);
  auto* ent = app.add_subcommand("entropy", "Entropy of the graph by quadrature");
  ent->add_option("--n", n, "Node count (2 or 3)")->capture_default_str();
  add_common(ent, c, true, false);
  auto* ent_mc = app.add_subcommand("entropy-mc", "Entropy of the graph by Monte Carlo");
  ent_mc->add_option("--n", n, "Node count")->required();
  add_common(ent_mc, c, true, true);

  auto settings_json = [&](bool mc, bool quad) {
    ordered_json s{{"diameter", c.diameter}, {"model", ConnectionModel::parse(c.model).describe()}};
    if (mc) s["mc"] = mc_json(c.mc);
    if (quad) s["quadrature"] = quad_json(c.quad(default_pmf_settings()));
    return s;
  };

  pmf->callback([&] {
    action = [&] {
      const auto domain = c.domain();
      const auto model = ConnectionModel::parse(c.model);
      GraphPmf p;
      if (use_mc) {
        if (n > kMaxMcNodes) throw UnsupportedError("Monte Carlo pmf supports n <= 6");
        p = estimate_pmf(n, model, domain, c.mc);
      } else {
        p = exact_pmf(n, model, domain, c.quad(default_pmf_settings()));
      }
      auto j = pmf_json(p);
      j["settings"] = settings_json(use_mc, !use_mc);
      emit(c, out, dump(j));
    };
  });
  ent->callback([&] {
    action = [&] {
      const auto domain = c.domain();
      const auto p = exact_pmf(n, ConnectionModel::parse(c.model), domain, c.quad(default_pmf_settings()));
      ordered_json j{{"n", n},
                     {"entropy_bits", entropy(p)},
                     {"method", std::string(to_string(p.method))},
                     {"pmf_error_estimate", p.error_estimate},
                     {"settings", settings_json(false, true)}};
      emit(c, out, dump(j));
    };
  });
  ent_mc->callback([&] {
    action = [&] {
      if (n > kMaxMcNodes) throw UnsupportedError("Monte Carlo entropy supports n <= 6");
      const auto domain = c.domain();
      const auto e = estimate_entropy(n, ConnectionModel::parse(c.model), domain, c.mc);
      ordered_json j{{"n", n},
                     {"entropy_bits", e.entropy_bits},
                     {"std_error", e.std_error},
                     {"plug_in_bits", e.plug_in_bits},
                     {"observed_outcomes", e.observed_outcomes},
                     {"method", "monte_carlo"},
                     {"settings", settings_json(true, false)}};
      emit(c, out, dump(j));
    };
  });

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Upper bounds on the entropy of G_n from G_2 and G_3");
  bounds->add_option("--n", n, "Node count")->required();
  add_common(bounds, c, true, false);
  bounds->callback([&] {
    action = [&] {
      const auto domain = c.domain();
      const auto model = ConnectionModel::parse(c.model);
      const auto quad = c.quad(default_pmf_settings());
      std::map<int, EntropyInput> h;
      h[2] = {entropy(pmf_n2(model, domain, quad)), EntropySource::quadrature};
      if (n >= 3) h[3] = {entropy(pmf_n3(model, domain, quad)), EntropySource::quadrature};
      const auto chain = bound_chain(n, h);
      ordered_json entries = ordered_json::array();
      for (const auto& e : chain.entries) {
        entries.push_back({{"m", e.m},
                           {"h_m_bits", e.h_m_bits},
                           {"factor", fmt::format("{}/{}", (n == e.m ? 1 : shearer_factor(n, e.m).numerator()),
                                                  (n == e.m ? 1 : shearer_factor(n, e.m).denominator()))},
                           {"bound_bits", e.bound_on_h_n_bits},
                           {"source", std::string(to_string(e.source))}});
      }
      ordered_json j{{"n", n},
                     {"entries", entries},
                     {"tightest_bits", chain.tightest()},
                     {"warnings", chain.warnings},
                     {"settings", settings_json(false, true)}};
      emit(c, out, dump(j));
    };
  });

  // sweeps
  SweepSpec spec;
  auto add_sweep = [&](CLI::App* sub) {
    sub->add_option("--r0-start", spec.r0_start, "First connection range")->capture_default_str();
    sub->add_option("--r0-stop", spec.r0_stop, "Last connection range (<= D)")->capture_default_str();
    sub->add_option("--steps", spec.steps, "Number of sweep points, endpoints included")->capture_default_str();
    sub->add_option("--n", spec.n, "Node count (2 or 3 by quadrature; up to 6 with --mc)")->capture_default_str();
    sub->add_flag("--mc", use_mc, "Monte Carlo estimates (n <= 6)");
    add_common(sub, c, false, true);
    sub->add_option("--model", spec.model_kind, "Model kind: hard or exp:beta=B")->capture_default_str();
  };
  auto* sweep_conn = app.add_subcommand("sweep-connectivity", "P(connected) and P(complete) versus r0 (CSV)");
  add_sweep(sweep_conn);
  auto* sweep_ent = app.add_subcommand("sweep-entropy", "Entropy and its upper bounds versus r0 (CSV)");
  add_sweep(sweep_ent);
  auto finish_spec = [&] {
    spec.seed = c.mc.seed;
    if (use_mc) spec.mc = c.mc;
    spec.quad = c.quad(default_pmf_settings());
  };
  sweep_conn->callback([&] {
    action = [&] {
      finish_spec();
      const auto domain = c.domain();
      std::ostringstream text;
      write_connectivity_csv(text, spec, domain, connectivity_sweep(spec, domain));
      emit(c, out, text.str());
    };
  });
  sweep_ent->callback([&] {
    action = [&] {
      finish_spec();
      const auto domain = c.domain();
      std::ostringstream text;
      write_entropy_csv(text, spec, domain, entropy_sweep(spec, domain));
      emit(c, out, text.str());
    };
  });

  // validate
  std::string target;
  std::size_t bins = 0;
  auto* validate = app.add_subcommand("validate", "Compare closed forms against independent oracles");
  validate->add_option("target", target, "pdf3, pair, condpdf or pmf3")
      ->required()
      ->check(CLI::IsMember({"pdf3", "pair", "condpdf", "pmf3"}));
  validate->add_option("--bins", bins, "Histogram bins (pdf3: 20 per axis, pair: 50)");
  add_common(validate, c, true, true);
  validate->callback([&] {
    action = [&] {
      const auto domain = c.domain();
      ValidationReport report;
      ordered_json settings{{"diameter", c.diameter}};
      if (target == "pdf3") {
        report = validate_pdf3(domain, c.mc, bins == 0 ? 20 : bins);
        settings["mc"] = mc_json(c.mc);
      } else if (target == "pair") {
        report = validate_pair(domain, c.mc, bins == 0 ? 50 : bins);
        settings["mc"] = mc_json(c.mc);
      } else if (target == "condpdf") {
        report = validate_condpdf(domain);
      } else {
        const auto model = ConnectionModel::parse(c.model);
        report = validate_pmf3(model, domain, c.mc, c.quad(default_pmf_settings()));
        settings["mc"] = mc_json(c.mc);
        settings["model"] = model.describe();
      }
      ordered_json checks = ordered_json::array();
      for (const auto& ch : report.checks) {
        checks.push_back({{"name", ch.name},
                          {"passed", ch.passed},
                          {"worst_deviation", ch.worst_deviation},
                          {"threshold", ch.threshold},
                          {"detail", ch.detail}});
      }
      ordered_json j{{"target", report.target}, {"passed", report.passed()}, {"checks", checks},
                     {"settings", settings}};
      emit(c, out, dump(j));
      if (!report.passed()) status = kExitValidationFailure;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (action) action();
    return status;
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const AccuracyError& e) {
    err << "error: " << e.what() << " (value " << e.value() << ", error estimate " << e.error_estimate() << ")\n";
    return kExitValidationFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidationFailure;
  }
}

}  // namespace rgg::cli
