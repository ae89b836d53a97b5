// Copyright 2026 The nbwalk Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nbwalk/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include "nbwalk/csv.hpp"
#include "nbwalk/error.hpp"
#include "nbwalk/graph.hpp"
#include "nbwalk/ihara.hpp"
#include "nbwalk/laplacian.hpp"
#include "nbwalk/spectra.hpp"
#include "nbwalk/walks.hpp"

namespace nbwalk::cli {
namespace {

constexpr const char* kGrammar =
    "usage: nbwalk <info|ihara-check|decomp-check|spectrum|mix|simulate|laplacian-compare> "
    "[flags] <graph-file>\n"
    "flags: --weights unit|degree|<file>  --u-grid a:b:count  --steps N  --walkers N\n"
    "       --seed N  --start <label>  --method closed-form|dense|both  --out <file>\n"
    "       --tol <positive real>  --threads N  --vertex-starts\n";

constexpr std::size_t kDefaultMixHorizon = 100;
constexpr std::size_t kDefaultSimulateSteps = 6;
constexpr std::size_t kDefaultWalkers = 200000;

struct RunConfig {
  std::string subcommand;
  std::string input;
  std::string weights = "unit";
  std::string u_grid;
  std::string method = "both";
  std::string out;
  std::string start;
  std::optional<std::size_t> steps;
  std::size_t walkers = kDefaultWalkers;
  std::uint64_t seed = 1;
  std::optional<double> tol;
  std::size_t threads = 1;
  bool vertex_starts = false;
};

double parse_real(const std::string& text, const char* what) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  const auto result = std::from_chars(text.data(), end, value);
  if (result.ec != std::errc() || result.ptr != end || !std::isfinite(value)) {
    throw Error(ErrorCode::InvalidArgument, std::string("cannot parse ") + what + " '" + text + "'");
  }
  return value;
}

std::vector<double> parse_u_grid(const std::string& text, std::vector<double> fallback) {
  if (text.empty()) return fallback;
  const auto first = text.find(':');
  const auto second = first == std::string::npos ? first : text.find(':', first + 1);
  if (second == std::string::npos) {
    throw Error(ErrorCode::InvalidArgument, "--u-grid expects a:b:count, got '" + text + "'");
  }
  const double lo = parse_real(text.substr(0, first), "u-grid bound");
  const double hi = parse_real(text.substr(first + 1, second - first - 1), "u-grid bound");
  const double count = parse_real(text.substr(second + 1), "u-grid count");
  if (count < 1 || count != std::floor(count) || hi < lo) {
    throw Error(ErrorCode::InvalidArgument, "--u-grid needs lo <= hi and a positive integer count");
  }
  return u_grid(lo, hi, static_cast<std::size_t>(count));
}

WeightAssignment load_weights(const RunConfig& config, const Graph& g) {
  if (config.weights == "unit") return WeightAssignment::unit(g);
  if (config.weights == "degree") return WeightAssignment::degree_based(g);
  std::ifstream in(config.weights);
  if (!in) throw Error(ErrorCode::Io, "cannot open weight file '" + config.weights + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_weights(buffer.str(), g, WeightFallback::Unit);
}

void emit(const csv::Table& table, const RunConfig& config, std::ostream& out) {
  if (config.out.empty()) {
    table.write(out);
    return;
  }
  std::ofstream file(config.out, std::ios::binary);
  if (!file) throw Error(ErrorCode::Io, "cannot write '" + config.out + "'");
  table.write(file);
  if (!file) throw Error(ErrorCode::Io, "write to '" + config.out + "' failed");
}

std::string real(double value) { return csv::format_real(value); }
std::string integer(std::size_t value) { return csv::format_integer(static_cast<std::int64_t>(value)); }

int cmd_info(const RunConfig& config, const Graph& g, std::ostream& out, std::ostream& err) {
  const DegreeProfile profile = classify(g);
  const DirectedEdgeSpace es = build_edge_space(g);
  const ErgodicityReport ergodic = ergodicity_check(es);

  csv::Table table({"key", "value"});
  table.add_row({"vertices", integer(g.vertex_count())});
  table.add_row({"edges", integer(g.edge_count())});
  table.add_row({"directed_edges", integer(es.size())});
  table.add_row({"volume", integer(g.volume())});
  table.add_row({"min_degree", integer(g.min_degree())});
  table.add_row({"profile", describe(profile)});
  table.add_row({"bipartite", csv::format_bool(profile.bipartite)});
  table.add_row({"connected", csv::format_bool(g.is_connected())});
  table.add_row({"irreducible", csv::format_bool(ergodic.irreducible)});
  table.add_row({"period", integer(ergodic.period)});
  table.add_row({"aperiodic", csv::format_bool(ergodic.aperiodic)});
  emit(table, config, out);

  err << "n=" << g.vertex_count() << " m=" << g.edge_count() << ' ' << describe(profile) << ", "
      << (ergodic.irreducible ? "irreducible" : "reducible") << ", "
      << (ergodic.aperiodic ? "aperiodic" : "period " + std::to_string(ergodic.period)) << '\n';
  return kExitOk;
}

int cmd_ihara(const RunConfig& config, const Graph& g, std::ostream& out, std::ostream& err,
              const Hooks& hooks) {
  Tolerances tol = kDefaultTolerances;
  if (config.tol) tol.identity_residual = *config.tol;
  const std::vector<double> us = parse_u_grid(config.u_grid, default_u_grid());
  const WeightAssignment w = load_weights(config, g);

  const IharaReport plain = unweighted_check(g, us, tol);
  EdgeOperatorSet ops = op_weighted(build_edge_space(g), w);
  if (hooks.mutate_operators) hooks.mutate_operators(ops);
  const IharaReport weighted = weighted_check(ops, us, tol);

  csv::Table table({"identity", "u", "lhs", "rhs", "residual"});
  for (const auto& [name, report] :
       {std::pair{"unweighted", &plain}, std::pair{"weighted", &weighted}}) {
    for (const IharaSample& s : report->samples) {
      table.add_row({name, real(s.u), real(s.lhs), real(s.rhs), real(s.residual)});
    }
  }
  emit(table, config, out);

  err << "unweighted: max residual " << real(plain.max_residual)
      << (plain.passed ? " (pass)" : " (FAIL)") << '\n'
      << "weighted (" << config.weights << "): max residual " << real(weighted.max_residual)
      << (weighted.passed ? " (pass)" : " (FAIL)") << '\n';
  return plain.passed && weighted.passed ? kExitOk : kExitCheckFailed;
}

int cmd_decomp(const RunConfig& config, const Graph& g, std::ostream& out, std::ostream& err) {
  Tolerances tol = kDefaultTolerances;
  if (config.tol) tol.identity_residual = *config.tol;
  const std::vector<double> us = parse_u_grid(config.u_grid, u_grid(-0.4, 0.4, 5));
  const WeightAssignment w = load_weights(config, g);

  csv::Table table({"u", "lower_left", "lower_right", "upper_left", "upper_right",
                    "explicit_inverse", "passed"});
  bool all_passed = true;
  double worst = 0.0;
  for (double u : us) {
    const DecompositionReport r = decomposition_check(g, w, u, tol);
    all_passed = all_passed && r.passed;
    worst = std::max({worst, r.lower_left_norm, r.lower_right_deviation, r.upper_left_deviation,
                      r.upper_right_deviation});
    table.add_row({real(r.u), real(r.lower_left_norm), real(r.lower_right_deviation),
                   real(r.upper_left_deviation), real(r.upper_right_deviation),
                   real(r.explicit_inverse_deviation), csv::format_bool(r.passed)});
  }
  emit(table, config, out);
  err << "block decomposition over " << us.size() << " u values: max deviation " << real(worst)
      << (all_passed ? " (pass)" : " (FAIL)") << '\n';
  return all_passed ? kExitOk : kExitCheckFailed;
}

int cmd_spectrum(const RunConfig& config, const Graph& g, std::ostream& out, std::ostream& err) {
  Tolerances tol = kDefaultTolerances;
  if (config.tol) tol.spectrum_match = *config.tol;
  SpectrumMethod method;
  if (config.method == "closed-form") {
    method = SpectrumMethod::ClosedForm;
  } else if (config.method == "dense") {
    method = SpectrumMethod::Dense;
  } else if (config.method == "both") {
    method = SpectrumMethod::Both;
  } else {
    throw Error(ErrorCode::InvalidArgument, "--method must be closed-form, dense or both");
  }
  const SpectrumReport report = spectrum_report(g, method, tol);

  csv::Table table({"re", "im", "multiplicity", "source"});
  auto add = [&table](const ComplexMultiset& set, const char* source) {
    for (const auto& entry : set.entries()) {
      table.add_row({real(entry.value.real()), real(entry.value.imag()), integer(entry.multiplicity),
                     source});
    }
  };
  if (report.closed_form) add(*report.closed_form, "closed-form");
  if (report.dense) add(*report.dense, "dense");
  emit(table, config, out);

  err << "closed form: " << report.closed_form_case << '\n';
  if (report.max_matching_distance) {
    err << "multiset distance closed-form vs dense: " << real(*report.max_matching_distance)
        << (report.matched ? " (match)" : " (MISMATCH)") << '\n';
  }
  err << "second eigenvalue " << real(report.second.value.real()) << (report.second.value.imag() < 0 ? "" : "+")
      << real(report.second.value.imag()) << "i, modulus " << real(report.second.modulus)
      << (report.periodic ? " (periodic)" : "") << '\n';
  if (report.regular_case) {
    const auto& r = *report.regular_case;
    err << "regular mixing: lambda " << real(r.lambda) << ", |mu| " << real(r.modulus)
        << ", simple walk " << real(r.upper_bound) << '\n';
  }
  if (report.biregular_case) {
    const auto& r = *report.biregular_case;
    err << "biregular mixing: lambda " << real(r.lambda) << ", distinct moduli "
        << r.distinct_moduli << ", simple walk rho " << real(r.usual_walk_rho) << '\n';
  }
  return report.matched ? kExitOk : kExitCheckFailed;
}

int cmd_mix(const RunConfig& config, const Graph& g, std::ostream& out, std::ostream& err) {
  const std::size_t horizon = config.steps.value_or(kDefaultMixHorizon);
  if (horizon == 0) throw Error(ErrorCode::InvalidArgument, "--steps must be positive");
  const DirectedEdgeSpace es = build_edge_space(g);
  const ConvergenceSeries series = chi_squared_series(
      es, horizon, config.vertex_starts ? StartMode::LiftedVertices : StartMode::DirectedEdges);
  const ErgodicityReport ergodic = ergodicity_check(es);

  csv::Table table({"t", "chi_squared", "max_norm", "rate_estimate"});
  for (std::size_t t = 1; t <= horizon; ++t) {
    table.add_row({integer(t), real(series.chi_squared[t - 1]), real(series.max_norm[t - 1]),
                   real(series.rate[t - 1])});
  }
  emit(table, config, out);

  err << "chi-squared at t=" << horizon << ": " << real(series.chi_squared.back())
      << ", tail rate " << real(series.tail_rate) << ", "
      << (ergodic.irreducible ? "irreducible" : "reducible") << ", period " << ergodic.period
      << '\n';
  return kExitOk;
}

int cmd_simulate(const RunConfig& config, const Graph& g, std::ostream& out, std::ostream& err) {
  const std::size_t steps = config.steps.value_or(kDefaultSimulateSteps);
  VertexId start = 0;
  if (!config.start.empty()) {
    const auto found = g.find(config.start);
    if (!found) throw Error(ErrorCode::UnknownVertex, "no vertex labelled '" + config.start + "'");
    start = *found;
  }
  const Distribution mc =
      monte_carlo_distribution(g, start, steps, config.walkers, config.seed, config.threads);
  const Propagation exact = propagate_exact(build_edge_space(g), vertex_delta(g, start), steps);

  csv::Table table({"vertex", "label", "monte_carlo", "exact", "deviation"});
  double worst = 0.0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const double deviation = std::abs(mc.values[v] - exact.vertex.values[v]);
    worst = std::max(worst, deviation);
    table.add_row({integer(v), g.label(v), real(mc.values[v]), real(exact.vertex.values[v]),
                   real(deviation)});
  }
  emit(table, config, out);
  err << config.walkers << " walkers, " << steps << " steps from '" << g.label(start)
      << "': max deviation " << real(worst) << '\n';
  return kExitOk;
}

int cmd_laplacian(const RunConfig& config, const Graph& g, std::ostream& out, std::ostream& err) {
  const LaplacianPair pair = compare_lambda1(g);
  csv::Table table({"lambda1_L", "lambda1_L_tilde", "chung_bound", "inequality_ok"});
  table.add_row({real(pair.lambda1_L), real(pair.lambda1_L_tilde), real(pair.chung_bound),
                 csv::format_bool(pair.inequality_ok)});
  emit(table, config, out);
  err << "lambda1(L~) = " << real(pair.lambda1_L_tilde) << " vs lambda1(L) = "
      << real(pair.lambda1_L) << (pair.inequality_ok ? " (holds)" : " (VIOLATED)") << '\n';
  return pair.inequality_ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Hooks& hooks) {
  CLI::App app{"Non-backtracking random walk toolkit", "nbwalk"};
  app.require_subcommand(1);
  RunConfig config;

  auto add_common = [&config](CLI::App* sub) {
    sub->add_option("graph-file", config.input, "Edge list, one 'u v' pair per line")->required();
    sub->add_option("--out", config.out, "Write CSV here instead of stdout");
  };
  auto add_tol = [&config](CLI::App* sub) {
    sub->add_option("--tol", config.tol, "Pass threshold override")->check(CLI::PositiveNumber);
  };
  auto add_weights = [&config](CLI::App* sub) {
    sub->add_option("--weights", config.weights, "unit, degree, or a weight file");
    sub->add_option("--u-grid", config.u_grid, "Sample points as a:b:count");
  };

  add_common(app.add_subcommand("info", "Graph statistics, degree profile and ergodicity"));
  CLI::App* ihara = app.add_subcommand("ihara-check", "Unweighted and weighted Ihara identities");
  add_common(ihara);
  add_weights(ihara);
  add_tol(ihara);
  CLI::App* decomp = app.add_subcommand("decomp-check", "Block decomposition of the weighted operator");
  add_common(decomp);
  add_weights(decomp);
  add_tol(decomp);
  CLI::App* spectrum = app.add_subcommand("spectrum", "Spectrum of the transition operator");
  add_common(spectrum);
  add_tol(spectrum);
  spectrum->add_option("--method", config.method, "closed-form, dense or both");
  CLI::App* mix = app.add_subcommand("mix", "Chi-squared convergence series");
  add_common(mix);
  mix->add_option("--steps", config.steps, "Horizon T");
  mix->add_flag("--vertex-starts", config.vertex_starts, "Start from lifted vertex indicators");
  CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo walk against the exact kernel");
  add_common(simulate);
  simulate->add_option("--steps", config.steps, "Walk length");
  simulate->add_option("--walkers", config.walkers, "Number of walkers")->check(CLI::PositiveNumber);
  simulate->add_option("--seed", config.seed, "Master seed");
  simulate->add_option("--start", config.start, "Start vertex label");
  simulate->add_option("--threads", config.threads, "Worker threads")->check(CLI::PositiveNumber);
  add_common(app.add_subcommand("laplacian-compare", "lambda1 of the two normalized Laplacians"));

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << kGrammar;
    return kExitInputError;
  }
  config.subcommand = app.get_subcommands().front()->get_name();

  try {
    const Graph g = read_edge_list(config.input);
    if (config.subcommand == "info") return cmd_info(config, g, out, err);
    if (config.subcommand == "ihara-check") return cmd_ihara(config, g, out, err, hooks);
    if (config.subcommand == "decomp-check") return cmd_decomp(config, g, out, err);
    if (config.subcommand == "spectrum") return cmd_spectrum(config, g, out, err);
    if (config.subcommand == "mix") return cmd_mix(config, g, out, err);
    if (config.subcommand == "simulate") return cmd_simulate(config, g, out, err);
    return cmd_laplacian(config, g, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace nbwalk::cli
