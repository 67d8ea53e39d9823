// laplace-kit: command-line front end for the Laplace transform toolkit.
// Subcommands: transform, invert, check, solve-hypersingular.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "laplacekit/laplacekit.hpp"

namespace lk = laplacekit;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNoConvergence = 3;
constexpr int kExitInconclusive = 4;

struct RunConfig {
  lk::InversionConfig inversion;
  std::string format = "csv";
  std::string output_path;  // empty = stdout
  double height_base = 50.0;
  int height_doublings = 14;

  void rebuild_heights() {
    inversion.truncation_heights =
        lk::InversionConfig::default_heights(height_base, height_doublings);
  }
};

// Flat key=value config file; '#' starts a comment, unknown keys are errors.
void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string trimmed;
    for (char c : line) {
      if (!std::isspace(static_cast<unsigned char>(c))) trimmed.push_back(c);
    }
    if (trimmed.empty()) continue;
    const auto eq = trimmed.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key=value");
    }
    const std::string key = trimmed.substr(0, eq);
    const std::string value = trimmed.substr(eq + 1);
    if (key == "abs-tolerance") {
      cfg.inversion.quadrature.abs_tolerance = std::stod(value);
    } else if (key == "rel-tolerance") {
      cfg.inversion.quadrature.rel_tolerance = std::stod(value);
    } else if (key == "max-subdivisions") {
      cfg.inversion.quadrature.max_subdivisions = std::stoi(value);
    } else if (key == "panel-order") {
      cfg.inversion.quadrature.panel_order = std::stoi(value);
    } else if (key == "sigma") {
      cfg.inversion.sigma = std::stod(value);
    } else if (key == "convergence-rel") {
      cfg.inversion.convergence_rel = std::stod(value);
    } else if (key == "convergence-abs") {
      cfg.inversion.convergence_abs = std::stod(value);
    } else if (key == "height-base") {
      cfg.height_base = std::stod(value);
      cfg.rebuild_heights();
    } else if (key == "height-doublings") {
      cfg.height_doublings = std::stoi(value);
      cfg.rebuild_heights();
    } else if (key == "output-format") {
      cfg.format = value;
    } else if (key == "output-path") {
      cfg.output_path = value;
    } else {
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": unknown key '" +
                                  key + "'");
    }
  }
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::vector<double> parse_time_range(const std::string& spec) {
  // "t0:t1:steps", inclusive linspace.
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() != 3) throw std::invalid_argument("time range must be t0:t1:steps");
  const double t0 = std::stod(parts[0]);
  const double t1 = std::stod(parts[1]);
  const int steps = std::stoi(parts[2]);
  if (steps < 1) throw std::invalid_argument("time range needs steps >= 1");
  std::vector<double> times;
  if (steps == 1) {
    times.push_back(t0);
  } else {
    for (int k = 0; k < steps; ++k) {
      times.push_back(t0 + (t1 - t0) * static_cast<double>(k) / (steps - 1));
    }
  }
  return times;
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(cfg.output_path, std::ios::trunc);
    if (!out) throw std::invalid_argument("cannot open output path: " + cfg.output_path);
    out << text;
  }
}

json report_to_json(const lk::CheckReport& r) {
  json evidence = json::array();
  for (const auto& [probe, value] : r.evidence) {
    evidence.push_back({probe, value});
  }
  return json{{"check-name", r.check_name},
              {"verdict", lk::to_string(r.verdict)},
              {"evidence", evidence},
              {"thresholds-used", r.thresholds_used},
              {"notes", r.notes}};
}

std::string report_to_csv(const lk::CheckReport& r) {
  std::string out;
  out += "# check-name," + r.check_name + "\n";
  out += std::string("# verdict,") + lk::to_string(r.verdict) + "\n";
  for (const auto& [probe, value] : r.evidence) {
    out += "# evidence," + probe + "," + fmt(value) + "\n";
  }
  for (const auto& [name, value] : r.thresholds_used) {
    out += "# threshold," + name + "," + fmt(value) + "\n";
  }
  out += "# notes," + r.notes + "\n";
  return out;
}

int verdict_exit_code(lk::Verdict v) {
  switch (v) {
    case lk::Verdict::pass: return kExitOk;
    case lk::Verdict::fail: return kExitCheckFail;
    case lk::Verdict::inconclusive: return kExitInconclusive;
  }
  return kExitUsage;
}

lk::GridSignal load_signal_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open signal file: " + path);
  std::vector<double> times;
  std::vector<lk::Complex> values;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line[0] == 't') continue;
    std::stringstream ss(line);
    std::string cell;
    std::vector<double> row;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    if (row.size() < 2) throw std::invalid_argument("signal file rows need t,f columns");
    times.push_back(row[0]);
    values.push_back(lk::Complex(row[1], row.size() > 2 ? row[2] : 0.0));
  }
  if (times.size() < 2) throw std::invalid_argument("signal file needs at least 2 samples");
  return lk::GridSignal(times.front(), times[1] - times[0], std::move(values));
}

int cmd_transform(const RunConfig& cfg, const std::string& function,
                  const std::vector<std::string>& point_literals) {
  std::vector<lk::Complex> points;
  for (const auto& lit : point_literals) points.push_back(lk::parse_complex(lit));

  std::function<lk::Complex(lk::Complex)> evaluate;
  if (const lk::CatalogEntry* entry = lk::find_entry(function)) {
    if (entry->f) {
      const auto f = *entry->f;
      const auto env = entry->envelope;
      const auto quad = cfg.inversion.quadrature;
      evaluate = [f, env, quad](lk::Complex p) { return lk::forward_transform(f, env, p, quad); };
    } else {
      const lk::AnalyticMap F = entry->F;
      evaluate = [F](lk::Complex p) { return F(p); };
    }
  } else {
    std::ifstream probe(function);
    if (!probe) {
      std::cerr << "unknown function or signal file: " << function << "\n";
      return kExitUsage;
    }
    const lk::GridSignal signal = load_signal_csv(function);
    evaluate = [signal](lk::Complex p) { return lk::forward_transform(signal, p); };
  }

  std::vector<lk::Complex> values;
  for (const auto& p : points) values.push_back(evaluate(p));

  if (cfg.format == "json") {
    json rows = json::array();
    for (std::size_t k = 0; k < points.size(); ++k) {
      rows.push_back({{"p_re", points[k].real()},
                      {"p_im", points[k].imag()},
                      {"F_re", values[k].real()},
                      {"F_im", values[k].imag()}});
    }
    emit(cfg, rows.dump(2) + "\n");
  } else {
    std::string out = "p_re,p_im,F_re,F_im\n";
    for (std::size_t k = 0; k < points.size(); ++k) {
      out += fmt(points[k].real()) + "," + fmt(points[k].imag()) + "," +
             fmt(values[k].real()) + "," + fmt(values[k].imag()) + "\n";
    }
    emit(cfg, out);
  }
  return kExitOk;
}

int cmd_invert(const RunConfig& cfg, const std::string& transform, double sigma,
               const std::string& times_spec) {
  const lk::CatalogEntry* entry = lk::find_entry(transform);
  if (!entry) {
    std::cerr << "unknown transform: " << transform << "\n";
    return kExitUsage;
  }
  if (sigma < entry->F.abscissa()) {
    std::cerr << "sigma " << sigma << " is below the abscissa of analyticity "
              << entry->F.abscissa() << "\n";
    return kExitUsage;
  }
  lk::InversionConfig inv = cfg.inversion;
  inv.sigma = sigma;
  const std::vector<double> times = parse_time_range(times_spec);

  std::vector<lk::PointInversion> rows;
  rows.reserve(times.size());
  for (double t : times) rows.push_back(lk::invert_point(entry->F, t, inv));

  if (cfg.format == "json") {
    json out = json::array();
    for (std::size_t k = 0; k < times.size(); ++k) {
      out.push_back({{"t", times[k]},
                     {"f_re", rows[k].value.real()},
                     {"f_im", rows[k].value.imag()},
                     {"converged", rows[k].convergence.converged}});
    }
    emit(cfg, out.dump(2) + "\n");
  } else {
    std::string out = "t,f_re,f_im,converged\n";
    for (std::size_t k = 0; k < times.size(); ++k) {
      out += fmt(times[k]) + "," + fmt(rows[k].value.real()) + "," +
             fmt(rows[k].value.imag()) + "," + (rows[k].convergence.converged ? "1" : "0") + "\n";
    }
    emit(cfg, out);
  }
  return kExitOk;
}

int cmd_check(const RunConfig& cfg, const std::string& check, const std::string& transform,
              double b, double ell) {
  const lk::CatalogEntry* entry = lk::find_entry(transform);
  if (!entry) {
    std::cerr << "unknown transform: " << transform << "\n";
    return kExitUsage;
  }
  const std::vector<double> radii = {10.0, 100.0, 1000.0, 10000.0};
  const double sigma0 = entry->F.abscissa();

  lk::CheckReport report;
  if (check == "theorem1") {
    report = lk::check_theorem1(entry->F, radii);
  } else if (check == "lemma1") {
    report = lk::check_lemma1_decay(entry->F, b, radii, cfg.inversion);
  } else if (check == "paley-wiener") {
    report = lk::check_paley_wiener(entry->F, {sigma0, sigma0 + 0.5, sigma0 + 1.0});
  } else if (check == "hausdorff-young") {
    const lk::AnalyticMap F = entry->F;
    auto boundary = [F, sigma0](double s) {
      return F.at_boundary(lk::Complex(sigma0 + 1e-12, s));
    };
    report = lk::check_hausdorff_young(boundary, ell);
  } else if (check == "witness") {
    report = lk::nontransform_witness(entry->F, ell);
  } else {
    std::cerr << "unknown check: " << check << "\n";
    return kExitUsage;
  }

  if (cfg.format == "json") {
    emit(cfg, report_to_json(report).dump(2) + "\n");
  } else {
    emit(cfg, report_to_csv(report));
  }
  return verdict_exit_code(report.verdict);
}

int cmd_solve_hypersingular(const RunConfig& cfg, const std::string& g_name,
                            const std::string& times_spec, bool verify) {
  const lk::CatalogEntry* entry = lk::find_entry(g_name);
  if (!entry) {
    std::cerr << "unknown forcing: " << g_name << "\n";
    return kExitUsage;
  }
  const lk::HypersingularProblem problem(*entry);  // throws for transform-only entries
  const std::vector<double> times = parse_time_range(times_spec);

  const lk::InversionResult h = lk::solve_hypersingular(problem, times, cfg.inversion);

  std::string rows_csv = "t,f_re,f_im,converged\n";
  json rows_json = json::array();
  bool any_unconverged = false;
  for (std::size_t k = 0; k < times.size(); ++k) {
    const lk::Complex v = h.signal.samples[k];
    const bool c = h.per_point[k].converged;
    any_unconverged = any_unconverged || !c;
    rows_csv += fmt(times[k]) + "," + fmt(v.real()) + "," + fmt(v.imag()) + "," +
                (c ? "1" : "0") + "\n";
    rows_json.push_back(
        {{"t", times[k]}, {"f_re", v.real()}, {"f_im", v.imag()}, {"converged", c}});
  }

  std::optional<lk::CheckReport> report;
  if (verify) {
    const std::vector<lk::Complex> probes = {
        {1.0, 0.0}, {2.0, 0.0}, {5.0, 0.0}, {1.0, 1.0}, {2.0, 3.0}};
    report = lk::verify_in_laplace_domain(problem, h, probes);
  }

  if (cfg.format == "json") {
    json out = {{"rows", rows_json}};
    if (report) out["report"] = report_to_json(*report);
    emit(cfg, out.dump(2) + "\n");
  } else {
    std::string out = rows_csv;
    if (report) out += report_to_csv(*report);
    emit(cfg, out);
  }
  if (any_unconverged) return kExitNoConvergence;
  if (report && report->verdict != lk::Verdict::pass) return verdict_exit_code(report->verdict);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"laplace-kit: numerical Laplace transforms, Bromwich inversion, and "
               "transform-hypothesis checks"};
  app.require_subcommand(1);

  std::string config_path;
  std::string format;
  std::string output_path;
  app.add_option("--config", config_path, "flat key=value config file");
  app.add_option("--format", format, "output format: csv or json");
  app.add_option("--output", output_path, "output file path (default stdout)");

  auto* t_cmd = app.add_subcommand("transform", "evaluate F(p) = int_0^inf e^{-pt} f(t) dt");
  std::string t_function;
  std::vector<std::string> t_points;
  t_cmd->add_option("--function", t_function, "catalog name or signal CSV file")->required();
  t_cmd->add_option("--points", t_points, "complex literals a, ai, a+bi")->required();

  auto* i_cmd = app.add_subcommand("invert", "truncated Bromwich inversion on a time grid");
  std::string i_transform, i_times;
  double i_sigma = 0.5;
  i_cmd->add_option("--transform", i_transform, "catalog name")->required();
  i_cmd->add_option("--sigma", i_sigma, "line abscissa (>= sigma0)");
  i_cmd->add_option("--times", i_times, "time range t0:t1:steps")->required();

  auto* c_cmd = app.add_subcommand("check", "run a transform-hypothesis check");
  std::string c_check, c_transform;
  double c_b = 1.5, c_ell = 2.0;
  c_cmd->add_option("check", c_check,
                    "theorem1 | lemma1 | paley-wiener | hausdorff-young | witness")
      ->required();
  c_cmd->add_option("--transform", c_transform, "catalog name")->required();
  c_cmd->add_option("--b", c_b, "decay exponent for lemma1");
  c_cmd->add_option("--ell", c_ell, "Lebesgue exponent for hausdorff-young / witness");

  auto* s_cmd = app.add_subcommand("solve-hypersingular",
                                   "solve h = g + int (t-s)^{-5/4} h via the Laplace domain");
  std::string s_g, s_times;
  bool s_verify = false;
  s_cmd->add_option("--g", s_g, "catalog name of the forcing")->required();
  s_cmd->add_option("--times", s_times, "time range t0:t1:steps")->required();
  s_cmd->add_flag("--verify", s_verify, "append the Laplace-domain residual report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    RunConfig cfg;
    if (config_path.empty()) {
      if (const char* env = std::getenv("LAPLACE_KIT_CONFIG")) config_path = env;
    }
    if (!config_path.empty()) apply_config_file(cfg, config_path);
    if (!format.empty()) cfg.format = format;  // flags override the file
    if (!output_path.empty()) cfg.output_path = output_path;
    if (cfg.format != "csv" && cfg.format != "json") {
      std::cerr << "unknown output format: " << cfg.format << "\n";
      return kExitUsage;
    }

    if (t_cmd->parsed()) return cmd_transform(cfg, t_function, t_points);
    if (i_cmd->parsed()) return cmd_invert(cfg, i_transform, i_sigma, i_times);
    if (c_cmd->parsed()) return cmd_check(cfg, c_check, c_transform, c_b, c_ell);
    if (s_cmd->parsed()) return cmd_solve_hypersingular(cfg, s_g, s_times, s_verify);
    return kExitUsage;
  } catch (const lk::ConvergenceError& e) {
    std::cerr << "numerical non-convergence: " << e.what() << "\n";
    return kExitNoConvergence;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoConvergence;
  }
}
