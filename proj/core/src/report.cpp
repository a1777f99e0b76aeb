// Copyright 2026 The qdt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qdt/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace qdt {

namespace {

using nlohmann::json;

void write_text_file(const std::filesystem::path& file,
                     const std::string& text) {
  std::ofstream out(file, std::ios::binary);  // binary: LF endings everywhere
  if (!out) {
    throw std::runtime_error("cannot open " + file.string() + " for writing");
  }
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) {
    throw std::runtime_error("write failed for " + file.string());
  }
}

json config_json(const ExperimentConfig& c) {
  json j;
  j["experiment"] = c.experiment;
  j["n_qubits"] = c.n_qubits;
  j["n_candidates"] = c.n_candidates;
  j["n_observables"] = c.n_observables;
  j["n_trials"] = c.n_trials;
  j["p_threshold"] = c.p_threshold;
  j["max_shots"] = c.max_shots;
  json strategies = json::array();
  for (Strategy s : c.strategies) strategies.push_back(strategy_name(s));
  j["strategies"] = std::move(strategies);
  j["noise_sigma"] = c.noise_sigma;
  j["prob_floor"] = c.prob_floor;
  j["master_seed"] = c.master_seed;
  j["range_min"] = c.range_min;
  j["range_max"] = c.range_max;
  j["plateau_states"] = c.plateau_states;
  j["train_per_class"] = c.train_per_class;
  j["use_hamiltonian_pool"] = c.use_hamiltonian_pool;
  j["use_random_pool"] = c.use_random_pool;
  j["bank_dir"] = c.bank_dir;
  json families = json::array();
  for (Family f : c.families) families.push_back(family_name(f));
  j["families"] = std::move(families);
  j["out_dir"] = c.out_dir;
  j["write_svg"] = c.write_svg;
  return j;
}

json series_json(const QuantileSeries& q) {
  for (std::size_t s = 0; s < q.size(); ++s) {
    if (!(q.q25[s] <= q.median[s] && q.median[s] <= q.q75[s])) {
      throw std::logic_error("quantile series out of order at emit");
    }
  }
  return json{{"q25", q.q25}, {"median", q.median}, {"q75", q.q75}};
}

// --- minimal SVG line/band plots -----------------------------------------

struct PlotSeries {
  std::string label;
  std::vector<double> x, y;
  std::vector<double> band_lo, band_hi;  // empty = no band
};

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                    "#9467bd", "#ff7f0e"};

double nice_step(double span, int target_ticks) {
  const double raw = span / std::max(target_ticks, 1);
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    if (raw <= m * mag) return m * mag;
  }
  return 10.0 * mag;
}

std::string render_svg(const std::string& title, const std::string& x_label,
                       const std::string& y_label,
                       std::vector<PlotSeries> series, bool log_y) {
  constexpr double kW = 800, kH = 500;
  constexpr double kL = 78, kR = 16, kT = 40, kB = 54;

  double x_min = 1e300, x_max = -1e300, y_min = 1e300, y_max = -1e300;
  double y_pos_min = 1e300;  // smallest positive, for the log floor
  for (const auto& s : series) {
    for (double v : s.x) {
      x_min = std::min(x_min, v);
      x_max = std::max(x_max, v);
    }
    auto scan = [&](const std::vector<double>& ys) {
      for (double v : ys) {
        if (v > 0.0) y_pos_min = std::min(y_pos_min, v);
        y_min = std::min(y_min, v);
        y_max = std::max(y_max, v);
      }
    };
    scan(s.y);
    scan(s.band_lo);
    scan(s.band_hi);
  }
  if (x_max <= x_min) x_max = x_min + 1.0;
  if (log_y) {
    if (y_pos_min >= 1e300) y_pos_min = 1e-6;
    y_min = std::max(y_pos_min * 0.5, 1e-12);
    if (y_max <= y_min) y_max = y_min * 10.0;
  } else if (y_max <= y_min) {
    y_max = y_min + 1.0;
  }

  const auto sx = [&](double v) {
    return kL + (v - x_min) / (x_max - x_min) * (kW - kL - kR);
  };
  const auto sy = [&](double v) {
    if (log_y) {
      v = std::max(v, y_min);
      const double t =
          (std::log10(v) - std::log10(y_min)) /
          (std::log10(y_max) - std::log10(y_min));
      return kH - kB - t * (kH - kT - kB);
    }
    const double t = (v - y_min) / (y_max - y_min);
    return kH - kB - t * (kH - kT - kB);
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 "
      << format_double(kW) << " " << format_double(kH) << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << format_double(kW / 2) << "\" y=\"24\" "
      << "text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">"
      << title << "</text>\n";

  // Axes and ticks.
  svg << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#333\">\n";
  if (log_y) {
    const int d_lo = static_cast<int>(std::ceil(std::log10(y_min) - 1e-9));
    const int d_hi = static_cast<int>(std::floor(std::log10(y_max) + 1e-9));
    for (int d = d_lo; d <= d_hi; ++d) {
      const double v = std::pow(10.0, d);
      const double yy = sy(v);
      svg << "<line x1=\"" << format_double(kL) << "\" y1=\""
          << format_double(yy) << "\" x2=\"" << format_double(kW - kR)
          << "\" y2=\"" << format_double(yy)
          << "\" stroke=\"#ddd\" stroke-width=\"1\"/>\n";
      svg << "<text x=\"" << format_double(kL - 6) << "\" y=\""
          << format_double(yy + 4) << "\" text-anchor=\"end\">1e" << d
          << "</text>\n";
    }
  } else {
    const double step = nice_step(y_max - y_min, 6);
    for (double v = std::ceil(y_min / step) * step; v <= y_max + 1e-12;
         v += step) {
      const double yy = sy(v);
      svg << "<line x1=\"" << format_double(kL) << "\" y1=\""
          << format_double(yy) << "\" x2=\"" << format_double(kW - kR)
          << "\" y2=\"" << format_double(yy)
          << "\" stroke=\"#ddd\" stroke-width=\"1\"/>\n";
      svg << "<text x=\"" << format_double(kL - 6) << "\" y=\""
          << format_double(yy + 4) << "\" text-anchor=\"end\">"
          << format_double(v) << "</text>\n";
    }
  }
  const double x_step = nice_step(x_max - x_min, 8);
  for (double v = std::ceil(x_min / x_step) * x_step; v <= x_max + 1e-12;
       v += x_step) {
    const double xx = sx(v);
    svg << "<line x1=\"" << format_double(xx) << "\" y1=\""
        << format_double(kH - kB) << "\" x2=\"" << format_double(xx)
        << "\" y2=\"" << format_double(kH - kB + 4)
        << "\" stroke=\"#333\"/>\n";
    svg << "<text x=\"" << format_double(xx) << "\" y=\""
        << format_double(kH - kB + 18) << "\" text-anchor=\"middle\">"
        << format_double(v) << "</text>\n";
  }
  svg << "<text x=\"" << format_double((kL + kW - kR) / 2) << "\" y=\""
      << format_double(kH - 12) << "\" text-anchor=\"middle\">" << x_label
      << "</text>\n";
  svg << "<text x=\"18\" y=\"" << format_double((kT + kH - kB) / 2)
      << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
      << format_double((kT + kH - kB) / 2) << ")\">" << y_label
      << "</text>\n";
  svg << "</g>\n";
  svg << "<rect x=\"" << format_double(kL) << "\" y=\"" << format_double(kT)
      << "\" width=\"" << format_double(kW - kL - kR) << "\" height=\""
      << format_double(kH - kT - kB)
      << "\" fill=\"none\" stroke=\"#333\"/>\n";

  for (std::size_t i = 0; i < series.size(); ++i) {
    const auto& s = series[i];
    const char* color = kPalette[i % (sizeof(kPalette) / sizeof(*kPalette))];
    if (!s.band_lo.empty()) {
      svg << "<path d=\"";
      for (std::size_t k = 0; k < s.x.size(); ++k) {
        svg << (k == 0 ? "M" : "L") << format_double(sx(s.x[k])) << " "
            << format_double(sy(s.band_hi[k]));
      }
      for (std::size_t k = s.x.size(); k-- > 0;) {
        svg << "L" << format_double(sx(s.x[k])) << " "
            << format_double(sy(s.band_lo[k]));
      }
      svg << "Z\" fill=\"" << color << "\" fill-opacity=\"0.15\" "
          << "stroke=\"none\"/>\n";
    }
    svg << "<polyline points=\"";
    for (std::size_t k = 0; k < s.x.size(); ++k) {
      svg << format_double(sx(s.x[k])) << "," << format_double(sy(s.y[k]))
          << " ";
    }
    svg << "\" fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.8\"/>\n";
    const double ly = kT + 16 + 16 * static_cast<double>(i);
    svg << "<line x1=\"" << format_double(kL + 10) << "\" y1=\""
        << format_double(ly - 4) << "\" x2=\"" << format_double(kL + 34)
        << "\" y2=\"" << format_double(ly - 4) << "\" stroke=\"" << color
        << "\" stroke-width=\"1.8\"/>\n";
    svg << "<text x=\"" << format_double(kL + 40) << "\" y=\""
        << format_double(ly)
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << s.label
        << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

std::vector<double> iota_x(std::size_t n) {
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = static_cast<double>(i);
  return x;
}

// shots.csv shared by the search and classify experiments; `arm` is the
// strategy name or the observable-pool name.
std::string shots_csv(
    const std::vector<std::pair<std::string, const std::vector<RunTrace>*>>&
        arms) {
  std::string csv = "trial,shot,strategy,observable_index,outcome,p_value\n";
  for (const auto& [arm, traces] : arms) {
    for (std::size_t t = 0; t < traces->size(); ++t) {
      for (const ShotRecord& r : (*traces)[t].shots) {
        csv += std::to_string(t);
        csv += ',';
        csv += std::to_string(r.shot);
        csv += ',';
        csv += arm;
        csv += ',';
        csv += std::to_string(r.observable);
        csv += ',';
        csv += std::to_string(outcome_sign(r.outcome));
        csv += ',';
        csv += format_double(r.p_value);
        csv += '\n';
      }
    }
  }
  return csv;
}

std::filesystem::path prepare_dir(const EmitOptions& options) {
  std::filesystem::path dir =
      options.out_dir.empty() ? std::filesystem::path(".") : options.out_dir;
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

std::vector<std::filesystem::path> emit_report(const SearchResult& result,
                                               const EmitOptions& options) {
  const auto dir = prepare_dir(options);
  std::vector<std::filesystem::path> written;

  std::vector<std::pair<std::string, const std::vector<RunTrace>*>> arms;
  for (const auto& s : result.strategies) {
    arms.emplace_back(strategy_name(s.strategy), &s.traces);
  }
  const auto csv_path = dir / "shots.csv";
  write_text_file(csv_path, shots_csv(arms));
  written.push_back(csv_path);

  json summary;
  summary["schema_version"] = 1;
  summary["experiment"] = "search";
  summary["config"] = config_json(result.config);
  json strategies = json::array();
  for (const auto& s : result.strategies) {
    json js;
    js["strategy"] = strategy_name(s.strategy);
    js["median_shots_to_threshold"] = s.median_shots;
    js["n_converged"] = s.n_converged;
    js["accuracy"] = s.accuracy;
    js["shots_to_threshold"] = s.shots_to_threshold;
    js["pvalue_quantiles"] = series_json(s.pvalues);
    strategies.push_back(std::move(js));
  }
  summary["results"] = {{"strategies", std::move(strategies)},
                        {"non_convergence_sentinel",
                         non_convergence_sentinel(result.config.max_shots)}};
  const auto json_path = dir / "summary.json";
  write_text_file(json_path, summary.dump(2) + "\n");
  written.push_back(json_path);

  if (options.svg) {
    std::vector<PlotSeries> series;
    for (const auto& s : result.strategies) {
      PlotSeries ps;
      ps.label = strategy_name(s.strategy);
      ps.x = iota_x(s.pvalues.size());
      ps.y = s.pvalues.median;
      ps.band_lo = s.pvalues.q25;
      ps.band_hi = s.pvalues.q75;
      series.push_back(std::move(ps));
    }
    const auto svg_path = dir / "median_pvalue.svg";
    write_text_file(svg_path,
                    render_svg("median p-value vs shots", "shots", "p-value",
                               std::move(series), /*log_y=*/true));
    written.push_back(svg_path);
  }
  return written;
}

std::vector<std::filesystem::path> emit_report(const ScalingResult& result,
                                               const EmitOptions& options) {
  const auto dir = prepare_dir(options);
  std::vector<std::filesystem::path> written;

  std::string csv = "n_qubits,mean_gain,predicted_gain\n";
  for (const auto& p : result.points) {
    csv += std::to_string(p.n_qubits);
    csv += ',';
    csv += format_double(p.mean_gain);
    csv += ',';
    csv += format_double(p.predicted_gain);
    csv += '\n';
  }
  const auto csv_path = dir / "series.csv";
  write_text_file(csv_path, csv);
  written.push_back(csv_path);

  json summary;
  summary["schema_version"] = 1;
  summary["experiment"] = "scaling";
  summary["config"] = config_json(result.config);
  json points = json::array();
  for (const auto& p : result.points) {
    points.push_back({{"n_qubits", p.n_qubits},
                      {"mean_gain", p.mean_gain},
                      {"predicted_gain", p.predicted_gain}});
  }
  summary["results"] = {{"points", std::move(points)},
                        {"log2_slope", result.log2_slope}};
  const auto json_path = dir / "summary.json";
  write_text_file(json_path, summary.dump(2) + "\n");
  written.push_back(json_path);

  if (options.svg) {
    PlotSeries mean{"measured", {}, {}, {}, {}};
    PlotSeries pred{"predicted", {}, {}, {}, {}};
    for (const auto& p : result.points) {
      mean.x.push_back(p.n_qubits);
      mean.y.push_back(p.mean_gain);
      pred.x.push_back(p.n_qubits);
      pred.y.push_back(p.predicted_gain);
    }
    const auto svg_path = dir / "scaling.svg";
    write_text_file(svg_path,
                    render_svg("mean information per shot vs qubits",
                               "qubits", "bits per shot",
                               {std::move(mean), std::move(pred)},
                               /*log_y=*/true));
    written.push_back(svg_path);
  }
  return written;
}

std::vector<std::filesystem::path> emit_report(const BiasResult& result,
                                               const EmitOptions& options) {
  const auto dir = prepare_dir(options);
  std::vector<std::filesystem::path> written;

  std::string csv = "n_candidates,mean_gain,predicted_gain\n";
  for (const auto& p : result.points) {
    csv += std::to_string(p.n_candidates);
    csv += ',';
    csv += format_double(p.mean_gain);
    csv += ',';
    csv += format_double(p.predicted_gain);
    csv += '\n';
  }
  const auto csv_path = dir / "series.csv";
  write_text_file(csv_path, csv);
  written.push_back(csv_path);

  json summary;
  summary["schema_version"] = 1;
  summary["experiment"] = "bias";
  summary["config"] = config_json(result.config);
  json points = json::array();
  for (const auto& p : result.points) {
    points.push_back({{"n_candidates", p.n_candidates},
                      {"mean_gain", p.mean_gain},
                      {"predicted_gain", p.predicted_gain}});
  }
  summary["results"] = {{"points", std::move(points)},
                        {"plateau_gain", result.plateau_gain}};
  const auto json_path = dir / "summary.json";
  write_text_file(json_path, summary.dump(2) + "\n");
  written.push_back(json_path);

  if (options.svg) {
    PlotSeries mean{"measured", {}, {}, {}, {}};
    PlotSeries pred{"predicted", {}, {}, {}, {}};
    for (const auto& p : result.points) {
      mean.x.push_back(static_cast<double>(p.n_candidates));
      mean.y.push_back(p.mean_gain);
      pred.x.push_back(static_cast<double>(p.n_candidates));
      pred.y.push_back(p.predicted_gain);
    }
    const auto svg_path = dir / "bias.svg";
    write_text_file(
        svg_path,
        render_svg("mean information per shot vs candidate count",
                   "candidate states", "bits per shot",
                   {std::move(mean), std::move(pred)}, /*log_y=*/false));
    written.push_back(svg_path);
  }
  return written;
}

std::vector<std::filesystem::path> emit_report(const ClassifyResult& result,
                                               const EmitOptions& options) {
  const auto dir = prepare_dir(options);
  std::vector<std::filesystem::path> written;

  std::vector<std::pair<std::string, const std::vector<RunTrace>*>> arms;
  for (const auto& p : result.pools) {
    arms.emplace_back(p.pool_name, &p.traces);
  }
  const auto csv_path = dir / "shots.csv";
  write_text_file(csv_path, shots_csv(arms));
  written.push_back(csv_path);

  json summary;
  summary["schema_version"] = 1;
  summary["experiment"] = "classify";
  summary["config"] = config_json(result.config);
  json pools = json::array();
  for (const auto& p : result.pools) {
    json jp;
    jp["pool"] = p.pool_name;
    jp["pool_size"] = p.pool_size;
    jp["median_shots_to_threshold"] = p.median_shots;
    jp["n_converged"] = p.n_converged;
    jp["accuracy"] = p.accuracy;
    jp["shots_to_threshold"] = p.shots_to_threshold;
    jp["true_class"] = p.true_class;
    json predictions = json::array();
    for (const auto& tr : p.traces) predictions.push_back(tr.prediction);
    jp["predicted_class"] = std::move(predictions);
    jp["pvalue_quantiles"] = series_json(p.pvalues);
    pools.push_back(std::move(jp));
  }
  summary["results"] = {
      {"pools", std::move(pools)},
      {"n_test_states", result.n_test_states},
      {"split",
       {{"rule", "first train_per_class grid points train, rest test"},
        {"train_per_class", result.config.train_per_class}}},
      {"non_convergence_sentinel",
       non_convergence_sentinel(result.config.max_shots)}};
  const auto json_path = dir / "summary.json";
  write_text_file(json_path, summary.dump(2) + "\n");
  written.push_back(json_path);

  if (options.svg) {
    std::vector<PlotSeries> series;
    for (const auto& p : result.pools) {
      PlotSeries ps;
      ps.label = p.pool_name;
      ps.x = iota_x(p.pvalues.size());
      ps.y = p.pvalues.median;
      ps.band_lo = p.pvalues.q25;
      ps.band_hi = p.pvalues.q75;
      series.push_back(std::move(ps));
    }
    const auto svg_path = dir / "median_pvalue.svg";
    write_text_file(svg_path,
                    render_svg("median p-value vs shots", "shots", "p-value",
                               std::move(series), /*log_y=*/true));
    written.push_back(svg_path);
  }
  return written;
}

// --- config JSON -----------------------------------------------------------

std::string config_to_json(const ExperimentConfig& config) {
  return config_json(config).dump(2) + "\n";
}

ExperimentConfig config_from_json_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) {
    throw std::runtime_error("cannot open config file " + file.string());
  }
  json j;
  in >> j;
  if (!j.is_object()) {
    throw std::runtime_error("config file must hold a JSON object");
  }

  ExperimentConfig c;
  for (const auto& [key, value] : j.items()) {
    if (key == "experiment") {
      c.experiment = value.get<std::string>();
    } else if (key == "n_qubits") {
      c.n_qubits = value.get<int>();
    } else if (key == "n_candidates") {
      c.n_candidates = value.get<std::size_t>();
    } else if (key == "n_observables") {
      c.n_observables = value.get<std::size_t>();
    } else if (key == "n_trials") {
      c.n_trials = value.get<int>();
    } else if (key == "p_threshold") {
      c.p_threshold = value.get<double>();
    } else if (key == "max_shots") {
      c.max_shots = value.get<int>();
    } else if (key == "strategies") {
      c.strategies.clear();
      for (const auto& name : value) {
        c.strategies.push_back(strategy_from_name(name.get<std::string>()));
      }
    } else if (key == "noise_sigma") {
      c.noise_sigma = value.get<double>();
    } else if (key == "prob_floor") {
      c.prob_floor = value.get<double>();
    } else if (key == "master_seed") {
      c.master_seed = value.get<std::uint64_t>();
    } else if (key == "range_min") {
      c.range_min = value.get<int>();
    } else if (key == "range_max") {
      c.range_max = value.get<int>();
    } else if (key == "plateau_states") {
      c.plateau_states = value.get<std::size_t>();
    } else if (key == "train_per_class") {
      c.train_per_class = value.get<int>();
    } else if (key == "use_hamiltonian_pool") {
      c.use_hamiltonian_pool = value.get<bool>();
    } else if (key == "use_random_pool") {
      c.use_random_pool = value.get<bool>();
    } else if (key == "bank_dir") {
      c.bank_dir = value.get<std::string>();
    } else if (key == "families") {
      c.families.clear();
      for (const auto& name : value) {
        c.families.push_back(family_from_name(name.get<std::string>()));
      }
    } else if (key == "out_dir") {
      c.out_dir = value.get<std::string>();
    } else if (key == "write_svg") {
      c.write_svg = value.get<bool>();
    } else {
      throw std::runtime_error("unknown config key '" + key + "'");
    }
  }
  return c;
}

}  // namespace qdt
