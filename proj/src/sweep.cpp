#include "relspin/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <tuple>

namespace relspin {

namespace {

double parse_double(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(what + ": cannot parse number '" + text + "'");
  }
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  return s.substr(begin, s.find_last_not_of(" \t\r") - begin + 1);
}

void require_finite_range(const Range& r, const std::string& name) {
  if (!std::isfinite(r.start) || !std::isfinite(r.stop)) {
    throw std::invalid_argument("config: " + name + " range must be finite");
  }
  if (r.count < 1) {
    throw std::invalid_argument("config: " + name + " range needs count >= 1");
  }
}

std::string format_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::uint64_t row_seed(std::uint64_t base, std::size_t index) {
  // splitmix-style stream separation so every row gets an independent but
  // reproducible optimizer seed
  return base + 0x9E3779B97F4A7C15ull * (index + 1);
}

SweepRow evaluate_point(double m, double p, double xi, double phi, std::uint64_t seed) {
  const TwoParticleState state = bell_momentum_state(m, p, phi);
  const TwoParticleState boosted = boost_state(state, BoostZ{xi});
  const SpinDensityMatrix rho = reduce_over_momentum(boosted);
  SweepRow row;
  row.mass = m;
  row.momentum = p;
  row.rapidity = xi;
  row.phi = phi;
  row.concurrence = concurrence(rho);
  row.bell_max_oracle = bell_max_oracle(rho);
  row.bell_max_opt = bell_max_optimize(rho, seed).value;
  std::tie(row.nearest_reference, row.reference_distance) = nearest_reference(rho);
  row.rho = rho;
  return row;
}

nlohmann::ordered_json range_to_json(const Range& r) {
  return nlohmann::ordered_json{{"start", r.start}, {"stop", r.stop}, {"count", r.count}};
}

nlohmann::ordered_json config_to_json(const ScenarioConfig& config) {
  return nlohmann::ordered_json{{"mass", range_to_json(config.mass)},
                                {"momentum", range_to_json(config.momentum)},
                                {"rapidity", range_to_json(config.rapidity)},
                                {"phi", range_to_json(config.phi)},
                                {"seed", config.seed}};
}

nlohmann::ordered_json row_to_json(const SweepRow& row, bool emit_rho) {
  nlohmann::ordered_json j{
      {"m", row.mass},
      {"p", row.momentum},
      {"xi", row.rapidity},
      {"phi", row.phi},
      {"concurrence", row.concurrence},
      {"bell_max_oracle", row.bell_max_oracle},
      {"bell_max_opt", row.bell_max_opt},
      {"nearest_reference",
       {{"name", row.nearest_reference}, {"trace_distance", row.reference_distance}}}};
  if (emit_rho) {
    nlohmann::json rho;
    to_json(rho, row.rho);
    j["rho"] = rho;
  }
  return j;
}

void write_rendered(const ScenarioConfig& config, const std::string& rendered) {
  if (config.out.empty()) {
    std::cout << rendered;
    std::cout.flush();
    return;
  }
  std::ofstream file(config.out, std::ios::binary);
  if (!file) {
    throw IoError("cannot open output file '" + config.out + "'");
  }
  file << rendered;
  file.flush();
  if (!file) {
    throw IoError("failed writing output file '" + config.out + "'");
  }
}

std::string render(const ScenarioConfig& config, const std::vector<SweepRow>& rows,
                   const BellCurve* curve) {
  std::ostringstream os;
  if (config.format == "csv") {
    if (curve != nullptr) {
      write_bell_curve_csv(os, *curve);
    } else {
      write_sweep_csv(os, rows);
    }
  } else {
    const nlohmann::ordered_json j =
        curve != nullptr ? bell_curve_to_json(config, *curve) : sweep_to_json(config, rows);
    os << j.dump(2) << '\n';
  }
  return os.str();
}

}  // namespace

Range parse_range(const std::string& text) {
  std::vector<std::string> parts;
  std::string::size_type begin = 0;
  while (true) {
    const auto colon = text.find(':', begin);
    parts.push_back(text.substr(begin, colon - begin));
    if (colon == std::string::npos) break;
    begin = colon + 1;
  }
  if (parts.size() != 3) {
    throw std::invalid_argument("range: expected start:stop:count, got '" + text + "'");
  }
  Range r;
  r.start = parse_double(parts[0], "range start");
  r.stop = parse_double(parts[1], "range stop");
  try {
    std::size_t used = 0;
    r.count = std::stoi(parts[2], &used);
    if (used != parts[2].size()) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw std::invalid_argument("range: cannot parse count '" + parts[2] + "'");
  }
  if (r.count < 1) throw std::invalid_argument("range: count must be >= 1");
  return r;
}

void validate_config(const ScenarioConfig& config) {
  require_finite_range(config.mass, "mass");
  require_finite_range(config.momentum, "momentum");
  require_finite_range(config.rapidity, "rapidity");
  require_finite_range(config.phi, "phi");
  for (int i = 0; i < config.mass.count; ++i) {
    if (!(config.mass.value(i) > 0.0)) {
      throw std::invalid_argument("config: mass values must be positive");
    }
  }
  for (int i = 0; i < config.momentum.count; ++i) {
    if (!(config.momentum.value(i) > 0.0)) {
      throw std::invalid_argument("config: momentum values must be positive");
    }
  }
  for (int i = 0; i < config.rapidity.count; ++i) {
    if (std::abs(config.rapidity.value(i)) > 300.0) {
      throw std::invalid_argument("config: |rapidity| must be <= 300");
    }
  }
  if (config.format != "csv" && config.format != "json") {
    throw std::invalid_argument("config: format must be 'csv' or 'json'");
  }
}

ScenarioConfig load_config_file(const std::string& path, ScenarioConfig base) {
  std::ifstream file(path);
  if (!file) {
    throw IoError("cannot read config file '" + path + "'");
  }
  ScenarioConfig config = std::move(base);
  std::string line;
  int line_number = 0;
  while (std::getline(file, line)) {
    ++line_number;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(line_number) +
                                  ": expected key = value");
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key == "mass") {
      config.mass = Range{parse_double(value, key), 0.0, 1};
    } else if (key == "momentum") {
      config.momentum = Range{parse_double(value, key), 0.0, 1};
    } else if (key == "rapidity") {
      config.rapidity = Range{parse_double(value, key), 0.0, 1};
    } else if (key == "phi") {
      config.phi = Range{parse_double(value, key), 0.0, 1};
    } else if (key == "mass_range") {
      config.mass = parse_range(value);
    } else if (key == "momentum_range") {
      config.momentum = parse_range(value);
    } else if (key == "rapidity_range") {
      config.rapidity = parse_range(value);
    } else if (key == "phi_range") {
      config.phi = parse_range(value);
    } else if (key == "format") {
      config.format = value;
    } else if (key == "out") {
      config.out = value;
    } else if (key == "seed") {
      try {
        config.seed = std::stoull(value);
      } catch (const std::exception&) {
        throw std::invalid_argument("config: cannot parse seed '" + value + "'");
      }
    } else if (key == "emit_rho") {
      if (value == "true" || value == "1") {
        config.emit_rho = true;
      } else if (value == "false" || value == "0") {
        config.emit_rho = false;
      } else {
        throw std::invalid_argument("config: emit_rho must be true or false");
      }
    } else {
      throw std::invalid_argument("config: unknown key '" + key + "'");
    }
  }
  return config;
}

std::vector<SweepRow> run_sweep(const ScenarioConfig& config) {
  validate_config(config);
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(config.mass.count) * config.momentum.count *
               config.rapidity.count * config.phi.count);
  for (int im = 0; im < config.mass.count; ++im) {
    for (int ip = 0; ip < config.momentum.count; ++ip) {
      for (int ix = 0; ix < config.rapidity.count; ++ix) {
        for (int iq = 0; iq < config.phi.count; ++iq) {
          rows.push_back(evaluate_point(config.mass.value(im), config.momentum.value(ip),
                                        config.rapidity.value(ix), config.phi.value(iq),
                                        row_seed(config.seed, rows.size())));
        }
      }
    }
  }
  return rows;
}

BellCurve run_bell_curve(const ScenarioConfig& config) {
  validate_config(config);
  BellCurve curve;
  curve.rows.reserve(config.phi.count);
  for (int iq = 0; iq < config.phi.count; ++iq) {
    curve.rows.push_back(evaluate_point(config.mass.value(0), config.momentum.value(0),
                                        config.rapidity.value(0), config.phi.value(iq),
                                        row_seed(config.seed, curve.rows.size())));
  }
  std::sort(curve.rows.begin(), curve.rows.end(),
            [](const SweepRow& a, const SweepRow& b) { return a.concurrence < b.concurrence; });
  for (std::size_t i = 0; i + 1 < curve.rows.size(); ++i) {
    if (curve.rows[i + 1].bell_max_opt < curve.rows[i].bell_max_opt - 1e-9) {
      curve.monotone_non_decreasing = false;
      break;
    }
  }
  return curve;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "m,p,xi,phi,concurrence,bell_max_oracle,bell_max_opt\n";
  for (const SweepRow& row : rows) {
    os << format_value(row.mass) << ',' << format_value(row.momentum) << ','
       << format_value(row.rapidity) << ',' << format_value(row.phi) << ','
       << format_value(row.concurrence) << ',' << format_value(row.bell_max_oracle) << ','
       << format_value(row.bell_max_opt) << '\n';
  }
}

void write_bell_curve_csv(std::ostream& os, const BellCurve& curve) {
  os << "# monotone_non_decreasing=" << (curve.monotone_non_decreasing ? "true" : "false")
     << '\n';
  write_sweep_csv(os, curve.rows);
}

nlohmann::ordered_json sweep_to_json(const ScenarioConfig& config,
                                     const std::vector<SweepRow>& rows) {
  nlohmann::ordered_json out{{"config", config_to_json(config)}};
  auto& jrows = out["rows"] = nlohmann::ordered_json::array();
  for (const SweepRow& row : rows) jrows.push_back(row_to_json(row, config.emit_rho));
  return out;
}

nlohmann::ordered_json bell_curve_to_json(const ScenarioConfig& config,
                                          const BellCurve& curve) {
  nlohmann::ordered_json out{{"config", config_to_json(config)},
                             {"monotone_non_decreasing", curve.monotone_non_decreasing}};
  auto& jrows = out["rows"] = nlohmann::ordered_json::array();
  for (const SweepRow& row : curve.rows) jrows.push_back(row_to_json(row, config.emit_rho));
  return out;
}

void write_output(const ScenarioConfig& config, const std::vector<SweepRow>& rows) {
  write_rendered(config, render(config, rows, nullptr));
}

void write_output(const ScenarioConfig& config, const BellCurve& curve) {
  write_rendered(config, render(config, curve.rows, &curve));
}

}  // namespace relspin
