#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "relspin/entanglement.hpp"
#include "relspin/states.hpp"

namespace relspin {

/// Thrown when a file cannot be read or written (distinct from invalid
/// parameters so the command line tool can map the two to different exit
/// codes).
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An inclusive linear grid: count values from start to stop (a single value
/// when count == 1, in which case stop is ignored).
struct Range {
  double start = 0.0;
  double stop = 0.0;
  int count = 1;

  double value(int i) const {
    return count == 1 ? start : start + (stop - start) * i / (count - 1);
  }
};

/// Parses "start:stop:count". Throws std::invalid_argument on malformed input
/// or count < 1.
Range parse_range(const std::string& text);

/// Parameters of a sweep over the boosted Bell-type momentum state. Any of
/// the four physical parameters may be a grid; rows enumerate the cartesian
/// product with mass outermost and phi innermost. The defaults put the state
/// deep in the asymptotic regime (p/m = 1e4, xi = 20).
struct ScenarioConfig {
  Range mass{1.0, 1.0, 1};
  Range momentum{1e4, 1e4, 1};
  Range rapidity{20.0, 20.0, 1};
  Range phi{0.0, M_PI / 2, 13};
  std::string format = "csv";  // "csv" or "json"
  std::string out;             // output path; empty writes to stdout
  std::uint64_t seed = 0;      // base seed for the Bell optimizer
  bool emit_rho = false;       // include each density matrix in JSON rows
};

/// Throws std::invalid_argument if the config is malformed (unknown format,
/// non-finite or empty ranges, |rapidity| > 300).
void validate_config(const ScenarioConfig& config);

/// Reads `key = value` lines into a config (starting from `base`). Blank
/// lines and lines starting with '#' are skipped. Keys: mass, momentum,
/// rapidity, phi (single values), mass_range, momentum_range, rapidity_range,
/// phi_range (start:stop:count), format, out, seed, emit_rho. Unknown keys or
/// unparsable values throw std::invalid_argument; an unreadable file throws
/// IoError.
ScenarioConfig load_config_file(const std::string& path, ScenarioConfig base = {});

/// One evaluated grid point.
struct SweepRow {
  double mass = 0.0;
  double momentum = 0.0;
  double rapidity = 0.0;
  double phi = 0.0;
  double concurrence = 0.0;
  double bell_max_oracle = 0.0;
  double bell_max_opt = 0.0;
  std::string nearest_reference;
  double reference_distance = 0.0;
  SpinDensityMatrix rho;
};

/// Evaluates every grid point: builds the Bell-type momentum state, boosts
/// it, reduces over momenta and computes concurrence plus both Bell maxima.
/// Deterministic for a fixed config (per-row optimizer seeds derive from
/// config.seed and the row index).
std::vector<SweepRow> run_sweep(const ScenarioConfig& config);

/// Bell curve: the phi grid evaluated at the first mass/momentum/rapidity
/// values, sorted by concurrence ascending, with a flag telling whether the
/// optimized Bell maximum is monotone non-decreasing in concurrence (up to
/// 1e-9 slack).
struct BellCurve {
  std::vector<SweepRow> rows;
  bool monotone_non_decreasing = true;
};

BellCurve run_bell_curve(const ScenarioConfig& config);

/// CSV with header `m,p,xi,phi,concurrence,bell_max_oracle,bell_max_opt`, one
/// row per grid point, 17 significant digits, LF line endings. The bell-curve
/// variant prepends a `# monotone_non_decreasing=...` comment line.
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);
void write_bell_curve_csv(std::ostream& os, const BellCurve& curve);

/// JSON documents carrying the config echo and all row fields (including the
/// nearest reference state and, when config.emit_rho is set, the density
/// matrix itself).
nlohmann::ordered_json sweep_to_json(const ScenarioConfig& config,
                                     const std::vector<SweepRow>& rows);
nlohmann::ordered_json bell_curve_to_json(const ScenarioConfig& config, const BellCurve& curve);

/// Renders rows in the configured format and writes them to config.out (or
/// stdout when empty). Throws IoError when the file cannot be written.
void write_output(const ScenarioConfig& config, const std::vector<SweepRow>& rows);
void write_output(const ScenarioConfig& config, const BellCurve& curve);

}  // namespace relspin
