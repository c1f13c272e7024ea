// config.hpp
//
// Run configuration: a sectioned key = value text file, '#' starts a
// comment. Sections: [metric], [cavity], [thermal], [series], [output].
// The grammar is documented in README.md.
#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "casimir/errors.hpp"
#include "casimir/geometry.hpp"
#include "casimir/metric.hpp"
#include "casimir/thermal.hpp"

namespace casimir {

/// Parse or semantic error; the message carries "<source>:<line>: ".
class ConfigError : public InputError {
public:
  using InputError::InputError;
};

enum class TemperatureMode { coordinate, proper, reduced };

struct ThermalConfig {
  bool present = false;
  TemperatureMode mode = TemperatureMode::proper;
  std::optional<double> value;
  std::optional<double> from;
  std::optional<double> to;
  int points = 1;
  bool log = false;
};

struct OutputConfig {
  std::string csv;     // empty: standard output
  int precision = 12;  // significant digits
};

struct RunConfig {
  MetricModel model = MetricModel::minkowski();
  CavitySpec cavity;
  ThermalConfig thermal;
  SeriesControl series;
  OutputConfig output;
};

RunConfig parse_config(std::istream& in, const std::string& source = "<config>");
RunConfig load_config(const std::string& path);

ThermalPoint make_point(TemperatureMode mode, double value, const ThermalSetup& setup);

}  // namespace casimir
