// config.cpp
#include "casimir/config.hpp"

#include <array>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <vector>

#include "casimir/errors.hpp"

namespace casimir {

namespace {

struct Entry {
  std::string value;
  int line = 0;
};

using Section = std::map<std::string, Entry>;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

class Reader {
public:
  Reader(std::string source, std::map<std::string, Section> sections)
      : source_(std::move(source)), sections_(std::move(sections)) {}

  [[noreturn]] void fail(int line, const std::string& msg) const {
    std::ostringstream os;
    os << source_ << ':' << line << ": " << msg;
    throw ConfigError(os.str());
  }

  bool has_section(const std::string& s) const { return sections_.count(s) != 0; }

  const Entry* find(const std::string& sec, const std::string& key) const {
    auto s = sections_.find(sec);
    if (s == sections_.end()) return nullptr;
    auto k = s->second.find(key);
    return k == s->second.end() ? nullptr : &k->second;
  }

  int section_line(const std::string& sec) const { return section_lines_.at(sec); }
  void set_section_lines(std::map<std::string, int> lines) { section_lines_ = std::move(lines); }

  double number(const Entry& e, const std::string& key) const {
    try {
      std::size_t used = 0;
      const double v = std::stod(e.value, &used);
      if (trim(e.value.substr(used)).empty()) return v;
    } catch (const std::exception&) {
    }
    fail(e.line, "'" + key + "' expects a number, got '" + e.value + "'");
  }

  int integer(const Entry& e, const std::string& key) const {
    try {
      std::size_t used = 0;
      const long v = std::stol(e.value, &used);
      if (trim(e.value.substr(used)).empty()) return static_cast<int>(v);
    } catch (const std::exception&) {
    }
    fail(e.line, "'" + key + "' expects an integer, got '" + e.value + "'");
  }

  std::vector<double> numbers(const Entry& e, const std::string& key) const {
    std::vector<double> out;
    std::istringstream in(e.value);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(number({trim(item), e.line}, key));
    if (out.empty()) fail(e.line, "'" + key + "' needs at least one coefficient");
    return out;
  }

  std::optional<double> opt_number(const std::string& sec, const std::string& key) const {
    if (const Entry* e = find(sec, key)) return number(*e, key);
    return std::nullopt;
  }

  void only_keys(const std::string& sec, std::initializer_list<const char*> allowed) const {
    auto s = sections_.find(sec);
    if (s == sections_.end()) return;
    for (const auto& [key, entry] : s->second) {
      bool ok = false;
      for (const char* a : allowed) ok = ok || key == a;
      if (!ok) fail(entry.line, "unknown key '" + key + "' in [" + sec + "]");
    }
  }

private:
  std::string source_;
  std::map<std::string, Section> sections_;
  std::map<std::string, int> section_lines_;
};

MetricModel build_metric(const Reader& r) {
  r.only_keys("metric", {"model", "phi", "drag", "g00", "g11", "g22", "g33", "g03", "z_min", "z_max"});
  const Entry* model = r.find("metric", "model");
  if (!model) r.fail(r.section_line("metric"), "[metric] needs 'model'");

  ZDomain domain;
  if (auto lo = r.opt_number("metric", "z_min")) domain.lo = *lo;
  if (auto hi = r.opt_number("metric", "z_max")) domain.hi = *hi;

  const std::string& kind = model->value;
  try {
    if (kind == "minkowski") return MetricModel::minkowski(domain);
    if (kind == "static-conformal")
      return MetricModel::static_conformal(r.opt_number("metric", "phi").value_or(0.01), domain);
    if (kind == "rotating-unit-det")
      return MetricModel::rotating_unit_det(r.opt_number("metric", "drag").value_or(1.0), domain);
    if (kind == "constant" || kind == "polynomial") {
      static constexpr std::array<const char*, 5> names{"g00", "g11", "g22", "g33", "g03"};
      std::array<std::vector<double>, 5> coeffs;
      for (std::size_t i = 0; i < names.size(); ++i) {
        const Entry* e = r.find("metric", names[i]);
        if (!e && names[i] == std::string("g03")) {
          coeffs[i] = {0.0};
          continue;
        }
        if (!e) r.fail(model->line, std::string("model '") + kind + "' needs '" + names[i] + "'");
        coeffs[i] = r.numbers(*e, names[i]);
        if (kind == "constant" && coeffs[i].size() != 1)
          r.fail(e->line, std::string("constant model: '") + names[i] + "' takes one value");
      }
      return MetricModel(kind, Polynomial(coeffs[0]), Polynomial(coeffs[1]), Polynomial(coeffs[2]),
                         Polynomial(coeffs[3]), Polynomial(coeffs[4]), domain);
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    r.fail(model->line, e.what());
  }
  r.fail(model->line, "unknown metric model '" + kind +
                          "' (minkowski, static-conformal, rotating-unit-det, constant, polynomial)");
}

CavitySpec build_cavity(const Reader& r) {
  r.only_keys("cavity", {"L", "x0", "x1", "y0", "y1", "observer_z"});
  CavitySpec c;
  const Entry* L = r.find("cavity", "L");
  if (!L) r.fail(r.section_line("cavity"), "[cavity] needs 'L'");
  c.L = r.number(*L, "L");
  if (!(c.L > 0.0)) r.fail(L->line, "'L' must be > 0");
  c.x0 = r.opt_number("cavity", "x0").value_or(0.0);
  c.x1 = r.opt_number("cavity", "x1").value_or(1.0);
  c.y0 = r.opt_number("cavity", "y0").value_or(0.0);
  c.y1 = r.opt_number("cavity", "y1").value_or(1.0);
  c.observer_z = r.opt_number("cavity", "observer_z").value_or(0.0);
  if (!(c.x1 > c.x0)) r.fail(r.section_line("cavity"), "cavity needs x1 > x0");
  if (!(c.y1 > c.y0)) r.fail(r.section_line("cavity"), "cavity needs y1 > y0");
  return c;
}

ThermalConfig build_thermal(const Reader& r) {
  ThermalConfig t;
  if (!r.has_section("thermal")) return t;
  r.only_keys("thermal", {"mode", "value", "from", "to", "points", "spacing"});
  t.present = true;
  if (const Entry* m = r.find("thermal", "mode")) {
    if (m->value == "coordinate")
      t.mode = TemperatureMode::coordinate;
    else if (m->value == "proper")
      t.mode = TemperatureMode::proper;
    else if (m->value == "reduced")
      t.mode = TemperatureMode::reduced;
    else
      r.fail(m->line, "thermal mode must be coordinate, proper or reduced");
  }
  t.value = r.opt_number("thermal", "value");
  t.from = r.opt_number("thermal", "from");
  t.to = r.opt_number("thermal", "to");
  if (const Entry* p = r.find("thermal", "points")) {
    t.points = r.integer(*p, "points");
    if (t.points < 1) r.fail(p->line, "'points' must be >= 1");
  }
  if (const Entry* s = r.find("thermal", "spacing")) {
    if (s->value != "linear" && s->value != "log") r.fail(s->line, "spacing must be linear or log");
    t.log = s->value == "log";
  }
  for (const char* key : {"value", "from", "to"}) {
    if (const Entry* e = r.find("thermal", key); e && !(r.number(*e, key) > 0.0))
      r.fail(e->line, std::string("'") + key + "' must be > 0");
  }
  if (t.from && t.to && *t.to < *t.from)
    r.fail(r.find("thermal", "to")->line, "sweep range must be ordered (from <= to)");
  if (t.from.has_value() != t.to.has_value())
    r.fail(r.section_line("thermal"), "sweep needs both 'from' and 'to'");
  return t;
}

}  // namespace

RunConfig parse_config(std::istream& in, const std::string& source) {
  std::map<std::string, Section> sections;
  std::map<std::string, int> section_lines;
  std::string current;
  std::string raw;
  int line_no = 0;
  auto fail = [&](const std::string& msg) {
    std::ostringstream os;
    os << source << ':' << line_no << ": " << msg;
    throw ConfigError(os.str());
  };
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail("unterminated section header");
      current = trim(line.substr(1, line.size() - 2));
      if (current != "metric" && current != "cavity" && current != "thermal" &&
          current != "series" && current != "output")
        fail("unknown section [" + current + "]");
      if (sections.count(current)) fail("duplicate section [" + current + "]");
      sections[current];
      section_lines[current] = line_no;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail("expected 'key = value'");
    if (current.empty()) fail("key outside of any section");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) fail("empty key");
    if (value.empty()) fail("empty value for '" + key + "'");
    if (sections[current].count(key)) fail("duplicate key '" + key + "'");
    sections[current][key] = Entry{value, line_no};
  }

  Reader r(source, std::move(sections));
  r.set_section_lines(section_lines);
  for (const char* required : {"metric", "cavity"})
    if (!r.has_section(required))
      throw ConfigError(source + ": missing [" + required + "] section");

  RunConfig cfg;
  cfg.model = build_metric(r);
  cfg.cavity = build_cavity(r);
  cfg.thermal = build_thermal(r);

  r.only_keys("series", {"max_terms", "tolerance"});
  if (const Entry* e = r.find("series", "max_terms")) {
    cfg.series.max_terms = r.integer(*e, "max_terms");
    if (cfg.series.max_terms < 1) r.fail(e->line, "'max_terms' must be >= 1");
  }
  if (const Entry* e = r.find("series", "tolerance")) {
    cfg.series.term_tolerance = r.number(*e, "tolerance");
    if (!(cfg.series.term_tolerance > 0.0)) r.fail(e->line, "'tolerance' must be > 0");
  }

  r.only_keys("output", {"csv", "precision"});
  if (const Entry* e = r.find("output", "csv")) cfg.output.csv = e->value;
  if (const Entry* e = r.find("output", "precision")) {
    cfg.output.precision = r.integer(*e, "precision");
    if (cfg.output.precision < 2 || cfg.output.precision > 17)
      r.fail(e->line, "'precision' must be between 2 and 17");
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  return parse_config(in, path);
}

ThermalPoint make_point(TemperatureMode mode, double value, const ThermalSetup& setup) {
  switch (mode) {
    case TemperatureMode::coordinate:
      return ThermalPoint::from_coordinate(value, setup.g00_origin, setup.geometry.L_p);
    case TemperatureMode::proper:
      return ThermalPoint::from_proper(value, setup.g00_origin, setup.geometry.L_p);
    case TemperatureMode::reduced:
      return ThermalPoint::from_reduced(value, setup.g00_origin, setup.geometry.L_p);
  }
  throw InputError("unknown temperature mode");
}

}  // namespace casimir
