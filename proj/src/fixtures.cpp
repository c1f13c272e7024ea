// fixtures.cpp
#include "casimir/fixtures.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "casimir/errors.hpp"

namespace casimir {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::optional<std::string> FixtureRecord::get(const std::string& key) const {
  for (const auto& [k, v] : fields)
    if (k == key) return v;
  return std::nullopt;
}

const std::string& FixtureRecord::at(const std::string& key) const {
  for (const auto& [k, v] : fields)
    if (k == key) return v;
  throw InputError("fixture '" + name + "' has no field '" + key + "'");
}

double FixtureRecord::number(const std::string& key) const {
  const std::string& s = at(key);
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw InputError("fixture field '" + key + "' is not a number: " + s);
  return v;
}

std::string format_record(const FixtureRecord& r) {
  std::string out = r.name;
  for (const auto& [k, v] : r.fields) out += ", " + k + "=" + v;
  return out;
}

FixtureRecord parse_record(const std::string& line) {
  FixtureRecord r;
  std::istringstream in(line);
  std::string token;
  bool first = true;
  while (std::getline(in, token, ',')) {
    token = trim(token);
    if (first) {
      if (token.empty()) throw InputError("fixture record without a name: " + line);
      r.name = token;
      first = false;
      continue;
    }
    const auto eq = token.find('=');
    if (eq == std::string::npos) throw InputError("fixture field without '=': " + token);
    r.fields.emplace_back(trim(token.substr(0, eq)), trim(token.substr(eq + 1)));
  }
  return r;
}

std::vector<FixtureRecord> read_fixtures(std::istream& in) {
  std::vector<FixtureRecord> out;
  std::string line;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    out.push_back(parse_record(t));
  }
  return out;
}

std::vector<FixtureRecord> read_fixture_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open fixture file " + path);
  return read_fixtures(in);
}

void write_fixtures(std::ostream& out, const std::vector<FixtureRecord>& records) {
  out << "# casimir golden fixtures\n"
         "# record: name, <inputs as key=value>, value=<v>, bound=<b>, <oracle params as key=value>\n";
  for (const auto& r : records) out << format_record(r) << '\n';
}

std::optional<FixtureRecord> find_fixture(const std::vector<FixtureRecord>& records,
                                          const std::string& name, const std::string& key,
                                          const std::string& value) {
  for (const auto& r : records)
    if (r.name == name && r.get(key) == value) return r;
  return std::nullopt;
}

}  // namespace casimir
