// fixtures.hpp
//
// Golden fixture files: one record per line,
//
//   name, key=value, key=value, ...
//
// Inputs come first, then `value=` and `bound=`, then oracle parameters.
// Lines starting with '#' are comments; blank lines are ignored.
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace casimir {

struct FixtureRecord {
  std::string name;
  std::vector<std::pair<std::string, std::string>> fields;

  std::optional<std::string> get(const std::string& key) const;
  /// Throws InputError when the key is missing.
  const std::string& at(const std::string& key) const;
  double number(const std::string& key) const;
};

std::string format_record(const FixtureRecord& r);
FixtureRecord parse_record(const std::string& line);

std::vector<FixtureRecord> read_fixtures(std::istream& in);
std::vector<FixtureRecord> read_fixture_file(const std::string& path);

/// Writes the documented header followed by the records.
void write_fixtures(std::ostream& out, const std::vector<FixtureRecord>& records);

/// First record whose name matches and whose `key` field equals `value`.
std::optional<FixtureRecord> find_fixture(const std::vector<FixtureRecord>& records,
                                          const std::string& name, const std::string& key,
                                          const std::string& value);

}  // namespace casimir
