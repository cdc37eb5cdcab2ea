#pragma once

// Verification reports and tables, rendered as text, JSON or CSV.  Output is
// a pure function of the contents, so identical runs are byte-identical.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace compres::verify {

enum class Format { Text, Json, Csv };

class ConfigError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Throws ConfigError for anything but "text", "json", "csv".
Format parse_format(const std::string& name);

using Params = std::vector<std::pair<std::string, std::string>>;

struct Case {
  std::string id;
  std::string anchor;  // the claim being checked
  Params params;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<Case> cases;

  bool pass() const;
  int failures() const;
  void add(Case c) { cases.push_back(std::move(c)); }
  void append(const Report& other);
};

std::string render(const Report& report, Format format);

struct Table {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

std::string render(const Table& table, Format format);

}  // namespace compres::verify
