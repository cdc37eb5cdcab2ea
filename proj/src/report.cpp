#include "compres/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace compres::verify {

Format parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw ConfigError("unknown output format '" + name + "' (expected text, json or csv)");
}

bool Report::pass() const {
  return std::all_of(cases.begin(), cases.end(), [](const Case& c) { return c.pass; });
}

int Report::failures() const {
  return static_cast<int>(std::count_if(cases.begin(), cases.end(), [](const Case& c) { return !c.pass; }));
}

void Report::append(const Report& other) {
  cases.insert(cases.end(), other.cases.begin(), other.cases.end());
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string params_text(const Params& params) {
  std::string out;
  for (const auto& [k, v] : params) {
    if (!out.empty()) out += ' ';
    out += k + "=" + v;
  }
  return out;
}

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << "suite " << r.suite << "  seed " << r.seed << "\n";
  for (const auto& c : r.cases) {
    os << (c.pass ? "PASS " : "FAIL ") << c.id;
    if (!c.params.empty()) os << "  [" << params_text(c.params) << "]";
    os << "  (" << c.anchor << ")\n";
    if (!c.pass || c.expected != c.actual) {
      os << "    expected: " << c.expected << "\n";
      os << "    actual:   " << c.actual << "\n";
    }
  }
  os << r.cases.size() - r.failures() << "/" << r.cases.size() << " passed\n";
  return os.str();
}

std::string render_json(const Report& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["seed"] = r.seed;
  j["cases"] = nlohmann::ordered_json::array();
  for (const auto& c : r.cases) {
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : c.params) params[k] = v;
    j["cases"].push_back({{"id", c.id},
                          {"paper_anchor", c.anchor},
                          {"params", params},
                          {"expected", c.expected},
                          {"actual", c.actual},
                          {"pass", c.pass}});
  }
  j["pass"] = r.pass();
  return j.dump(2) + "\n";
}

std::string render_csv(const Report& r) {
  std::ostringstream os;
  os << "suite,seed,id,paper_anchor,params,expected,actual,pass\n";
  for (const auto& c : r.cases)
    os << csv_field(r.suite) << ',' << r.seed << ',' << csv_field(c.id) << ',' << csv_field(c.anchor) << ','
       << csv_field(params_text(c.params)) << ',' << csv_field(c.expected) << ',' << csv_field(c.actual)
       << ',' << (c.pass ? "true" : "false") << "\n";
  return os.str();
}

}  // namespace

std::string render(const Report& report, Format format) {
  switch (format) {
    case Format::Json:
      return render_json(report);
    case Format::Csv:
      return render_csv(report);
    case Format::Text:
      break;
  }
  return render_text(report);
}

std::string render(const Table& table, Format format) {
  std::ostringstream os;
  if (format == Format::Json) {
    nlohmann::ordered_json j;
    j["table"] = table.title;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
      nlohmann::ordered_json r;
      for (size_t i = 0; i < table.columns.size(); ++i) r[table.columns[i]] = i < row.size() ? row[i] : "";
      j["rows"].push_back(r);
    }
    return j.dump(2) + "\n";
  }
  if (format == Format::Csv) {
    for (size_t i = 0; i < table.columns.size(); ++i) os << (i ? "," : "") << csv_field(table.columns[i]);
    os << "\n";
    for (const auto& row : table.rows) {
      for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
      os << "\n";
    }
    return os.str();
  }
  std::vector<size_t> width(table.columns.size());
  for (size_t i = 0; i < table.columns.size(); ++i) width[i] = table.columns[i].size();
  for (const auto& row : table.rows)
    for (size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
  auto line = [&](const std::vector<std::string>& cells) {
    std::string out;
    for (size_t i = 0; i < cells.size(); ++i) {
      if (i) out += "  ";
      out += cells[i];
      if (i + 1 < cells.size()) out += std::string(width[i] - cells[i].size(), ' ');
    }
    return out + "\n";
  };
  os << table.title << "\n" << line(table.columns);
  for (const auto& row : table.rows) os << line(row);
  return os.str();
}

}  // namespace compres::verify
