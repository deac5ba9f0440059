#include "oscilspec_cli/format.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "oscilspec/errors.hpp"

namespace oscilspec::cli {

namespace {

// Display width of a UTF-8 string (code points).
std::size_t width(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) {
    return (static_cast<unsigned char>(c) & 0xC0) != 0x80;
  }));
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "table") return OutputFormat::Table;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw ParseError("unknown output format '" + name + "' (expected table, csv or json)");
}

std::string group_digits(const std::string& fixed) {
  std::string body = fixed;
  std::string sign;
  if (!body.empty() && body.front() == '-') {
    sign = "−";
    body.erase(0, 1);
  }
  const auto point = body.find('.');
  if (point == std::string::npos) return sign + body;
  std::string out = sign + body.substr(0, point + 1);
  const std::string frac = body.substr(point + 1);
  for (std::size_t i = 0; i < frac.size(); ++i) {
    if (i > 0 && i % 3 == 0) out += ' ';
    out += frac[i];
  }
  return out;
}

std::string render(const Report& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::Table:
      return render_table(report);
    case OutputFormat::Csv:
      return render_csv(report);
    case OutputFormat::Json:
      return render_json(report);
  }
  return {};
}

std::string render_table(const Report& report) {
  const std::size_t n = report.columns.size();
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : report.rows) {
    std::vector<std::string> out;
    for (std::size_t c = 0; c < n; ++c) {
      const std::string& v = c < row.size() ? row[c] : std::string();
      out.push_back(report.columns[c].grouped ? group_digits(v) : v);
    }
    cells.push_back(std::move(out));
  }
  std::vector<std::size_t> w(n);
  for (std::size_t c = 0; c < n; ++c) {
    w[c] = width(report.columns[c].name);
    for (const auto& row : cells) w[c] = std::max(w[c], width(row[c]));
  }
  std::ostringstream os;
  if (!report.title.empty()) os << report.title << "\n";
  auto line = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < n; ++c) {
      // Numbers right-aligned so that decimal points line up.
      const bool right = report.columns[c].integer || report.columns[c].grouped;
      const std::string pad(w[c] - width(row[c]), ' ');
      os << (c ? "  " : "") << (right ? pad + row[c] : row[c] + (c + 1 < n ? pad : ""));
    }
    os << "\n";
  };
  std::vector<std::string> header;
  for (const auto& col : report.columns) header.push_back(col.name);
  line(header);
  std::size_t total = 0;
  for (std::size_t c = 0; c < n; ++c) total += w[c] + (c ? 2 : 0);
  os << std::string(total, '-') << "\n";
  for (const auto& row : cells) line(row);
  for (const auto& note : report.notes) os << "note: " << note << "\n";
  return os.str();
}

std::string render_csv(const Report& report) {
  std::ostringstream os;
  for (std::size_t c = 0; c < report.columns.size(); ++c) os << (c ? "," : "") << csv_field(report.columns[c].name);
  os << "\n";
  for (const auto& row : report.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << csv_field(row[c]);
    os << "\n";
  }
  return os.str();
}

std::string render_json(const Report& report) {
  nlohmann::ordered_json j;
  j["report"] = report.title;
  auto& cols = j["columns"] = nlohmann::ordered_json::array();
  for (const auto& c : report.columns) cols.push_back({{"name", c.name}, {"integer", c.integer}, {"grouped", c.grouped}});
  auto& rows = j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    nlohmann::ordered_json r = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < report.columns.size() && c < row.size(); ++c) {
      if (report.columns[c].integer) {
        r[report.columns[c].name] = std::stoll(row[c]);
      } else {
        r[report.columns[c].name] = row[c];
      }
    }
    rows.push_back(std::move(r));
  }
  j["notes"] = report.notes;
  return j.dump(2) + "\n";
}

Report parse_json_report(const std::string& text) {
  const auto j = nlohmann::ordered_json::parse(text);
  Report r;
  r.title = j.at("report").get<std::string>();
  for (const auto& c : j.at("columns")) {
    r.columns.push_back({c.at("name").get<std::string>(), c.value("integer", false), c.value("grouped", false)});
  }
  for (const auto& row : j.at("rows")) {
    std::vector<std::string> cells;
    for (const auto& col : r.columns) {
      const auto& v = row.at(col.name);
      cells.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    }
    r.rows.push_back(std::move(cells));
  }
  r.notes = j.value("notes", std::vector<std::string>{});
  return r;
}

}  // namespace oscilspec::cli
