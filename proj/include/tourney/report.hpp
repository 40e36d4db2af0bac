#pragma once

#include <chrono>
#include <ctime>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace tourney {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kReportSchema = "tourney.report/1";

// One fact: which object, its order, the cycle length involved (0 when not
// applicable), what kind of value, and the exact value as text.
struct ReportRow {
  std::string object;
  int n = 0;
  int m = 0;
  std::string value_class;
  std::string value;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

struct ReportDocument {
  std::string kind;  // census | verification | crossover | enumeration | spectral
  std::vector<ReportRow> rows;
  std::string tool_version = kToolVersion;
  std::string input_spec;
  std::string timestamp;

  static std::string now_utc() {
    const std::time_t t =
        std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::tm tm_utc{};
    gmtime_r(&t, &tm_utc);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
  }

  nlohmann::json to_json() const {
    nlohmann::json rows_json = nlohmann::json::array();
    for (const ReportRow& r : rows)
      rows_json.push_back({{"object", r.object},
                           {"n", r.n},
                           {"m", r.m},
                           {"value_class", r.value_class},
                           {"value", r.value}});
    return {{"schema", kReportSchema},
            {"kind", kind},
            {"provenance",
             {{"tool_version", tool_version},
              {"input_spec", input_spec},
              {"timestamp", timestamp}}},
            {"rows", rows_json}};
  }

  static ReportDocument from_json(const nlohmann::json& j) {
    if (!j.contains("schema") || j.at("schema").get<std::string>() != kReportSchema)
      throw std::invalid_argument("report: unknown or missing schema");
    ReportDocument doc;
    doc.kind = j.at("kind").get<std::string>();
    const auto& prov = j.at("provenance");
    doc.tool_version = prov.at("tool_version").get<std::string>();
    doc.input_spec = prov.at("input_spec").get<std::string>();
    doc.timestamp = prov.at("timestamp").get<std::string>();
    for (const auto& r : j.at("rows"))
      doc.rows.push_back({r.at("object").get<std::string>(), r.at("n").get<int>(),
                          r.at("m").get<int>(),
                          r.at("value_class").get<std::string>(),
                          r.at("value").get<std::string>()});
    return doc;
  }

  // CSV projection of the payload rows; fixed column order.
  std::string to_csv() const {
    static const auto escape = [](const std::string& s) {
      if (s.find_first_of(",\"\n") == std::string::npos) return s;
      std::string out = "\"";
      for (char c : s) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
      }
      out.push_back('"');
      return out;
    };
    std::string out = "object,n,m,value_class,value\n";
    for (const ReportRow& r : rows) {
      out += escape(r.object);
      out += ',' + std::to_string(r.n) + ',' + std::to_string(r.m) + ',';
      out += escape(r.value_class);
      out += ',';
      out += escape(r.value);
      out += '\n';
    }
    return out;
  }
};

}  // namespace tourney
