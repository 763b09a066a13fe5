#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

namespace kts {

struct Record {
  std::string code;  // graph6 of the graph, or a synthetic check id for sweeps
  int n = 0;
  int k = 0;
  double lambda1 = 0;
  double threshold = 0;
  double margin = 0;  // lambda1 - threshold
  std::string ktree;  // "YES", "NO", or "-" when not decided
  bool exceptional = false;
  bool borderline = false;
  bool anomaly = false;
};

struct VerificationReport {
  std::string campaign;
  nlohmann::json parameters;
  std::uint64_t seed = 0;
  std::vector<Record> records;
  // summary
  std::uint64_t pass = 0;
  std::uint64_t fail = 0;
  std::uint64_t borderline = 0;
  std::uint64_t exceptional_classes = 0;

  std::uint64_t anomalies() const { return fail; }

  void add(Record r) {
    if (r.anomaly)
      ++fail;
    else
      ++pass;
    if (r.borderline) ++borderline;
    records.push_back(std::move(r));
  }

  void finalize() {
    std::stable_sort(records.begin(), records.end(),
                     [](const Record& a, const Record& b) { return a.code < b.code; });
  }
};

inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

inline nlohmann::json to_json(const Record& r) {
  return {{"code", r.code},         {"n", r.n},
          {"k", r.k},               {"lambda1", r.lambda1},
          {"threshold", r.threshold}, {"margin", r.margin},
          {"ktree", r.ktree},       {"exceptional", r.exceptional},
          {"borderline", r.borderline}, {"anomaly", r.anomaly}};
}

inline nlohmann::json to_json(const VerificationReport& rep) {
  nlohmann::json records = nlohmann::json::array();
  for (const Record& r : rep.records) records.push_back(to_json(r));
  return {{"campaign", rep.campaign},
          {"parameters", rep.parameters},
          {"seed", rep.seed},
          {"summary",
           {{"classes", rep.records.size()},
            {"pass", rep.pass},
            {"fail", rep.fail},
            {"anomalies", rep.anomalies()},
            {"borderline", rep.borderline},
            {"exceptional", rep.exceptional_classes}}},
          {"records", records}};
}

inline std::string to_csv(const VerificationReport& rep) {
  std::string out = "code,n,k,lambda1,threshold,margin,ktree,exceptional,borderline,anomaly\n";
  for (const Record& r : rep.records) {
    out += r.code + ',' + std::to_string(r.n) + ',' + std::to_string(r.k) + ',' +
           format_double(r.lambda1) + ',' + format_double(r.threshold) + ',' +
           format_double(r.margin) + ',' + r.ktree + ',' + (r.exceptional ? "1" : "0") + ',' +
           (r.borderline ? "1" : "0") + ',' + (r.anomaly ? "1" : "0") + '\n';
  }
  return out;
}

}  // namespace kts
