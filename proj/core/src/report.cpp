#include "oyang/report.hpp"

#include <json.hpp>

#include <sstream>

namespace oyang {

std::string emit_report(const RunConfig& config, const std::vector<SuiteResult>& results,
                        bool include_timings) {
  nlohmann::ordered_json doc;
  doc["suite"] = config.suite;
  nlohmann::ordered_json cfg;
  cfg["n"] = config.n;
  cfg["rmax"] = config.rmax;
  cfg["smax"] = config.smax;
  cfg["trunc_order"] = config.N;
  cfg["alpha"] = config.alpha.str();
  cfg["beta"] = config.beta.str();
  cfg["q"] = config.q.str();
  cfg["c"] = config.c.str();
  cfg["d"] = config.d.str();
  cfg["nonorth_a"] = config.nonorth_a.str();
  cfg["ternary_a"] = config.ternary_a.str();
  cfg["ternary_b"] = config.ternary_b.str();
  cfg["algebra"] = config.algebra;
  cfg["family"] = config.family;
  cfg["samples"] = config.samples;
  cfg["test_degree"] = config.test_degree;
  cfg["seed"] = config.seed;
  cfg["negative_controls"] = config.negative_controls;
  doc["config"] = std::move(cfg);

  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  int pass = 0, fail = 0;
  for (const auto& suite : results) {
    std::size_t idx = 0;
    for (const auto& r : suite.records) {
      nlohmann::ordered_json c;
      c["id"] = suite.suite + "/" + std::to_string(idx++);
      c["params"] = r.params;
      c["status"] = r.pass ? "pass" : "fail";
      if (!r.pass) c["witness"] = r.witness;
      if (include_timings) c["elapsed_ms"] = r.elapsed_ms;
      checks.push_back(std::move(c));
      (r.pass ? pass : fail)++;
    }
  }
  doc["checks"] = std::move(checks);
  nlohmann::ordered_json summary;
  summary["pass"] = pass;
  summary["fail"] = fail;
  summary["total"] = pass + fail;
  doc["summary"] = std::move(summary);
  return doc.dump(2) + "\n";
}

std::string render_summary(const std::vector<SuiteResult>& results) {
  std::ostringstream os;
  for (const auto& suite : results) {
    auto s = summarize(suite.records);
    os << suite.suite << ": " << s.pass << "/" << s.total() << " checks passed";
    if (s.fail) {
      os << ", " << s.fail << " FAILED";
      for (const auto& r : suite.records)
        if (!r.pass) {
          os << "\n  FAIL [" << r.params << "] " << r.witness;
          break;  // first witness is enough for the console
        }
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace oyang
