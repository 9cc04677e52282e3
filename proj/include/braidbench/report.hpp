#pragma once

#include <nlohmann/json.hpp>

#include "braidbench/grcat.hpp"

namespace braidbench {

using json = nlohmann::ordered_json;

/// Witness for a failed identity: first differing matrix entry.
struct Counterexample {
  unsigned row = 0, col = 0;
  std::string lhs, rhs;
};

struct CheckResult {
  std::string key;
  bool pass = false;
  std::optional<Counterexample> witness;
  std::string note;  // free-form detail (certificate data, skip reason)
};

/// Outcome of one verification suite. Keys are stable and ordered; timings
/// live in a separate block that is only emitted on request so that report
/// payloads are byte-identical across runs.
class Report {
 public:
  explicit Report(std::string subject) : subject_(std::move(subject)) {}

  const std::string& subject() const { return subject_; }
  const std::vector<CheckResult>& checks() const { return checks_; }
  bool all_pass() const;
  const CheckResult* find(const std::string& key) const;

  void add(CheckResult r) { checks_.push_back(std::move(r)); }
  void add_bool(const std::string& key, bool pass, const std::string& note = "");
  /// Records pass iff lhs == rhs, with the first differing entry as witness.
  void add_equal(const std::string& key, const GrMorphism& lhs,
                 const GrMorphism& rhs);
  void add_timing(const std::string& key, double seconds);
  void merge(const Report& other, const std::string& prefix);

  json to_json(bool with_timings = false) const;
  std::string to_text(bool with_timings = false) const;

 private:
  std::string subject_;
  std::vector<CheckResult> checks_;
  std::vector<std::pair<std::string, double>> timings_;
};

json obj_to_json(const GrObject& x);
GrObject obj_from_json(const json& j);
json mor_to_json(const GrMorphism& f);
GrMorphism mor_from_json(const json& j);

}  // namespace braidbench
