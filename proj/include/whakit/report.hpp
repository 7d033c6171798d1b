#pragma once

// Structured results of verification runs.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace whakit {

struct Witness {
  std::vector<std::string> indices;  // offending basis elements
  std::string expected;
  std::string actual;
};

enum class Severity {
  Error,     // input violates an axiom
  Internal,  // a derived identity fails on certified input: library bug
  Info,      // recorded outcome, never fails a run
};

const char* to_string(Severity s);

struct CheckResult {
  std::string name;
  bool passed = true;
  std::optional<Witness> witness;
  Severity severity = Severity::Error;
  std::string note;
  double seconds = 0.0;
};

class Report {
 public:
  Report() = default;
  explicit Report(std::string subject) : subject_(std::move(subject)) {}

  const std::string& subject() const { return subject_; }
  const std::vector<CheckResult>& checks() const { return checks_; }

  void add(CheckResult r) { checks_.push_back(std::move(r)); }
  /// Runs `body`, timing it.  A returned witness marks failure; a thrown
  /// whakit::Error is recorded as a failure carrying the error text.
  void run(const std::string& name, const std::function<std::optional<Witness>()>& body,
           Severity severity = Severity::Error);
  void pass(const std::string& name, std::string note = {});
  void fail(const std::string& name, Witness w, Severity severity = Severity::Error,
            std::string note = {});
  /// Appends every check of `other`, prefixing names.
  void merge(const Report& other, const std::string& prefix = {});

  bool passed() const;
  const CheckResult* first_failure() const;
  const CheckResult* find(const std::string& name) const;

  void set_flag(const std::string& key, bool value) { flags_[key] = value; }
  std::optional<bool> flag(const std::string& key) const;
  void set_info(const std::string& key, std::string value) { info_[key] = std::move(value); }
  const std::map<std::string, bool>& flags() const { return flags_; }
  const std::map<std::string, std::string>& info() const { return info_; }

  /// Timings are omitted unless asked for, keeping output deterministic.
  std::string to_json(int indent = 2, bool timings = false) const;
  std::string to_text(bool timings = false) const;

 private:
  std::string subject_;
  std::vector<CheckResult> checks_;
  std::map<std::string, bool> flags_;
  std::map<std::string, std::string> info_;
};

}  // namespace whakit
