#include "whakit/report.hpp"

#include <chrono>
#include <sstream>

#include "json.hpp"
#include "whakit/error.hpp"

namespace whakit {

const char* to_string(Severity s) {
  switch (s) {
    case Severity::Error: return "error";
    case Severity::Internal: return "internal";
    case Severity::Info: return "info";
  }
  return "error";
}

void Report::run(const std::string& name, const std::function<std::optional<Witness>()>& body,
                 Severity severity) {
  CheckResult r;
  r.name = name;
  r.severity = severity;
  const auto start = std::chrono::steady_clock::now();
  try {
    r.witness = body();
    r.passed = !r.witness.has_value();
  } catch (const Error& e) {
    r.passed = false;
    r.witness = Witness{{}, "no error", e.what()};
    r.note = to_string(e.kind());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  checks_.push_back(std::move(r));
}

void Report::pass(const std::string& name, std::string note) {
  CheckResult r;
  r.name = name;
  r.note = std::move(note);
  checks_.push_back(std::move(r));
}

void Report::fail(const std::string& name, Witness w, Severity severity, std::string note) {
  CheckResult r;
  r.name = name;
  r.passed = false;
  r.witness = std::move(w);
  r.severity = severity;
  r.note = std::move(note);
  checks_.push_back(std::move(r));
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (auto r : other.checks_) {
    r.name = prefix + r.name;
    checks_.push_back(std::move(r));
  }
  for (const auto& [k, v] : other.flags_) flags_[prefix + k] = v;
  for (const auto& [k, v] : other.info_) info_[prefix + k] = v;
}

bool Report::passed() const { return first_failure() == nullptr; }

const CheckResult* Report::first_failure() const {
  for (const auto& r : checks_)
    if (!r.passed && r.severity != Severity::Info) return &r;
  return nullptr;
}

const CheckResult* Report::find(const std::string& name) const {
  for (const auto& r : checks_)
    if (r.name == name) return &r;
  return nullptr;
}

std::optional<bool> Report::flag(const std::string& key) const {
  auto it = flags_.find(key);
  if (it == flags_.end()) return std::nullopt;
  return it->second;
}

std::string Report::to_json(int indent, bool timings) const {
  nlohmann::ordered_json j;
  j["subject"] = subject_;
  j["passed"] = passed();
  auto& arr = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& r : checks_) {
    nlohmann::ordered_json c;
    c["name"] = r.name;
    c["passed"] = r.passed;
    c["severity"] = to_string(r.severity);
    if (timings) c["seconds"] = r.seconds;
    if (!r.note.empty()) c["note"] = r.note;
    if (r.witness) {
      c["witness"] = {{"indices", r.witness->indices},
                      {"expected", r.witness->expected},
                      {"actual", r.witness->actual}};
    }
    arr.push_back(std::move(c));
  }
  j["flags"] = flags_;
  j["info"] = info_;
  return j.dump(indent);
}

std::string Report::to_text(bool timings) const {
  std::ostringstream out;
  if (!subject_.empty()) out << subject_ << "\n";
  for (const auto& r : checks_) {
    out << (r.passed ? "  ok    " : (r.severity == Severity::Info ? "  info  " : "  FAIL  ")) << r.name;
    if (!r.note.empty()) out << "  [" << r.note << "]";
    if (timings) out << "  " << r.seconds << "s";
    out << "\n";
    if (!r.passed && r.witness) {
      out << "        at:";
      for (const auto& i : r.witness->indices) out << " " << i;
      out << "\n        expected: " << r.witness->expected << "\n        actual:   " << r.witness->actual
          << "\n";
    }
  }
  for (const auto& [k, v] : flags_) out << "  " << k << ": " << (v ? "true" : "false") << "\n";
  for (const auto& [k, v] : info_) out << "  " << k << ": " << v << "\n";
  out << (passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace whakit
