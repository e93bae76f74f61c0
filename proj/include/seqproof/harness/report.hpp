#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "seqproof/core/bigint.hpp"

namespace seqproof {

enum class Status { Pass, Fail, Partial };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Partial: return "PARTIAL";
  }
  return "?";
}

inline Status parse_status(const std::string& s) {
  if (s == "PASS") return Status::Pass;
  if (s == "FAIL") return Status::Fail;
  if (s == "PARTIAL") return Status::Partial;
  throw std::invalid_argument("unknown status '" + s + "'");
}

struct Mismatch {
  std::int64_t index = 0;
  BigInt expected;
  BigInt got;

  friend bool operator==(const Mismatch& a, const Mismatch& b) {
    return a.index == b.index && a.expected == b.expected && a.got == b.got;
  }
};

// Outcome of one oracle-vs-closed-form sweep. A FAIL always carries the first
// mismatch; a PASS never does.
struct VerificationReport {
  std::string family;
  std::map<std::string, std::string> params;
  std::int64_t range_lo = 0;
  std::int64_t range_hi = 0;
  Status status = Status::Pass;
  std::optional<Mismatch> first_mismatch;
  std::int64_t runtime_ms = 0;

  void validate() const {
    if (status == Status::Fail && !first_mismatch)
      throw std::invalid_argument("VerificationReport: FAIL without first_mismatch");
    if (status == Status::Pass && first_mismatch)
      throw std::invalid_argument("VerificationReport: PASS with first_mismatch");
  }

  friend bool operator==(const VerificationReport& a, const VerificationReport& b) {
    return a.family == b.family && a.params == b.params && a.range_lo == b.range_lo &&
           a.range_hi == b.range_hi && a.status == b.status && a.first_mismatch == b.first_mismatch &&
           a.runtime_ms == b.runtime_ms;
  }
};

// Accumulates index-by-index comparisons and records the first disagreement.
class SweepRecorder {
 public:
  SweepRecorder(std::string family, std::int64_t lo, std::int64_t hi)
      : start_(std::chrono::steady_clock::now()) {
    report_.family = std::move(family);
    report_.range_lo = lo;
    report_.range_hi = hi;
  }

  SweepRecorder& param(const std::string& key, const std::string& value) {
    report_.params[key] = value;
    return *this;
  }

  // Returns false once a mismatch has been recorded.
  bool check(std::int64_t index, const BigInt& expected, const BigInt& got) {
    if (report_.first_mismatch) return false;
    if (expected != got) {
      report_.first_mismatch = Mismatch{index, expected, got};
      return false;
    }
    return true;
  }

  bool failed() const { return report_.first_mismatch.has_value(); }

  void mark_partial() { partial_ = true; }

  VerificationReport finish() {
    report_.status = failed() ? Status::Fail : partial_ ? Status::Partial : Status::Pass;
    report_.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start_)
                             .count();
    return report_;
  }

 private:
  VerificationReport report_;
  bool partial_ = false;
  std::chrono::steady_clock::time_point start_;
};

inline nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json j;
  j["family"] = r.family;
  j["params"] = r.params;
  j["range"] = {r.range_lo, r.range_hi};
  j["status"] = to_string(r.status);
  if (r.first_mismatch) {
    j["first_mismatch"] = {{"index", r.first_mismatch->index},
                           {"expected", to_string(r.first_mismatch->expected)},
                           {"got", to_string(r.first_mismatch->got)}};
  } else {
    j["first_mismatch"] = nullptr;
  }
  j["runtime_ms"] = r.runtime_ms;
  return j;
}

inline VerificationReport report_from_json(const nlohmann::json& j) {
  VerificationReport r;
  r.family = j.at("family").get<std::string>();
  r.params = j.at("params").get<std::map<std::string, std::string>>();
  r.range_lo = j.at("range").at(0).get<std::int64_t>();
  r.range_hi = j.at("range").at(1).get<std::int64_t>();
  r.status = parse_status(j.at("status").get<std::string>());
  const auto& m = j.at("first_mismatch");
  if (!m.is_null()) {
    r.first_mismatch = Mismatch{m.at("index").get<std::int64_t>(), parse_bigint(m.at("expected").get<std::string>()),
                                parse_bigint(m.at("got").get<std::string>())};
  }
  r.runtime_ms = j.at("runtime_ms").get<std::int64_t>();
  r.validate();
  return r;
}

inline std::string serialize_report(const VerificationReport& r) { return to_json(r).dump(); }

inline VerificationReport parse_report(const std::string& text) {
  return report_from_json(nlohmann::json::parse(text));
}

inline std::string tsv_header() {
  return "family\tparams\trange_lo\trange_hi\tstatus\tmismatch_index\texpected\tgot\truntime_ms";
}

inline std::string to_tsv_row(const VerificationReport& r) {
  std::ostringstream params;
  bool first = true;
  for (const auto& [k, v] : r.params) {
    params << (first ? "" : ",") << k << "=" << v;
    first = false;
  }
  std::ostringstream out;
  out << r.family << '\t' << params.str() << '\t' << r.range_lo << '\t' << r.range_hi << '\t'
      << to_string(r.status) << '\t';
  if (r.first_mismatch) {
    out << r.first_mismatch->index << '\t' << to_string(r.first_mismatch->expected) << '\t'
        << to_string(r.first_mismatch->got);
  } else {
    out << "-\t-\t-";
  }
  out << '\t' << r.runtime_ms;
  return out.str();
}

}  // namespace seqproof
