#pragma once

#include <chrono>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "orelab/errors.hpp"

namespace orelab {

enum class Status { holds, fails, holds_up_to_bound };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::holds: return "holds";
    case Status::fails: return "fails";
    case Status::holds_up_to_bound: return "holds-up-to-bound";
  }
  return "?";
}

inline Status status_from_string(const std::string& s) {
  if (s == "holds") return Status::holds;
  if (s == "fails") return Status::fails;
  if (s == "holds-up-to-bound") return Status::holds_up_to_bound;
  throw ParseError("unknown verdict status '" + s + "'");
}

/// A counterexample as named, printed values (elements in element_repr form,
/// polynomials in the canonical polynomial syntax). Replay parses them back.
class Witness {
 public:
  Witness() = default;
  Witness(std::initializer_list<std::pair<std::string, std::string>> entries) : entries_(entries) {}

  Witness& set(std::string role, std::string value) {
    for (auto& [r, v] : entries_) {
      if (r == role) {
        v = std::move(value);
        return *this;
      }
    }
    entries_.emplace_back(std::move(role), std::move(value));
    return *this;
  }
  const std::string& get(const std::string& role) const {
    for (const auto& [r, v] : entries_) {
      if (r == role) return v;
    }
    throw ParseError("witness has no entry '" + role + "'");
  }
  bool has(const std::string& role) const {
    for (const auto& e : entries_) {
      if (e.first == role) return true;
    }
    return false;
  }
  const std::vector<std::pair<std::string, std::string>>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }

  std::string str() const {
    std::string s;
    for (const auto& [r, v] : entries_) s += (s.empty() ? "" : ", ") + r + "=" + v;
    return s;
  }

  friend bool operator==(const Witness&, const Witness&) = default;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

/// Search limits a verdict was computed under.
struct Bounds {
  std::optional<std::size_t> dmax;
  std::size_t work_cap = 0;
  std::size_t evaluated = 0;   // elements, tuples or products examined
  std::string universe;        // which coefficient/element set was ranged over
  std::optional<std::uint64_t> seed;  // set when random sampling replaced exhaustion
};

struct Verdict {
  std::string property;
  Status status = Status::holds;
  /// True when the search ranged over a sample rather than everything in
  /// scope: a structured ring's sample set or random sampling past the work cap.
  bool sampled = false;
  std::optional<Witness> witness;
  Bounds bounds;
  std::chrono::nanoseconds elapsed{0};
  std::string note;

  bool holds() const noexcept { return status != Status::fails; }
  bool fails() const noexcept { return status == Status::fails; }
};

inline nlohmann::ordered_json to_json(const Verdict& v, bool with_timing = false) {
  nlohmann::ordered_json j;
  j["property"] = v.property;
  j["status"] = to_string(v.status);
  j["sampled"] = v.sampled;
  if (v.witness) {
    nlohmann::ordered_json w = nlohmann::ordered_json::object();
    for (const auto& [role, value] : v.witness->entries()) w[role] = value;
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  nlohmann::ordered_json b;
  if (v.bounds.dmax) b["dmax"] = *v.bounds.dmax;
  b["work_cap"] = v.bounds.work_cap;
  b["evaluated"] = v.bounds.evaluated;
  b["universe"] = v.bounds.universe;
  if (v.bounds.seed) b["seed"] = *v.bounds.seed;
  j["bounds"] = b;
  if (!v.note.empty()) j["note"] = v.note;
  if (with_timing) j["elapsed_ms"] = std::chrono::duration<double, std::milli>(v.elapsed).count();
  return j;
}

inline std::string format_line(const Verdict& v) {
  std::string s = v.property + ": " + to_string(v.status);
  if (v.sampled) s += " [sampled]";
  if (v.bounds.dmax) s += " (dmax=" + std::to_string(*v.bounds.dmax) + ")";
  if (v.witness) s += " witness: " + v.witness->str();
  if (!v.note.empty()) s += " -- " + v.note;
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const Verdict& v) { return os << format_line(v); }

/// Runs `body`, which fills a verdict, and stamps the wall-clock time.
template <class Body>
Verdict timed(Body&& body) {
  const auto start = std::chrono::steady_clock::now();
  Verdict v = body();
  v.elapsed = std::chrono::steady_clock::now() - start;
  return v;
}

}  // namespace orelab
