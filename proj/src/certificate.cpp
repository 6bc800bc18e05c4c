#include "betacert/certificate.hpp"

#include <algorithm>

namespace betacert {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::certified:
      return "certified";
    case CheckStatus::failed:
      return "failed";
    default:
      return "uncertain";
  }
}

const char* to_string(Grade g) {
  return g == Grade::proved_inequality ? "proved-inequality" : "finite-depth-evidence";
}

namespace {

CheckStatus status_of(Tri t) {
  if (t == Tri::yes) return CheckStatus::certified;
  if (t == Tri::no) return CheckStatus::failed;
  return CheckStatus::uncertain;
}

}  // namespace

Check check_less(std::string name, const Enclosure& lhs, const Enclosure& rhs, bool finite_depth) {
  Check c{std::move(name), "<", lhs, rhs, rhs - lhs, status_of(less(lhs, rhs)), finite_depth, {}};
  return c;
}

Check check_less_equal(std::string name, const Enclosure& lhs, const Enclosure& rhs,
                       bool finite_depth) {
  Check c{std::move(name), "<=", lhs, rhs, rhs - lhs, status_of(less_equal(lhs, rhs)),
          finite_depth, {}};
  return c;
}

Check check_predicate(std::string name, Tri value, bool finite_depth, std::string note) {
  Enclosure v(value == Tri::yes ? 1L : 0L);
  if (value == Tri::unknown) v = Enclosure::hull(Enclosure(0L), Enclosure(1L));
  Check c{std::move(name), "==", v, Enclosure(1L), v - 1, status_of(value), finite_depth,
          std::move(note)};
  return c;
}

Check check_contained(std::string name, const Enclosure& lhs, const Enclosure& rhs,
                      bool finite_depth) {
  Tri t = rhs.contains(lhs) ? Tri::yes : (lhs.overlaps(rhs) ? Tri::unknown : Tri::no);
  Check c{std::move(name), "in", lhs, rhs, Enclosure(), status_of(t), finite_depth, {}};
  return c;
}

void Certificate::param(std::string key, std::string value) {
  params.emplace_back(std::move(key), std::move(value));
}

void Certificate::result(std::string key, std::string value) {
  results.emplace_back(std::move(key), std::move(value));
}

Check& Certificate::add(Check c) {
  checks.push_back(std::move(c));
  return checks.back();
}

void Certificate::merge(const Certificate& other, const std::string& prefix) {
  for (Check c : other.checks) {
    if (!prefix.empty()) c.name = prefix + "." + c.name;
    checks.push_back(std::move(c));
  }
  for (const auto& r : other.results) results.emplace_back(prefix.empty() ? r.first : prefix + "." + r.first, r.second);
  for (const auto& n : other.notes) notes.push_back(n);
  evidence_depth = std::max(evidence_depth, other.evidence_depth);
  hypothesis_met = hypothesis_met && other.hypothesis_met;
}

bool Certificate::certified() const {
  if (!hypothesis_met || checks.empty()) return false;
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.status == CheckStatus::certified; });
}

Grade Certificate::grade() const {
  bool fd = std::any_of(checks.begin(), checks.end(), [](const Check& c) { return c.finite_depth; });
  return fd ? Grade::finite_depth_evidence : Grade::proved_inequality;
}

const Check* Certificate::find(const std::string& name) const {
  for (const Check& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace betacert
