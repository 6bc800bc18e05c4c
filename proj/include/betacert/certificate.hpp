#pragma once

#include <string>
#include <utility>
#include <vector>

#include "betacert/enclosure.hpp"

namespace betacert {

enum class CheckStatus { certified, failed, uncertain };
enum class Grade { proved_inequality, finite_depth_evidence };

const char* to_string(CheckStatus s);
const char* to_string(Grade g);

struct Check {
  std::string name;
  std::string relation;  // "<", "<=", "==", "in"
  Enclosure lhs;
  Enclosure rhs;
  Enclosure margin;      // rhs - lhs for inequalities
  CheckStatus status = CheckStatus::uncertain;
  bool finite_depth = false;
  std::string note;
};

Check check_less(std::string name, const Enclosure& lhs, const Enclosure& rhs,
                 bool finite_depth = false);
Check check_less_equal(std::string name, const Enclosure& lhs, const Enclosure& rhs,
                       bool finite_depth = false);
// Boolean predicate; `value` is yes / no / unknown.
Check check_predicate(std::string name, Tri value, bool finite_depth = false,
                      std::string note = {});
// lhs inside rhs.
Check check_contained(std::string name, const Enclosure& lhs, const Enclosure& rhs,
                      bool finite_depth = false);

struct Certificate {
  std::string claim;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<Check> checks;
  std::vector<std::pair<std::string, std::string>> results;
  std::vector<std::string> notes;
  int evidence_depth = 0;
  bool hypothesis_met = true;
  double wall_time_ms = 0;

  void param(std::string key, std::string value);
  void result(std::string key, std::string value);
  Check& add(Check c);
  void merge(const Certificate& other, const std::string& prefix = {});

  bool certified() const;
  Grade grade() const;
  const Check* find(const std::string& name) const;
};

}  // namespace betacert
