#pragma once

#include <optional>
#include <string>
#include <vector>

#include "betacert/certificate.hpp"
#include "betacert/enclosure.hpp"
#include "betacert/realnum.hpp"

namespace betacert {

int k_threshold(int m);

// beta^c (1 - beta^(1-c)) / 432^2
Enclosure fy_rhs(const Enclosure& beta, const Enclosure& c);
// (m+2) tau^-c <= fy_rhs(beta, c)
Certificate fy_inequality(int m, const Enclosure& tau, const Enclosure& beta, const Enclosure& c);
Enclosure default_c();  // 19/20

// 1 - 1024 (m+2)^(20/19) q^(4-k)
Enclosure dim_lower_bound(int m, const Enclosure& q, int k);

Enclosure theorem_a_radius(int m, int k);  // q_k^(-(m+2)k-3)
Enclosure theorem_b_radius(int k);         // q_k^(-2k-6), or q_9^-24 one-sided for k = 9

// Raises PrecisionError unless q_k is enclosed to width <= radius 2^-10 at
// the current working precision.
void require_root_resolution(int k, const Enclosure& radius, const char* who);

struct TheoremOptions {
  int depth = 0;             // structured thickness depth; 0 means 3k
  int explicit_depth = -1;   // explicit gap sets; -1 means a small default
  bool run_count = true;     // Theorem B: locate an intersection point and count
  int count_depth = 200;
  int search_depth = 0;      // 0: count_depth + 60
};

// q = nullopt selects interval mode.
Certificate theorem_a_certify(int m, int k, const std::optional<Base>& q, const TheoremOptions& opt = {});
Certificate theorem_b_certify(int k, const std::optional<Base>& q, const TheoremOptions& opt = {});

// yes when the whole enclosure lies among the numbers that round (or
// truncate) to the printed decimal, no when it lies outside them.
enum class PrintedMode { rounded, rounded_or_truncated };
Tri matches_printed(const Enclosure& value, const std::string& printed, PrintedMode mode);

struct Table1Row {
  int m = 0;
  int k_printed = 0;
  int k_computed = 0;
  std::string q_printed, radius_printed, dim_printed;
  Enclosure q, radius, dim;
  Tri k_match = Tri::unknown, q_match = Tri::unknown, radius_match = Tri::unknown, dim_match = Tri::unknown;
  bool matched() const;
};

struct Table2Row {
  int k = 0;
  bool one_sided = false;
  std::string q_printed, radius_printed;
  Enclosure q, radius;
  Tri q_match = Tri::unknown, radius_match = Tri::unknown;
  bool matched() const;
};

struct TablesReport {
  std::vector<Table1Row> table1;
  std::vector<Table2Row> table2;
  int precision_bits = 0;
  int matched_rows() const;
  int total_rows() const { return static_cast<int>(table1.size() + table2.size()); }
};

TablesReport reproduce_tables();

}  // namespace betacert
