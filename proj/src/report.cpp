#include "betacert/report.hpp"

#include <sstream>

namespace betacert {

Json bounds_json(const Enclosure& e) { return Json::array({e.lo_string(20), e.hi_string(20)}); }

Json to_json(const Check& c) {
  Json j;
  j["name"] = c.name;
  j["relation"] = c.relation;
  j["lhs"] = bounds_json(c.lhs);
  j["rhs"] = bounds_json(c.rhs);
  if (c.relation != "in") j["margin"] = bounds_json(c.margin);
  j["status"] = to_string(c.status);
  j["finite_depth"] = c.finite_depth;
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

Json to_json(const Certificate& c) {
  Json j;
  j["claim"] = c.claim;
  Json params = Json::object();
  for (const auto& [k, v] : c.params) params[k] = v;
  j["params"] = params;
  Json checks = Json::array();
  for (const Check& ch : c.checks) checks.push_back(to_json(ch));
  j["checks"] = checks;
  Json results = Json::object();
  for (const auto& [k, v] : c.results) results[k] = v;
  j["results"] = results;
  j["notes"] = c.notes;
  j["evidence_depth"] = c.evidence_depth;
  j["grade"] = to_string(c.grade());
  j["hypothesis_met"] = c.hypothesis_met;
  j["certified"] = c.certified();
  j["wall_time_ms"] = c.wall_time_ms;
  return j;
}

namespace {

const char* flag(Tri t) { return t == Tri::yes ? "match" : t == Tri::no ? "mismatch" : "undecided"; }

}  // namespace

Json to_json(const TablesReport& r) {
  Json j;
  j["precision_bits"] = r.precision_bits;
  Json t1 = Json::array();
  for (const Table1Row& row : r.table1) {
    Json o;
    o["m"] = row.m;
    o["K_m"] = row.k_computed;
    o["K_m_printed"] = row.k_printed;
    o["K_m_match"] = flag(row.k_match);
    o["q"] = bounds_json(row.q);
    o["q_printed"] = row.q_printed;
    o["q_match"] = flag(row.q_match);
    o["radius"] = bounds_json(row.radius);
    o["radius_printed"] = row.radius_printed;
    o["radius_match"] = flag(row.radius_match);
    o["dim_lower_bound"] = bounds_json(row.dim);
    o["dim_printed"] = row.dim_printed;
    o["dim_match"] = flag(row.dim_match);
    o["matched"] = row.matched();
    t1.push_back(o);
  }
  j["table1"] = t1;
  Json t2 = Json::array();
  for (const Table2Row& row : r.table2) {
    Json o;
    o["k"] = row.k;
    o["one_sided"] = row.one_sided;
    o["q"] = bounds_json(row.q);
    o["q_printed"] = row.q_printed;
    o["q_match"] = flag(row.q_match);
    o["radius"] = bounds_json(row.radius);
    o["radius_printed"] = row.radius_printed;
    o["radius_match"] = flag(row.radius_match);
    o["matched"] = row.matched();
    t2.push_back(o);
  }
  j["table2"] = t2;
  j["matched_rows"] = r.matched_rows();
  j["total_rows"] = r.total_rows();
  return j;
}

Json to_json(const CountReport& r) {
  Json j;
  j["q"] = bounds_json(r.q);
  j["x"] = bounds_json(r.x);
  j["depth"] = r.depth;
  Json levels = Json::array();
  for (const CountLevel& l : r.levels)
    levels.push_back({{"depth", l.depth}, {"certified_min", l.certified_min}, {"possible_max", l.possible_max}});
  j["levels"] = levels;
  Json branches = Json::array();
  for (const BranchEvent& b : r.branches)
    branches.push_back({{"depth", b.depth}, {"value", bounds_json(b.value)}, {"certified", b.certified}});
  j["branches"] = branches;
  j["stable"] = r.stable;
  return j;
}

Json to_json(const ThicknessValue& t) {
  Json j;
  j["tau"] = t.infinite ? Json("inf") : bounds_json(t.tau);
  j["depth"] = t.depth;
  j["gap_count"] = t.gap_count;
  return j;
}

std::string certificate_text(const Certificate& c) {
  std::ostringstream os;
  os << c.claim << ": " << (c.certified() ? "CERTIFIED" : c.hypothesis_met ? "NOT CERTIFIED" : "HYPOTHESIS NOT MET")
     << " (" << to_string(c.grade()) << ", evidence depth " << c.evidence_depth << ")\n";
  for (const auto& [k, v] : c.params) os << "  param  " << k << " = " << v << "\n";
  for (const auto& [k, v] : c.results) os << "  result " << k << " = " << v << "\n";
  std::size_t ok = 0;
  for (const Check& ch : c.checks) {
    if (ch.status == CheckStatus::certified) {
      ++ok;
      continue;
    }
    os << "  " << to_string(ch.status) << ": " << ch.name << "  lhs " << ch.lhs.to_string(12) << " " << ch.relation
       << " rhs " << ch.rhs.to_string(12) << "\n";
  }
  os << "  " << ok << "/" << c.checks.size() << " checks certified\n";
  for (const std::string& n : c.notes) os << "  note: " << n << "\n";
  return os.str();
}

std::string tables_text(const TablesReport& r) {
  std::ostringstream os;
  os << "Table 1 (precision " << r.precision_bits << " bits)\n";
  for (const Table1Row& row : r.table1) {
    os << "  m=" << row.m << " K=" << row.k_computed << " [" << flag(row.k_match) << "]"
       << "  q=" << row.q.to_string(18) << " [" << flag(row.q_match) << " vs " << row.q_printed << "]"
       << "  radius=" << row.radius.to_string(8) << " [" << flag(row.radius_match) << "]"
       << "  dim>=" << row.dim.to_string(12) << " [" << flag(row.dim_match) << " vs " << row.dim_printed << "]\n";
  }
  os << "Table 2\n";
  for (const Table2Row& row : r.table2) {
    os << "  k=" << row.k << "  q=" << row.q.to_string(17) << " [" << flag(row.q_match) << " vs " << row.q_printed
       << "]  radius=" << row.radius.to_string(8) << (row.one_sided ? " (one-sided)" : "") << " ["
       << flag(row.radius_match) << "]\n";
  }
  os << r.matched_rows() << "/" << r.total_rows() << " rows matched\n";
  return os.str();
}

std::string table1_csv(const TablesReport& r) {
  std::ostringstream os;
  os << "m,K_m,K_m_printed,q_lo,q_hi,q_printed,q_match,radius_lo,radius_hi,radius_printed,radius_match,"
        "dim_lo,dim_hi,dim_printed,dim_match\n";
  for (const Table1Row& row : r.table1) {
    os << row.m << "," << row.k_computed << "," << row.k_printed << "," << row.q.lo_string(20) << ","
       << row.q.hi_string(20) << "," << row.q_printed << "," << flag(row.q_match) << ","
       << row.radius.lo_string(20) << "," << row.radius.hi_string(20) << "," << row.radius_printed << ","
       << flag(row.radius_match) << "," << row.dim.lo_string(20) << "," << row.dim.hi_string(20) << ","
       << row.dim_printed << "," << flag(row.dim_match) << "\n";
  }
  return os.str();
}

std::string table2_csv(const TablesReport& r) {
  std::ostringstream os;
  os << "k,one_sided,q_lo,q_hi,q_printed,q_match,radius_lo,radius_hi,radius_printed,radius_match\n";
  for (const Table2Row& row : r.table2) {
    os << row.k << "," << (row.one_sided ? 1 : 0) << "," << row.q.lo_string(20) << "," << row.q.hi_string(20)
       << "," << row.q_printed << "," << flag(row.q_match) << "," << row.radius.lo_string(20) << ","
       << row.radius.hi_string(20) << "," << row.radius_printed << "," << flag(row.radius_match) << "\n";
  }
  return os.str();
}

std::string gaps_csv(const GapSet& set, const std::vector<int>& delta_lengths) {
  std::ostringstream os;
  os << "index,delta_length,left_lo,left_hi,right_lo,right_hi,diameter_lo\n";
  for (std::size_t i = 0; i < set.size(); ++i) {
    const Gap& g = set.gaps()[i];
    os << i << "," << (i < delta_lengths.size() ? delta_lengths[i] : -1) << "," << g.left.lo_string(20) << ","
       << g.left.hi_string(20) << "," << g.right.lo_string(20) << "," << g.right.hi_string(20) << ","
       << g.diameter().lo_string(20) << "\n";
  }
  return os.str();
}

std::string count_csv(const CountReport& r) {
  std::ostringstream os;
  os << "depth,certified_min,possible_max\n";
  for (const CountLevel& l : r.levels) os << l.depth << "," << l.certified_min << "," << l.possible_max << "\n";
  return os.str();
}

}  // namespace betacert
