#include "betacert/certify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "betacert/constructions.hpp"
#include "betacert/errors.hpp"
#include "betacert/expansions.hpp"
#include "betacert/symbolic.hpp"
#include "betacert/thickness.hpp"

namespace betacert {

int k_threshold(int m) {
  if (m < 1) throw DomainError("k_threshold: m must be at least 1");
  for (int bits = std::max(working_precision(), 64); bits <= 1 << 14; bits *= 2) {
    PrecisionScope scope(bits);
    const Enclosure base = Enclosure::rational(1999, 1000);
    Enclosure v = Enclosure::rational(20, 19) * (Enclosure(m + 2L).log() / base.log() + 24) + 4;
    mpfr_t a, b;
    mpfr_inits2(bits, a, b, static_cast<mpfr_ptr>(nullptr));
    mpfr_ceil(a, v.lo());
    mpfr_ceil(b, v.hi());
    const bool same = mpfr_equal_p(a, b) != 0 && mpfr_integer_p(v.lo()) == 0;
    const long result = mpfr_get_si(a, MPFR_RNDN);
    mpfr_clears(a, b, static_cast<mpfr_ptr>(nullptr));
    if (same) return static_cast<int>(result);
  }
  throw PrecisionError("k_threshold: ceiling undecided");
}

Enclosure default_c() { return Enclosure::rational(19, 20); }

Enclosure fy_rhs(const Enclosure& beta, const Enclosure& c) {
  return beta.pow(c) * (1 - beta.pow(1 - c)) / (432L * 432L);
}

Certificate fy_inequality(int m, const Enclosure& tau, const Enclosure& beta, const Enclosure& c) {
  if (m < 1) throw DomainError("fy_inequality: m must be at least 1");
  if (!(c.certainly_positive() && certainly_less(c, Enclosure(1L))))
    throw DomainError("fy_inequality: c must lie in (0,1)");
  if (!tau.certainly_positive()) throw DomainError("fy_inequality: tau must be positive");
  if (!(beta.certainly_positive() && certainly_less_equal(beta, Enclosure::rational(1, 4))))
    throw DomainError("fy_inequality: beta must lie in (0, 1/4]");
  Certificate cert;
  cert.claim = "fy-inequality";
  cert.param("m", std::to_string(m));
  cert.param("tau", tau.to_string());
  cert.param("beta", beta.to_string());
  cert.param("c", c.to_string());
  const Enclosure lhs = (m + 2L) * tau.pow(-c);
  const Enclosure rhs = fy_rhs(beta, c);
  cert.add(check_less_equal("(m+2)tau^-c<=beta^c(1-beta^(1-c))/432^2", lhs, rhs));
  cert.result("lhs", lhs.to_string());
  cert.result("rhs", rhs.to_string());
  return cert;
}

Enclosure dim_lower_bound(int m, const Enclosure& q, int k) {
  if (m < 1) throw DomainError("dim_lower_bound: m must be at least 1");
  require_base(q, "dim_lower_bound");
  return 1 - 1024 * Enclosure(m + 2L).pow(Enclosure::rational(20, 19)) * q.pow(4 - k);
}

Enclosure theorem_a_radius(int m, int k) {
  if (m < 1) throw DomainError("theorem_a_radius: m must be at least 1");
  return bonacci_root(k).value.pow(-static_cast<long>((m + 2) * k + 3));
}

Enclosure theorem_b_radius(int k) {
  if (k < 9) throw DomainError("theorem_b_radius: k must be at least 9");
  const Enclosure qk = bonacci_root(k).value;
  return k == 9 ? qk.pow(-24) : qk.pow(-static_cast<long>(2 * k + 6));
}

void require_root_resolution(int k, const Enclosure& radius, const char* who) {
  const Enclosure qk = bonacci_root(k).value;
  Enclosure limit = radius * Enclosure::rational(1, 1024);
  if (!certainly_less_equal(qk.width(), limit))
    throw PrecisionError(std::string(who) + ": q_" + std::to_string(k) + " enclosure at " +
                         std::to_string(working_precision()) + " bits is wider than radius*2^-10; raise --precision");
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Sample {
  std::string label;
  Base base;
  long num = -1, den = 1;  // offset = num/den * radius when num >= 0
};

// Distance check for one sample; for offset samples the ratio is exact.
Check& distance_check(Certificate& c, const Sample& s, int k, const Enclosure& qs, const Enclosure& qk,
                      const Enclosure& radius, bool strict, const std::string& rname) {
  if (s.num >= 0) {
    const Enclosure t = Enclosure::rational(s.num, s.den);
    const std::string name = s.label + ".|q-q_k|/" + rname + (strict ? "<1" : "<=1");
    return c.add(strict ? check_less(name, t, Enclosure(1L)) : check_less_equal(name, t, Enclosure(1L)));
  }
  const bool at_root = s.base.exact_root() && s.base.root_of == k;
  const Enclosure dist = at_root ? Enclosure(0L) : (qs - qk).abs();
  const std::string name = s.label + ".|q-q_k|" + (strict ? "<" : "<=") + rname;
  return c.add(strict ? check_less(name, dist, radius) : check_less_equal(name, dist, radius));
}

std::string base_label(const Base& b) { return b.text.empty() ? b.value.to_string() : b.text; }

}  // namespace

Certificate theorem_a_certify(int m, int k, const std::optional<Base>& q, const TheoremOptions& opt) {
  const auto t0 = Clock::now();
  if (m < 1) throw DomainError("theorem_a_certify: m must be at least 1");
  Certificate c;
  c.claim = "theorem-A";
  c.param("m", std::to_string(m));
  c.param("k", std::to_string(k));
  c.param("mode", q ? "point" : "interval");
  if (q) c.param("q", base_label(*q));
  const int K = k_threshold(m);
  c.result("K_m", std::to_string(K));
  c.add(check_predicate("k>=K_m", k >= K ? Tri::yes : Tri::no));
  if (k < K) {
    c.hypothesis_met = false;
    c.notes.push_back("k is below K_m; the theorem does not apply");
    c.wall_time_ms = elapsed_ms(t0);
    return c;
  }
  const Enclosure rho0 = theorem_a_radius(m, k);
  require_root_resolution(k, rho0, "theorem_a_certify");

  // Layout differences are of size |eps| q^-km, far below the radius.
  const int bits = std::max(working_precision(), (2 * m + 2) * k + 128);
  PrecisionScope scope(bits);
  c.param("precision_bits", std::to_string(bits));
  const int depth = opt.depth > 0 ? opt.depth : 3 * k;
  c.param("depth", std::to_string(depth));
  c.evidence_depth = depth;
  const Enclosure qk = bonacci_root(k).value;
  const Enclosure rho = theorem_a_radius(m, k);
  c.result("q_k", qk.to_string(25));
  c.result("radius", rho.to_string(12));

  std::vector<Sample> samples;
  if (q) {
    samples.push_back({"q", *q});
  } else {
    samples.push_back({"q_k", Base::root(k), 0, 1});
    samples.push_back({"q_k-rho/2", Base::root_scaled(k, -1, 2, (m + 2) * k + 3), 1, 2});
    samples.push_back({"q_k+rho/2", Base::root_scaled(k, 1, 2, (m + 2) * k + 3), 1, 2});
  }
  Enclosure tau_floor;
  bool first = true;
  for (const Sample& s : samples) {
    const Enclosure qs = s.base.current();
    Check& h = distance_check(c, s, k, qs, qk, rho, true, "rho");
    if (h.status != CheckStatus::certified) {
      c.hypothesis_met = false;
      continue;
    }
    PQFamily f = build_pq_family(s.base, k, m, depth, opt.explicit_depth);
    for (Check& ch : f.checks) {
      ch.name = s.label + "." + ch.name;
      c.add(ch);
    }
    c.merge(epsilon_bounds(s.base, k, m), s.label);
    c.result(s.label + ".layout", to_string(f.layout));
    c.result(s.label + ".beta", f.beta.to_string(12));
    c.result(s.label + ".B_width", (f.b.hi - f.b.lo).to_string(12));
    c.result(s.label + ".tau_P", f.tau_p.to_string());
    c.result(s.label + ".tau_Q", f.tau_q.to_string());
    c.result(s.label + ".diameter", f.diameter.to_string(12));
    c.result(s.label + ".diameter_long_tails", f.diameter_long_tails.to_string(12));
    const Enclosure floor = qs.pow(k - 4);
    tau_floor = first ? floor : min(tau_floor, floor);
    first = false;
  }
  if (!first) {
    // In interval mode the worst case is the left end of the interval.
    if (!q) tau_floor = min(tau_floor, (qk - rho).pow(k - 4));
    Certificate fy = fy_inequality(m, tau_floor, Enclosure::rational(1, 8), default_c());
    c.merge(fy, "fy");
  }
  const Enclosure qdim = q ? q->current() : qk;
  const Enclosure dim = dim_lower_bound(m, qdim, k);
  c.add(check_less("dim_lower_bound>0", Enclosure(0L), dim));
  c.result("dim_lower_bound", dim.to_string(15));
  c.wall_time_ms = elapsed_ms(t0);
  return c;
}

Certificate theorem_b_certify(int k, const std::optional<Base>& q, const TheoremOptions& opt) {
  const auto t0 = Clock::now();
  if (k < 9) throw DomainError("theorem_b_certify: k must be at least 9");
  Certificate c;
  c.claim = "theorem-B";
  c.param("k", std::to_string(k));
  c.param("mode", q ? "point" : "interval");
  if (q) c.param("q", base_label(*q));
  const Enclosure r0 = theorem_b_radius(k);
  require_root_resolution(k, r0, "theorem_b_certify");
  const int bits = std::max(working_precision(), 512);
  PrecisionScope scope(bits);
  c.param("precision_bits", std::to_string(bits));
  const Enclosure qk = bonacci_root(k).value;
  const Enclosure radius = theorem_b_radius(k);
  const bool one_sided = k == 9;
  c.result("q_k", qk.to_string(25));
  c.result("radius", radius.to_string(12));
  c.result("interval", one_sided ? "(q_9, q_9 + radius]" : "[q_k - radius, q_k + radius]");

  const int s_depth = opt.explicit_depth >= 0 ? opt.explicit_depth : 14;
  const int a_depth = 2 * k + 4;
  const int a_thick_depth = 2 * k + 16;
  const int depth = opt.depth > 0 ? opt.depth : 3 * k;
  const int search = opt.search_depth > 0 ? opt.search_depth : opt.count_depth + 60;
  c.param("s_depth", std::to_string(s_depth));
  c.param("a_depth", std::to_string(a_thick_depth));
  c.param("thickness_depth", std::to_string(depth));
  c.evidence_depth = std::max({depth, a_thick_depth, opt.run_count ? opt.count_depth : 0});

  std::vector<Sample> samples;
  if (q) {
    samples.push_back({"q", *q});
  } else if (one_sided) {
    samples.push_back({"q_k+r/2", Base::root_scaled(k, 1, 2, 2 * k + 6), 1, 2});
    samples.push_back({"q_k+r", Base::root_scaled(k, 1, 1, 2 * k + 6), 1, 1});
  } else {
    samples.push_back({"q_k", Base::root(k), 0, 1});
    samples.push_back({"q_k-r", Base::root_scaled(k, -1, 1, 2 * k + 6), 1, 1});
    samples.push_back({"q_k+r", Base::root_scaled(k, 1, 1, 2 * k + 6), 1, 1});
  }

  WitnessReport w = witness_points(k);
  c.merge(w.certificate, "witness");

  const Enclosure bound = qk.pow(-static_cast<long>(2 * k + 4));
  const GapSet s_root = gaps_of_sk(qk, k - 1, s_depth).set;
  const AqDescription a_root_desc = fixed_expansion_of_one(Base::root(k), k, a_depth);
  const GapSet ga_root = GMap::make(qk, k).apply(aq_gapset(a_root_desc, a_depth));

  bool first = true;
  for (const Sample& s : samples) {
    const std::string& L = s.label;
    const Enclosure qs = s.base.current();
    const bool at_root = s.base.exact_root() && s.base.root_of == k;
    const Enclosure dist = at_root ? Enclosure(0L) : (qs - qk).abs();
    Check& h = distance_check(c, s, k, qs, qk, radius, false, "radius");
    bool ok = h.status == CheckStatus::certified;
    if (one_sided) {
      Check& side = c.add(check_less(L + ".q>q_9", qk, qs));
      ok = ok && side.status == CheckStatus::certified && !at_root;
    }
    if (!ok) {
      c.hypothesis_met = false;
      continue;
    }
    const GMap g = GMap::make(qs, k);
    // Extra digits keep the unresolved tail far below the gaps at the depths used.
    const int c_depth = std::max(a_thick_depth, first && opt.run_count ? search : 0) + 64;
    const AqDescription desc = fixed_expansion_of_one(s.base, k, c_depth);
    c.add(check_predicate(L + ".c prefix 1^k 0^(k+4)",
                          Word(desc.c.begin(), desc.c.begin() + 2 * k + 4) ==
                                  concat(repeat(Digit{1}, static_cast<std::size_t>(k)),
                                         repeat(Digit{0}, static_cast<std::size_t>(k + 4)))
                              ? Tri::yes
                              : Tri::no));

    // Hausdorff stability of both families.
    const GapSet s_q = gaps_of_sk(qs, k - 1, s_depth).set;
    c.add(check_less(L + ".d_H(S_(k-1))<q_k^(-2k-4)", hausdorff_distance(s_q, s_root), bound, true));
    c.add(check_less(L + ".|q-q_k|/((q-1)(q_k-1))<q_k^(-2k-4)", dist / ((qs - 1) * (qk - 1)), bound));
    const GapSet ga_q = g.apply(aq_gapset(desc, a_depth));
    c.add(check_less(L + ".d_H(g(A))<q_k^(-2k-4)", hausdorff_distance(ga_q, ga_root), bound, true));

    // Thickness and the Newhouse conclusion.
    const ThicknessValue tau_s = sk_thickness(qs, k - 1, depth);
    const GapSet a_set = aq_gapset(desc, a_thick_depth);
    const ThicknessValue tau_a = thickness(a_set);
    c.add(check_less(L + ".tau(S_(k-1))>q^(k-4)", qs.pow(k - 4), tau_s.tau, true));
    c.add(check_less(L + ".tau(A_q)>q^-5", qs.pow(-5), tau_a.tau, true));
    c.result(L + ".tau_S", tau_s.to_string());
    c.result(L + ".tau_A", tau_a.to_string());
    const GapSet s_shift = s_q.affine(Enclosure(1L), Enclosure(1L));
    Certificate nh = newhouse_certificate(s_shift, g.apply(a_set), tau_s, tau_a);
    c.merge(nh, L + ".newhouse");

    if (first && opt.run_count) {
      std::optional<IntersectionPoint> p = find_intersection(desc, search);
      c.add(check_predicate(L + ".intersection point found", p ? Tri::yes : Tri::no, true));
      if (p) {
        const Enclosure x = p->x / qs;
        c.result(L + ".intersection", p->x.to_string(30));
        c.result(L + ".x", x.to_string(30));
        c.result(L + ".search_nodes", std::to_string(p->nodes));
        Certificate cnt = certify_m_expansions(qs, x, 3, opt.count_depth);
        c.merge(cnt, L + ".count");
      }
    }
    first = false;
  }
  c.wall_time_ms = elapsed_ms(t0);
  return c;
}

namespace {

struct Printed {
  Enclosure value;
  Enclosure ulp;
};

Printed parse_printed(const std::string& text) {
  std::string mant = text;
  long exp10 = 0;
  auto e = text.find_first_of("eE");
  if (e != std::string::npos) {
    mant = text.substr(0, e);
    exp10 = std::stol(text.substr(e + 1));
  }
  auto dot = mant.find('.');
  long frac = dot == std::string::npos ? 0 : static_cast<long>(mant.size() - dot - 1);
  Printed p;
  p.value = Enclosure::parse(text);
  p.ulp = Enclosure::parse("1e" + std::to_string(exp10 - frac));
  return p;
}

}  // namespace

Tri matches_printed(const Enclosure& value, const std::string& printed, PrintedMode mode) {
  Printed p = parse_printed(printed);
  const Enclosure lo = p.value - p.ulp / 2;
  const Enclosure hi = mode == PrintedMode::rounded ? p.value + p.ulp / 2 : p.value + p.ulp;
  if (mpfr_cmp(value.lo(), lo.hi()) >= 0 && mpfr_cmp(value.hi(), hi.lo()) <= 0) return Tri::yes;
  if (mpfr_cmp(value.hi(), lo.lo()) < 0 || mpfr_cmp(value.lo(), hi.hi()) > 0) return Tri::no;
  return Tri::unknown;
}

bool Table1Row::matched() const {
  return k_match == Tri::yes && q_match == Tri::yes && radius_match == Tri::yes && dim_match == Tri::yes;
}

bool Table2Row::matched() const { return q_match == Tri::yes && radius_match == Tri::yes; }

int TablesReport::matched_rows() const {
  int n = 0;
  for (const auto& r : table1) n += r.matched();
  for (const auto& r : table2) n += r.matched();
  return n;
}

TablesReport reproduce_tables() {
  struct T1 {
    int m, k;
    const char *q, *radius, *dim;
  };
  static const T1 t1[] = {
      {1, 31, "1.999999999534342", "1.26218e-29", "0.999967173"},
      {2, 32, "1.999999999767168", "3.67342e-40", "0.999983586"},
      {3, 32, "1.999999999767168", "8.55285e-50", "0.999979240"},
      {4, 32, "1.999999999767168", "1.99136e-59", "0.999974848"},
      {5, 33, "1.999999999883594", "3.62227e-71", "0.999985209"},
  };
  struct T2 {
    int k;
    const char *q, *radius;
  };
  static const T2 t2[] = {
      {9, "1.99802947026229", "6.10316e-8"},   {10, "1.99901863271010", "1.50925e-8"},
      {11, "1.99951040197829", "3.75092e-9"},  {12, "1.99975550093732", "9.34745e-10"},
      {13, "1.99987783271155", "2.33286e-10"},
  };
  TablesReport rep;
  rep.precision_bits = working_precision();
  for (const T1& r : t1) {
    Table1Row row;
    row.m = r.m;
    row.k_printed = r.k;
    row.k_computed = k_threshold(r.m);
    row.k_match = row.k_computed == r.k ? Tri::yes : Tri::no;
    row.q_printed = r.q;
    row.radius_printed = r.radius;
    row.dim_printed = r.dim;
    row.radius = theorem_a_radius(r.m, row.k_computed);
    require_root_resolution(row.k_computed, row.radius, "tables");
    row.q = bonacci_root(row.k_computed).value;
    row.dim = dim_lower_bound(r.m, row.q, row.k_computed);
    row.q_match = matches_printed(row.q, r.q, PrintedMode::rounded);
    row.radius_match = matches_printed(row.radius, r.radius, PrintedMode::rounded);
    row.dim_match = matches_printed(row.dim, r.dim, PrintedMode::rounded_or_truncated);
    rep.table1.push_back(std::move(row));
  }
  for (const T2& r : t2) {
    Table2Row row;
    row.k = r.k;
    row.one_sided = r.k == 9;
    row.q_printed = r.q;
    row.radius_printed = r.radius;
    row.radius = theorem_b_radius(r.k);
    require_root_resolution(r.k, row.radius, "tables");
    row.q = bonacci_root(r.k).value;
    row.q_match = matches_printed(row.q, r.q, PrintedMode::rounded);
    row.radius_match = matches_printed(row.radius, r.radius, PrintedMode::rounded);
    rep.table2.push_back(std::move(row));
  }
  return rep;
}

}  // namespace betacert
