#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "betacert/certify.hpp"
#include "betacert/constructions.hpp"
#include "betacert/errors.hpp"
#include "betacert/expansions.hpp"
#include "betacert/realnum.hpp"
#include "betacert/report.hpp"
#include "betacert/symbolic.hpp"
#include "betacert/thickness.hpp"

namespace betacert::cli {

int resolve_precision(std::optional<int> flag, const char* env_value) {
  int bits = kDefaultPrecision;
  if (flag) {
    bits = *flag;
  } else if (env_value && *env_value) {
    std::string_view s(env_value);
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), bits);
    if (ec != std::errc() || end != s.data() + s.size())
      throw MalformedInput("BETACERT_PREC is not an integer: '" + std::string(s) + "'");
  }
  if (bits < kMinPrecision) throw DomainError("precision must be at least 64 bits");
  return bits;
}

Enclosure parse_point(std::string_view text, const Enclosure& q) {
  if (text == "iq") return iq_right(q);
  if (text.substr(0, 3) == "pi:") return pi_q(SymbolicSeq::parse(text.substr(3)), q);
  return Enclosure::parse(text);
}

namespace {

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const RunConfig& cfg, const std::string& body, std::ostream& out) {
  if (cfg.out.empty()) {
    out << body;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw ResourceError("cannot open output file '" + cfg.out + "'");
  f << body;
  if (!f) throw ResourceError("cannot write output file '" + cfg.out + "'");
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream f(path);
  if (!f) throw ResourceError("cannot open output file '" + path + "'");
  f << body;
  if (!f) throw ResourceError("cannot write output file '" + path + "'");
}

std::string certificate_csv(const Certificate& c) {
  std::ostringstream os;
  os << "name,relation,status,finite_depth,lhs_lo,lhs_hi,rhs_lo,rhs_hi\n";
  for (const Check& ch : c.checks) {
    os << '"' << ch.name << "\"," << ch.relation << "," << to_string(ch.status) << "," << (ch.finite_depth ? 1 : 0)
       << "," << ch.lhs.lo_string(20) << "," << ch.lhs.hi_string(20) << "," << ch.rhs.lo_string(20) << ","
       << ch.rhs.hi_string(20) << "\n";
  }
  return os.str();
}

void emit_certificate(const RunConfig& cfg, const Certificate& c, std::ostream& out, std::ostream& err) {
  if (cfg.format == "text") {
    emit(cfg, certificate_text(c), out);
    return;
  }
  const std::string body = cfg.format == "csv" ? certificate_csv(c) : to_json(c).dump(2) + "\n";
  // The summary goes wherever the data file does not.
  if (cfg.out.empty())
    err << certificate_text(c);
  else
    out << certificate_text(c);
  emit(cfg, body, out);
}

Base resolve_base(const std::string& text, int k) {
  if (text == "auto") {
    if (k < 2) throw Usage("--q auto needs --k");
    return Base::root(k);
  }
  return parse_base(text);
}

struct Flags {
  int m = 0, k = 0, s = 0, depth = 0, precision = 0, count_depth = 200;
  std::string q, x, format, out;
  bool interval = false, explicit_gaps = false, no_count = false;
  CLI::Option *m_opt = nullptr, *k_opt = nullptr, *s_opt = nullptr, *q_opt = nullptr, *depth_opt = nullptr,
              *prec_opt = nullptr, *x_opt = nullptr;
};

void add_common(CLI::App* sub, Flags& f, const std::string& default_format) {
  f.format = default_format;
  f.depth_opt = sub->add_option("--depth", f.depth, "evaluation depth");
  f.prec_opt = sub->add_option("--precision", f.precision, "working precision in bits (>= 64)");
  sub->add_option("--format", f.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--out", f.out, "output file (csv tables: file prefix)");
}

RunConfig make_config(const Flags& f, const char* cmd_default_format) {
  RunConfig cfg;
  cfg.precision_bits = resolve_precision(f.prec_opt && f.prec_opt->count() ? std::optional<int>(f.precision)
                                                                            : std::nullopt,
                                         std::getenv("BETACERT_PREC"));
  if (f.depth_opt && f.depth_opt->count() && f.depth < 1) throw Usage("--depth must be at least 1");
  cfg.depth = f.depth;
  cfg.format = f.format.empty() ? cmd_default_format : f.format;
  cfg.out = f.out;
  return cfg;
}

int cmd_tables(const RunConfig& cfg, std::ostream& out) {
  TablesReport r = reproduce_tables();
  if (cfg.format == "csv") {
    const std::string prefix = cfg.out.empty() ? "tables" : cfg.out;
    write_file(prefix + "_table1.csv", table1_csv(r));
    write_file(prefix + "_table2.csv", table2_csv(r));
    out << prefix << "_table1.csv\n" << prefix << "_table2.csv\n";
  } else if (cfg.format == "json") {
    emit(cfg, to_json(r).dump(2) + "\n", out);
  } else {
    emit(cfg, tables_text(r), out);
  }
  return r.matched_rows() == r.total_rows() ? kOk : kUncertified;
}

int cmd_certify(const Flags& f, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const bool has_m = f.m_opt->count() > 0;
  const bool has_k = f.k_opt->count() > 0;
  if (has_m && f.m < 1) throw Usage("--m must be at least 1");
  if (!has_m && !has_k) throw Usage("certify needs --m, --k or both");
  if (f.q_opt->count() && f.interval) throw Usage("--q and --interval are exclusive");
  const int k = has_k ? f.k : k_threshold(f.m);
  if (k < 2) throw Usage("--k must be at least 2");
  std::optional<Base> q;
  if (f.q_opt->count()) q = resolve_base(f.q, k);

  TheoremOptions opt;
  opt.depth = cfg.depth;
  opt.run_count = !f.no_count;
  opt.count_depth = f.count_depth;
  const bool route_b = !has_m || (f.m == 1 && k >= 9 && k < k_threshold(1));
  Certificate c = route_b ? theorem_b_certify(k, q, opt) : theorem_a_certify(f.m, k, q, opt);
  emit_certificate(cfg, c, out, err);
  return c.certified() ? kOk : kUncertified;
}

// --k K selects S_(K-1), the set used with base q_K; --s N selects S_N.
int subshift_index(const Flags& f) {
  if (f.s_opt->count()) {
    if (f.k_opt->count()) throw Usage("--k and --s are exclusive");
    if (f.s < 2) throw Usage("--s must be at least 2");
    return f.s;
  }
  if (!f.k_opt->count()) throw Usage("needs --k or --s");
  if (f.k < 3) throw Usage("--k must be at least 3");
  return f.k - 1;
}

int cmd_gaps(const Flags& f, const RunConfig& cfg, std::ostream& out) {
  const int s = subshift_index(f);
  const Base base = resolve_base(f.q.empty() ? "auto" : f.q, s + 1);
  const Enclosure q = base.current();
  const int depth = cfg.depth > 0 ? cfg.depth : 8;
  SkGaps g = gaps_of_sk(q, s, depth);
  std::vector<int> lens;
  for (const Word& w : g.deltas) lens.push_back(static_cast<int>(w.size()));
  if (cfg.format == "json") {
    Json j;
    j["q"] = bounds_json(q);
    j["subshift"] = s;
    j["depth"] = depth;
    j["hull"] = Json::array({bounds_json(g.set.lo()), bounds_json(g.set.hi())});
    j["collisions"] = g.collisions;
    Json gaps = Json::array();
    for (std::size_t i = 0; i < g.set.size(); ++i)
      gaps.push_back({{"delta", word_digits(g.deltas[i])},
                      {"left", bounds_json(g.set.gaps()[i].left)},
                      {"right", bounds_json(g.set.gaps()[i].right)}});
    j["gaps"] = gaps;
    emit(cfg, j.dump(2) + "\n", out);
  } else if (cfg.format == "csv") {
    emit(cfg, gaps_csv(g.set, lens), out);
  } else {
    std::ostringstream os;
    os << "S_" << s << " at q = " << q.to_string(20) << ", |delta| <= " << depth << ": " << g.set.size()
       << " gaps, hull " << g.set.lo().to_string(12) << " .. " << g.set.hi().to_string(12) << "\n";
    emit(cfg, os.str(), out);
  }
  return kOk;
}

int cmd_thickness(const Flags& f, const RunConfig& cfg, std::ostream& out) {
  const int s = subshift_index(f);
  const Base base = resolve_base(f.q.empty() ? "auto" : f.q, s + 1);
  const Enclosure q = base.current();
  const int depth = cfg.depth > 0 ? cfg.depth : 3 * (s + 1);
  const ThicknessValue t = f.explicit_gaps ? thickness(gaps_of_sk(q, s, depth).set) : sk_thickness(q, s, depth);
  // Lower bound q^(k-4) with k = s + 1.
  const Enclosure bound = q.pow(static_cast<long>(s) - 3);
  Check c = check_less("tau(S_" + std::to_string(s) + ")>q^" + std::to_string(s - 3), bound, t.tau, true);
  if (t.infinite) {
    c.status = CheckStatus::certified;
    c.note = "no bounded gaps";
  }
  if (cfg.format == "json") {
    Json j;
    j["q"] = bounds_json(q);
    j["subshift"] = s;
    j["method"] = f.explicit_gaps ? "explicit" : "structured";
    j["thickness"] = to_json(t);
    j["check"] = to_json(c);
    emit(cfg, j.dump(2) + "\n", out);
  } else if (cfg.format == "csv") {
    std::ostringstream os;
    os << "subshift,depth,gap_count,tau_lo,tau_hi,bound_lo,bound_hi,status\n"
       << s << "," << depth << "," << t.gap_count << "," << t.tau.lo_string(20) << "," << t.tau.hi_string(20) << ","
       << bound.lo_string(20) << "," << bound.hi_string(20) << "," << to_string(c.status) << "\n";
    emit(cfg, os.str(), out);
  } else {
    std::ostringstream os;
    os << "tau(S_" << s << ") at q = " << q.to_string(20) << ", depth " << depth << ": " << t.to_string() << "\n"
       << "  " << c.name << ": " << to_string(c.status) << " (bound " << bound.to_string(12) << ")\n";
    emit(cfg, os.str(), out);
  }
  return c.status == CheckStatus::certified ? kOk : kUncertified;
}

int cmd_count(const Flags& f, const RunConfig& cfg, std::ostream& out) {
  if (f.q.empty()) throw Usage("count needs --q");
  if (f.x.empty()) throw Usage("count needs --x");
  const Enclosure q = resolve_base(f.q, f.k_opt->count() ? f.k : 0).current();
  const Enclosure x = parse_point(f.x, q);
  const int depth = cfg.depth > 0 ? cfg.depth : 30;
  CountReport r = count_prefixes(q, x, depth);
  if (cfg.format == "json") {
    emit(cfg, to_json(r).dump(2) + "\n", out);
  } else if (cfg.format == "csv") {
    emit(cfg, count_csv(r), out);
  } else {
    std::ostringstream os;
    os << "q = " << q.to_string(20) << ", x = " << x.to_string(20) << "\n";
    for (const CountLevel& l : r.levels)
      os << "  depth " << l.depth << ": " << l.certified_min << " certain, " << l.possible_max << " possible\n";
    emit(cfg, os.str(), out);
  }
  return kOk;
}

int cmd_witness(const Flags& f, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!f.k_opt->count()) throw Usage("witness needs --k");
  WitnessReport w = witness_points(f.k);
  Certificate c = w.certificate;
  for (const WitnessPoint& p : w.points) {
    c.result(p.label + ".tail", word_digits(p.tail));
    c.result(p.label, p.projected.to_string(30));
    c.result("g(" + p.label + ")", p.image.to_string(30));
  }
  c.result("min_separation", w.min_separation.to_string(20));
  c.result("eps", w.eps.to_string(20));
  emit_certificate(cfg, c, out, err);
  return c.certified() ? kOk : kUncertified;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified computations for bases with exactly m expansions", "betacert"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "0.1.0");

  Flags tf, cf, gf, hf, nf, wf;
  CLI::App* tables = app.add_subcommand("tables", "reproduce the printed interval tables");
  add_common(tables, tf, "text");

  CLI::App* certify = app.add_subcommand("certify", "run the Theorem A or Theorem B pipeline");
  add_common(certify, cf, "json");
  cf.m_opt = certify->add_option("--m", cf.m, "number of expansions minus 2");
  cf.k_opt = certify->add_option("--k", cf.k, "k-Bonacci index");
  cf.q_opt = certify->add_option("--q", cf.q, "base: decimal, p/r, qk:K, qk:K+offset or auto");
  certify->add_flag("--interval", cf.interval, "certify the whole interval around q_k");
  certify->add_option("--count-depth", cf.count_depth, "prefix count depth (Theorem B)")->check(CLI::Range(8, 100000));
  certify->add_flag("--no-count", cf.no_count, "skip the intersection point search and count");

  CLI::App* gaps = app.add_subcommand("gaps", "list the gaps of pi_q(S_k)");
  add_common(gaps, gf, "csv");
  CLI::App* thick = app.add_subcommand("thickness", "thickness of pi_q(S_k)");
  add_common(thick, hf, "text");
  for (auto [sub, fl] : {std::pair{gaps, &gf}, std::pair{thick, &hf}}) {
    fl->k_opt = sub->add_option("--k", fl->k, "use S_(k-1) with q_k as default base");
    fl->s_opt = sub->add_option("--s", fl->s, "use S_s directly");
    fl->q_opt = sub->add_option("--q", fl->q, "base (default auto)");
  }
  thick->add_flag("--explicit", hf.explicit_gaps, "enumerate the gaps instead of the automaton evaluation");

  CLI::App* count = app.add_subcommand("count", "count expansion prefixes of x");
  add_common(count, nf, "csv");
  nf.k_opt = count->add_option("--k", nf.k, "index for --q auto");
  nf.q_opt = count->add_option("--q", nf.q, "base");
  nf.x_opt = count->add_option("--x", nf.x, "point: p/r, decimal, iq or pi:<sequence>");

  CLI::App* witness = app.add_subcommand("witness", "witness points of the Theorem B interleaving");
  add_common(witness, wf, "text");
  wf.k_opt = witness->add_option("--k", wf.k, "k-Bonacci index (>= 9)");

  std::vector<const char*> argv{"betacert"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    Flags* f = tables->parsed()    ? &tf
               : certify->parsed() ? &cf
               : gaps->parsed()    ? &gf
               : thick->parsed()   ? &hf
               : count->parsed()   ? &nf
                                   : &wf;
    const RunConfig cfg = make_config(*f, f->format.c_str());
    PrecisionScope scope(cfg.precision_bits);
    if (tables->parsed()) return cmd_tables(cfg, out);
    if (certify->parsed()) return cmd_certify(cf, cfg, out, err);
    if (gaps->parsed()) return cmd_gaps(gf, cfg, out);
    if (thick->parsed()) return cmd_thickness(hf, cfg, out);
    if (count->parsed()) return cmd_count(nf, cfg, out);
    return cmd_witness(wf, cfg, out, err);
  } catch (const Usage& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const MalformedInput& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionViolation& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const PrecisionError& e) {
    err << "precision error: " << e.what() << "\n";
    return kPrecision;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << "\n";
    return kPrecision;
  } catch (const InconsistencyError& e) {
    err << "check failed: " << e.what() << "\n";
    return kUncertified;
  }
}

}  // namespace betacert::cli
