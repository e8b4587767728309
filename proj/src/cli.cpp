#include "padic_moments/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "padic_moments/checks.hpp"
#include "padic_moments/serialization.hpp"

namespace padic {

PrecisionProfile default_profile(unsigned long p, OrientationKind kind) {
  PrecisionProfile pr;
  pr.p = p;
  if (p == 3) {
    pr.precision = 4;
    pr.tmin = -16;
    pr.nmax = 38;
  } else if (p == 2) {
    pr.precision = 7;
    pr.tmin = -24;
    pr.nmax = 36;
  } else {
    pr.precision = 4;
    pr.tmin = -16;
    pr.nmax = 12;
  }
  const bool witten = base_kind(kind) == OrientationKind::witten;
  pr.q_order = witten ? 10 : 1;
  pr.tmax = witten ? 8 : 1;
  return pr;
}

std::vector<int> parse_range(const std::string& text) {
  try {
    const auto colon = text.find(':');
    if (colon == std::string::npos) return {std::stoi(text)};
    const int a = std::stoi(text.substr(0, colon));
    const int b = std::stoi(text.substr(colon + 1));
    std::vector<int> out;
    const int step = a <= b ? 1 : -1;
    for (int k = a;; k += step) {
      out.push_back(k);
      if (k == b) break;
    }
    return out;
  } catch (const std::logic_error&) {
    throw ConfigError("bad range: " + text);
  }
}

namespace {

struct Options {
  std::string kind = "todd-sharp";
  std::string route = "closed";
  std::string variant = "full";
  unsigned long p = 3;
  int prec = 0, qmax = 0, tmin = 0, tmax = 0, nmax = 0;
  std::string c;
  std::string format;
  std::string out;
  // table
  std::string rows, cols, qrows, layout = "n-rows";
  int qdeg = 0, n = 1;
  // verify
  int imax = 2;
  int shifts = 0;
  bool corrupt = false;
  bool sharpened = false;
};

struct Given {
  CLI::Option* prec = nullptr;
  CLI::Option* qmax = nullptr;
  CLI::Option* tmin = nullptr;
  CLI::Option* tmax = nullptr;
  CLI::Option* nmax = nullptr;
};

void add_common(CLI::App* cmd, Options& o, Given& g) {
  cmd->add_option("--kind", o.kind, "todd | witten | todd-sharp | witten-sharp");
  cmd->add_option("--route", o.route, "closed | genfn | both");
  cmd->add_option("--variant", o.variant, "Todd# closed form: full | pole");
  cmd->add_option("--p", o.p, "prime");
  g.prec = cmd->add_option("--prec", o.prec, "p-adic precision N (digits)");
  g.qmax = cmd->add_option("--qmax,--Q", o.qmax, "q-truncation Q");
  g.tmin = cmd->add_option("--tmin", o.tmin, "lowest t-degree kept");
  g.tmax = cmd->add_option("--tmax", o.tmax, "t-degrees kept are < tmax");
  g.nmax = cmd->add_option("--nmax", o.nmax, "largest moment index");
  cmd->add_option("--c", o.c, "unit c (default 1+p)");
  cmd->add_option("--format", o.format, "json | csv | text");
  cmd->add_option("--out", o.out, "output file (default stdout)");
}

RunConfig resolve(const std::string& command, const Options& o, const Given& g) {
  RunConfig cfg;
  cfg.command = command;
  cfg.kind = parse_orientation_kind(o.kind);
  if (o.route != "closed" && o.route != "genfn" && o.route != "both")
    throw ConfigError("unknown route: " + o.route);
  cfg.route = o.route;
  cfg.variant = parse_variant(o.variant);
  if (!is_prime(o.p)) throw ConfigError("--p must be prime");
  cfg.profile = default_profile(o.p, cfg.kind);
  if (g.prec->count()) cfg.profile.precision = o.prec;
  if (g.qmax->count()) cfg.profile.q_order = o.qmax;
  if (g.tmin->count()) cfg.profile.tmin = o.tmin;
  if (g.tmax->count()) cfg.profile.tmax = o.tmax;
  if (g.nmax->count()) cfg.profile.nmax = o.nmax;
  cfg.profile.validate();
  cfg.c = o.c.empty() ? Rational(static_cast<long>(o.p + 1)) : parse_rational(o.c);
  require_moment_unit(cfg.c, cfg.profile.p, cfg.profile.precision);
  cfg.out_path = o.out;
  cfg.format = o.format;
  return cfg;
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) throw ConfigError("cannot write " + cfg.out_path);
  file << text;
}

int cmd_moments(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.format.empty() && cfg.format != "json") throw ConfigError("moments writes json only");
  if (cfg.route != "both") {
    const MomentSequence m = compute_moments(cfg.kind, parse_route(cfg.route), cfg.c, cfg.profile, cfg.variant);
    emit(cfg, to_json(m).dump(1) + "\n", out);
    return kExitOk;
  }
  const MomentSequence closed = moments_closed_form(cfg.kind, cfg.c, cfg.profile, ToddSharpVariant::full);
  const MomentSequence gen = moments_generating_function(cfg.kind, cfg.c, cfg.profile);
  const bool agree = closed.entries == gen.entries;
  nlohmann::json j{{"closed", to_json(closed)}, {"genfn", to_json(gen)}, {"agree", agree}};
  emit(cfg, j.dump(1) + "\n", out);
  return agree ? kExitOk : kExitCheckFailed;
}

int cmd_table(const RunConfig& cfg, const Options& o, std::ostream& out) {
  const std::string format = cfg.format.empty() ? "text" : cfg.format;
  if (format != "text" && format != "csv") throw ConfigError("table writes text or csv");
  if (cfg.route == "both") throw ConfigError("table needs a single route");
  const MomentSequence m = compute_moments(cfg.kind, parse_route(cfg.route), cfg.c, cfg.profile, cfg.variant);
  DigitTable table;
  if (o.layout == "n-rows") {
    const auto rows = parse_range(o.rows.empty() ? "1:" + std::to_string(cfg.profile.nmax) : o.rows);
    const auto cols = parse_range(o.cols.empty() ? "0:" + std::to_string(std::max(cfg.profile.tmin, cfg.profile.p == 3 ? -6 : -5)) : o.cols);
    if (rows.front() > rows.back()) throw ConfigError("--rows must be ascending");
    if (rows.front() < 0 || rows.back() > cfg.profile.nmax) throw ConfigError("--rows outside 0..nmax");
    table = digit_table(m, rows.front(), rows.back(), cols, cfg.profile.precision, o.qdeg);
  } else if (o.layout == "q-rows") {
    const auto qrows = parse_range(o.qrows.empty() ? "1:" + std::to_string(cfg.profile.q_order - 1) : o.qrows);
    const auto cols = parse_range(o.cols.empty() ? std::to_string(cfg.profile.tmax - 1) + ":1" : o.cols);
    if (o.n < 0 || o.n > cfg.profile.nmax) throw ConfigError("--n outside 0..nmax");
    table = digit_table_q_rows(m, o.n, qrows.front(), qrows.back(), cols, cfg.profile.precision);
  } else {
    throw ConfigError("--layout must be n-rows or q-rows");
  }
  emit(cfg, format == "csv" ? render_csv(table) : render_text(table), out);
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, const Options& o, std::ostream& out) {
  const std::string format = cfg.format.empty() ? "json" : cfg.format;
  if (format != "json" && format != "text") throw ConfigError("verify writes json or text");
  std::vector<TestPolynomial> family;
  family.push_back(canonical_family(cfg.profile.p, -1));
  for (int i = 1; i <= o.imax; ++i) family.push_back(canonical_family(cfg.profile.p, i, o.sharpened));
  std::vector<TestPolynomial> all;
  for (const auto& f : family)
    for (int s = 0; s <= o.shifts; ++s) all.push_back(shifted(f, s));
  for (const auto& f : all)
    if (f.degree() > cfg.profile.nmax)
      throw ConfigError("nmax = " + std::to_string(cfg.profile.nmax) + " is below the degree of " + f.label);
  if (cfg.route == "both") throw ConfigError("verify needs a single route");
  MomentSequence m = compute_moments(cfg.kind, parse_route(cfg.route), cfg.c, cfg.profile, cfg.variant);
  if (o.corrupt) m.entries[1].add_to(0, 0, 1);  // negative-path testing only
  bool ok = true;
  nlohmann::json reports = nlohmann::json::array();
  std::ostringstream text;
  for (const auto& f : all) {
    const CongruenceReport r = verify(f, m);
    ok = ok && r.passed();
    reports.push_back(to_json(r));
    text << (r.passed() ? "PASS " : "FAIL ") << r.label << " vs " << r.sequence << "  min valuation ";
    if (r.min_valuation == kInfiniteValuation) text << "inf"; else text << r.min_valuation;
    for (const auto& off : r.offenders)
      text << "\n  offender q^" << off.q_degree << " t^" << off.t_degree << " valuation " << off.valuation;
    text << '\n';
  }
  emit(cfg, format == "json" ? reports.dump(1) + "\n" : text.str(), out);
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_selfcheck(const RunConfig& cfg, std::ostream& out) {
  const auto results = run_selfcheck(cfg.c, cfg.profile);
  bool ok = true;
  std::ostringstream text;
  for (const auto& r : results) {
    ok = ok && r.passed;
    text << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << "  (" << r.detail << ")\n";
  }
  text << (ok ? "selfcheck passed\n" : "selfcheck FAILED\n");
  emit(cfg, text.str(), out);
  return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact p-adic moment sequences of the Todd, Witten and sharped orientations"};
  app.require_subcommand(1);
  Options o;
  Given gm, gt, gv, gs;
  auto* moments = app.add_subcommand("moments", "compute a moment sequence as JSON");
  add_common(moments, o, gm);
  auto* table = app.add_subcommand("table", "render a base-p digit table");
  add_common(table, o, gt);
  table->add_option("--rows", o.rows, "moment indices a:b (n-rows layout)");
  table->add_option("--cols", o.cols, "t-degrees a:b, in display order");
  table->add_option("--qdeg", o.qdeg, "q-degree of the slice (n-rows layout)");
  table->add_option("--layout", o.layout, "n-rows | q-rows");
  table->add_option("--n", o.n, "moment index (q-rows layout)");
  table->add_option("--qrows", o.qrows, "q-degrees a:b (q-rows layout)");
  auto* verify_cmd = app.add_subcommand("verify", "check the canonical congruence families");
  add_common(verify_cmd, o, gv);
  verify_cmd->add_option("--imax", o.imax, "largest family index");
  verify_cmd->add_option("--shifts", o.shifts, "also check r^s f for s = 1..shifts");
  verify_cmd->add_flag("--sharpened", o.sharpened, "odd p: divide the family by one more p");
  verify_cmd->add_flag("--corrupt", o.corrupt, "perturb M_1 before verifying (testing aid)");
  auto* selfcheck = app.add_subcommand("selfcheck", "run the oracle suite");
  add_common(selfcheck, o, gs);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    if (moments->parsed()) return cmd_moments(resolve("moments", o, gm), out);
    if (table->parsed()) return cmd_table(resolve("table", o, gt), o, out);
    if (verify_cmd->parsed()) return cmd_verify(resolve("verify", o, gv), o, out);
    if (selfcheck->parsed()) {
      RunConfig cfg = resolve("selfcheck", o, gs);
      // Oracle-sized defaults unless overridden.
      if (!gs.nmax->count()) cfg.profile.nmax = 6;
      if (!gs.qmax->count()) cfg.profile.q_order = 4;
      if (!gs.tmin->count()) cfg.profile.tmin = -24;
      if (!gs.tmax->count()) cfg.profile.tmax = 8;
      return cmd_selfcheck(cfg, out);
    }
  } catch (const NonIntegralError& e) {
    err << "non-integral: " << e.what() << '\n';
    return kExitNonIntegral;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const DomainError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const ProfileMismatchError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "check failed: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitConfig;
}

}  // namespace padic
