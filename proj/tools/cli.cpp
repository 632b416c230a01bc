#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <optional>
#include <sstream>
#include <thread>

#include "cuspidal/dedekind.hpp"
#include "cuspidal/enumerate.hpp"
#include "cuspidal/errors.hpp"
#include "cuspidal/hf.hpp"
#include "cuspidal/spectrum.hpp"

namespace cuspidal::cli {

namespace {

using json = nlohmann::json;

// A command's flat result rows; the same data backs results.rows in JSON and
// the CSV output.
struct Table {
  std::vector<std::string> columns;
  json rows = json::array();

  void add(json row) { rows.push_back(std::move(row)); }
};

struct Outcome {
  std::string command;
  json inputs = json::object();
  json results = json::object();
  json witnesses = json::array();
  Table table;
  std::ostringstream text;
  int exit_code = kExitSurvives;
};

enum class Format { kText, kJson, kCsv };

std::string csv_cell(const json& v) {
  std::string s;
  if (v.is_null()) return s;
  if (v.is_string()) {
    s = v.get<std::string>();
  } else {
    s = v.dump();
  }
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

void emit(Outcome& o, Format format, std::ostream& out) {
  switch (format) {
    case Format::kJson: {
      o.results["rows"] = o.table.rows;
      const json report = {{"schemaVersion", kSchemaVersion},
                           {"command", o.command},
                           {"inputs", o.inputs},
                           {"results", o.results},
                           {"witnesses", o.witnesses}};
      out << report.dump(2) << '\n';
      break;
    }
    case Format::kCsv: {
      for (std::size_t i = 0; i < o.table.columns.size(); ++i) {
        out << (i ? "," : "") << o.table.columns[i];
      }
      out << '\n';
      for (const auto& row : o.table.rows) {
        for (std::size_t i = 0; i < o.table.columns.size(); ++i) {
          const auto& key = o.table.columns[i];
          out << (i ? "," : "") << (row.contains(key) ? csv_cell(row[key]) : "");
        }
        out << '\n';
      }
      break;
    }
    case Format::kText:
      out << o.text.str();
      break;
  }
}

std::string fixed(const Rational& x, int digits) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(digits) << x.to_double();
  return os.str();
}

CuspConfiguration parse_cusps(const std::vector<std::string>& texts) {
  CuspConfiguration cfg;
  for (const auto& t : texts) cfg.cusps.push_back(parse_cusp(t));
  return cfg;
}

json curve_json(const CurveType& ct) {
  return {{"w", ct.w()}, {"d", ct.d()}, {"g", ct.g()}, {"c", ct.c()}};
}

std::string curve_line(const CurveType& ct) {
  std::ostringstream os;
  os << "curve (" << ct.a() << "," << ct.b() << "," << ct.e() << "): w=" << ct.w()
     << " d=" << ct.d() << " g=" << ct.g() << " c=" << ct.c() << '\n';
  return os.str();
}

json hf_witness_json(const CurveType& ct, const HfWitness& w) {
  return {{"filter", "hf"},       {"m", w.m},          {"m_plus_g", w.m_plus_g(ct)},
          {"s1", w.s1},           {"s2", w.s2},        {"r_value", w.r_value},
          {"p_value", w.p_value}};
}

json spectrum_witness_json(const SemicontinuityEvaluation& ev) {
  return {{"filter", "spectrum"},
          {"x", ev.x.str()},
          {"inside_local", ev.inside_local},
          {"inside_infinity", ev.inside_infinity},
          {"outside_local", ev.outside_local},
          {"outside_infinity", ev.outside_infinity},
          {"excess", ev.excess()}};
}

std::string describe(const SemicontinuityEvaluation& ev) {
  std::ostringstream os;
  os << "x = " << ev.x.str() << ": ";
  if (ev.inside_violated()) {
    os << ev.inside_local << " > " << ev.inside_infinity << " inside (x, x+1)";
  } else {
    os << ev.outside_local << " > " << ev.outside_infinity << " outside (x, x+1)";
  }
  return os.str();
}

std::string filter_state(const std::optional<Verdict>& v) {
  return v ? to_string(*v) : "skipped";
}

// ---- check -----------------------------------------------------------------

struct CheckArgs {
  Int a = 0, b = 0, e = 0;
  std::vector<std::string> cusps;
  std::string only = "all";
};

void cmd_check(const CheckArgs& args, Outcome& o) {
  o.command = "check";
  o.inputs = {{"a", args.a}, {"b", args.b}, {"e", args.e}, {"cusps", args.cusps},
              {"only", args.only}};
  const CurveType ct = make_curve_type(args.a, args.b, args.e);
  const CuspConfiguration cfg = parse_cusps(args.cusps);
  require_genus_compatible(ct, cfg);

  PipelineOptions options;
  options.run_hf = args.only != "spectrum";
  options.run_spectrum = args.only != "hf";
  const CandidateVerdict v = evaluate_candidate(ct, cfg, options);

  o.text << curve_line(ct) << "cusps: " << cfg.str() << '\n';
  if (options.run_hf) {
    for (const auto& c : cfg.cusps) {
      if (multiplicity_bound_check(ct, c)) continue;
      o.witnesses.push_back({{"filter", "multiplicity"}, {"cusp", c.str()},
                             {"r", c.r()}, {"b", ct.b()}});
      o.text << "multiplicity bound: violated by " << c.str() << " (r = " << c.r()
             << " > b = " << ct.b() << ")\n";
    }
    if (v.multiplicity_ok) o.text << "multiplicity bound: ok\n";
  }

  std::optional<Verdict> hf, spectrum;
  if (v.hf) {
    hf = v.hf->verdict;
    for (const auto& w : v.hf->witnesses) o.witnesses.push_back(hf_witness_json(ct, w));
    o.text << "hf: " << to_string(*hf);
    if (!v.hf->witnesses.empty()) {
      const auto& w = v.hf->witnesses.front();
      o.text << " at m+g = " << w.m_plus_g(ct) << ": R = " << w.r_value << " < P("
             << w.s1 << "," << w.s2 << ") = " << w.p_value;
      if (v.hf->witnesses.size() > 1) {
        o.text << " (" << v.hf->witnesses.size() << " violating m)";
      }
    }
    o.text << '\n';
  } else {
    o.text << "hf: skipped\n";
  }
  if (v.spectrum) {
    spectrum = v.spectrum->verdict;
    for (const auto& ev : v.spectrum->witnesses) {
      o.witnesses.push_back(spectrum_witness_json(ev));
    }
    o.text << "spectrum: " << to_string(*spectrum);
    if (const auto w = v.spectrum->primary_witness()) o.text << " at " << describe(*w);
    o.text << '\n';
    o.results["spectrum_evaluations"] = v.spectrum->evaluations;
    if (const auto w = v.spectrum->primary_witness()) {
      o.results["spectrum_primary_witness"] = spectrum_witness_json(*w);
    }
  } else {
    o.text << "spectrum: skipped\n";
  }

  const std::string verdict = v.survives ? "survives" : "obstructed";
  o.text << "verdict: " << verdict << '\n';
  o.results["curve"] = curve_json(ct);
  o.results["genus_ok"] = v.genus_ok;
  o.results["multiplicity_ok"] = v.multiplicity_ok;
  o.results["hf"] = filter_state(hf);
  o.results["spectrum"] = filter_state(spectrum);
  o.results["verdict"] = verdict;
  o.table.columns = {"a", "b", "e", "cusps", "genus_ok", "multiplicity_ok", "hf",
                     "spectrum", "verdict"};
  o.table.add({{"a", ct.a()}, {"b", ct.b()}, {"e", ct.e()}, {"cusps", cfg.str()},
               {"genus_ok", v.genus_ok}, {"multiplicity_ok", v.multiplicity_ok},
               {"hf", filter_state(hf)}, {"spectrum", filter_state(spectrum)},
               {"verdict", verdict}});
  o.exit_code = v.survives ? kExitSurvives : kExitObstructed;
}

// ---- enumerate -------------------------------------------------------------

struct EnumerateArgs {
  Int a = 0, b = 0, e = 0;
  Int max_cusps = 1;
  std::optional<Int> cap;
  unsigned jobs = 0;
  bool fast = false;
};

Int resolve_cap(const std::optional<Int>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv(kCapVariable)) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(env, &used);
      if (used == std::string(env).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    throw DomainError(std::string(kCapVariable) + " must be a positive integer");
  }
  return kDefaultCandidateCap;
}

// Splits the configurations into contiguous chunks, one per worker; results
// are reassembled in input order so output does not depend on the job count.
std::vector<CandidateVerdict> run_parallel(const CurveType& ct,
                                           const std::vector<CuspConfiguration>& cfgs,
                                           const PipelineOptions& options,
                                           unsigned jobs) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, cfgs.size()));
  if (jobs <= 1) return run_pipeline(ct, cfgs, options);
  const std::size_t chunk = (cfgs.size() + jobs - 1) / jobs;
  std::vector<std::future<std::vector<CandidateVerdict>>> parts;
  for (std::size_t begin = 0; begin < cfgs.size(); begin += chunk) {
    const std::size_t end = std::min(cfgs.size(), begin + chunk);
    parts.push_back(std::async(std::launch::async, [&, begin, end] {
      const std::vector<CuspConfiguration> slice(cfgs.begin() + begin, cfgs.begin() + end);
      return run_pipeline(ct, slice, options);
    }));
  }
  std::vector<CandidateVerdict> out;
  out.reserve(cfgs.size());
  for (auto& p : parts) {
    for (auto& v : p.get()) out.push_back(std::move(v));
  }
  return out;
}

void cmd_enumerate(const EnumerateArgs& args, Outcome& o) {
  o.command = "enumerate";
  const Int cap = resolve_cap(args.cap);
  o.inputs = {{"a", args.a}, {"b", args.b}, {"e", args.e}, {"max_cusps", args.max_cusps},
              {"cap", cap}, {"fast", args.fast}};
  const CurveType ct = make_curve_type(args.a, args.b, args.e);
  const auto cfgs = enumerate_configurations(ct, args.max_cusps, cap);
  PipelineOptions options;
  options.fast = args.fast;
  const auto verdicts = run_parallel(ct, cfgs, options, args.jobs);

  o.table.columns = {"configuration", "cusps", "multiplicity", "hf", "spectrum",
                     "survives"};
  Int survivors = 0;
  std::size_t width = std::string("configuration").size();
  for (const auto& v : verdicts) width = std::max(width, v.configuration.str().size());

  o.text << curve_line(ct);
  o.text << std::left << std::setw(static_cast<int>(width)) << "configuration"
         << "  multiplicity  hf          spectrum    verdict\n";
  for (const auto& v : verdicts) {
    const std::string cfg = v.configuration.str();
    const std::string mult = v.multiplicity_ok ? "ok" : "violated";
    const std::string hf = v.hf ? to_string(v.hf->verdict) : "skipped";
    const std::string sp = v.spectrum ? to_string(v.spectrum->verdict) : "skipped";
    survivors += v.survives ? 1 : 0;
    o.table.add({{"configuration", cfg},
                 {"cusps", static_cast<Int>(v.configuration.cusps.size())},
                 {"multiplicity", mult}, {"hf", hf}, {"spectrum", sp},
                 {"survives", v.survives}});
    o.text << std::left << std::setw(static_cast<int>(width)) << cfg << "  "
           << std::setw(12) << mult << "  " << std::setw(10) << hf << "  " << std::setw(10)
           << sp << "  " << (v.survives ? "survives" : "obstructed") << '\n';

    if (v.hf && !v.hf->witnesses.empty()) {
      json w = hf_witness_json(ct, v.hf->witnesses.front());
      w["configuration"] = cfg;
      o.witnesses.push_back(std::move(w));
    }
    if (v.spectrum) {
      if (const auto ev = v.spectrum->primary_witness()) {
        json w = spectrum_witness_json(*ev);
        w["configuration"] = cfg;
        o.witnesses.push_back(std::move(w));
      }
    }
  }
  o.text << verdicts.size() << " candidates, " << survivors << " survive\n";
  o.results["curve"] = curve_json(ct);
  o.results["candidates"] = static_cast<Int>(verdicts.size());
  o.results["survivors"] = survivors;
}

// ---- spectrum --------------------------------------------------------------

struct SpectrumArgs {
  Int a = 0, b = 0, e = 0;
  std::string method = "table";
};

void cmd_spectrum(const SpectrumArgs& args, Outcome& o) {
  o.command = "spectrum";
  o.inputs = {{"a", args.a}, {"b", args.b}, {"e", args.e}, {"method", args.method}};
  const CurveType ct = make_curve_type(args.a, args.b, args.e);
  const bool table = args.method != "derived";
  const bool derived = args.method != "table";
  const SpectrumMultiset primary =
      table ? spectrum_at_infinity_table(ct) : spectrum_at_infinity_derived(ct);

  o.table.columns = {"value", "multiplicity"};
  for (const auto& [x, m] : primary.entries()) {
    o.table.add({{"value", x.str()}, {"multiplicity", m}});
    o.text << x.str() << ' ' << m << '\n';
  }
  o.text << "total " << primary.total() << '\n';
  o.results["total"] = primary.total();

  if (table && derived) {
    const SpectrumMultiset other = spectrum_at_infinity_derived(ct);
    std::vector<Rational> keys;
    for (const auto& [x, m] : primary.entries()) keys.push_back(x);
    for (const auto& [x, m] : other.entries()) keys.push_back(x);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    for (const auto& x : keys) {
      const Int mt = primary.multiplicity(x), md = other.multiplicity(x);
      if (mt == md) continue;
      o.witnesses.push_back({{"x", x.str()}, {"table", mt}, {"derived", md}});
      o.text << "mismatch at " << x.str() << ": table " << mt << ", derived " << md << '\n';
    }
    const bool agree = o.witnesses.empty();
    o.results["methods_agree"] = agree;
    o.text << (agree ? "methods agree\n" : "methods disagree\n");
    if (!agree) o.exit_code = kExitMismatch;
  }
}

// ---- dedekind --------------------------------------------------------------

struct DedekindArgs {
  Int p = 0, q = 0, r = 0;
  Int b = 0, max_w = 0;
  std::string tol = "1/200";
};

void cmd_dedekind_s(const DedekindArgs& args, Outcome& o) {
  o.command = "dedekind s";
  o.inputs = {{"p", args.p}, {"q", args.q}};
  const Rational v = dedekind_sum(args.p, args.q);
  o.table.columns = {"p", "q", "value"};
  o.table.add({{"p", args.p}, {"q", args.q}, {"value", v.str()}});
  o.results["value"] = v.str();
  o.text << v.str() << '\n';
}

void cmd_dedekind_d(const DedekindArgs& args, Outcome& o) {
  o.command = "dedekind d";
  o.inputs = {{"p", args.p}, {"q", args.q}, {"r", args.r}};
  const Rational v = rademacher_sum(args.p, args.q, args.r);
  o.table.columns = {"p", "q", "r", "value"};
  o.table.add({{"p", args.p}, {"q", args.q}, {"r", args.r}, {"value", v.str()}});
  o.results["value"] = v.str();
  o.text << v.str() << '\n';
  const bool law_applies = args.p > 0 && args.q > 0 && gcd(args.p, args.q) == 1 &&
                           gcd(args.q, args.r) == 1 && gcd(args.p, args.r) == 1;
  if (law_applies) {
    const Rational rotations = v + rademacher_sum(args.r, args.p, args.q) +
                               rademacher_sum(args.q, args.r, args.p);
    const Rational rhs = rademacher_reciprocity_rhs(args.p, args.q, args.r);
    o.results["rotation_sum"] = rotations.str();
    o.results["reciprocity_rhs"] = rhs.str();
    o.results["reciprocity_holds"] = rotations == rhs;
    o.text << "rotation sum " << rotations.str() << ", reciprocity "
           << (rotations == rhs ? "holds" : "FAILS") << '\n';
    if (rotations != rhs) o.exit_code = kExitMismatch;
  }
}

void cmd_dedekind_limits(const DedekindArgs& args, Outcome& o) {
  o.command = "dedekind limits";
  const Rational tol = Rational::parse(args.tol);
  o.inputs = {{"b", args.b}, {"max_w", args.max_w}, {"tol", tol.str()}};
  const LimitReport report = verify_limits(args.b, args.max_w, tol);
  o.results["limits"] = {{"a", report.limits.a.str()},
                         {"b", report.limits.b.str()},
                         {"c", report.limits.c.str()}};
  o.results["within_tolerance"] = report.within_tolerance;
  o.table.columns = {"w", "a_over_w", "b_over_w", "c_over_w",
                     "a_deviation", "b_deviation", "c_deviation"};
  o.text << "b = " << args.b << ", limits a " << report.limits.a.str() << ", b "
         << report.limits.b.str() << ", c " << report.limits.c.str() << '\n';
  o.text << std::left << std::setw(10) << "w" << std::setw(13) << "|a_w/w - a|"
         << std::setw(13) << "|b_w/w - b|"
         << "|c_w/w - c|\n";
  for (const auto& s : report.samples) {
    o.table.add({{"w", s.w},
                 {"a_over_w", s.a_over_w.str()},
                 {"b_over_w", s.b_over_w.str()},
                 {"c_over_w", s.c_over_w.str()},
                 {"a_deviation", s.a_deviation.str()},
                 {"b_deviation", s.b_deviation.str()},
                 {"c_deviation", s.c_deviation.str()}});
    o.text << std::left << std::setw(10) << s.w << std::setw(13) << fixed(s.a_deviation, 3)
           << std::setw(13) << fixed(s.b_deviation, 3) << fixed(s.c_deviation, 3) << '\n';
  }
  o.text << (report.within_tolerance ? "within" : "outside") << " tolerance " << tol.str()
         << " at w = " << report.last().w << '\n';
  if (!report.within_tolerance) o.exit_code = kExitMismatch;
}

// ---- dinv ------------------------------------------------------------------

struct DinvArgs {
  Int a = 0, b = 0, e = 0;
  std::vector<std::string> cusps;
  std::optional<Int> m;
  bool all_m = false;
};

void cmd_dinv(const DinvArgs& args, Outcome& o) {
  o.command = "dinv";
  o.inputs = {{"a", args.a}, {"b", args.b}, {"e", args.e}, {"cusps", args.cusps}};
  if (args.m) o.inputs["m"] = *args.m;
  o.inputs["all_m"] = args.all_m;
  const CurveType ct = make_curve_type(args.a, args.b, args.e);
  const CuspConfiguration cfg = parse_cusps(args.cusps);
  require_genus_compatible(ct, cfg);
  const CountingFunction r = curve_r_function(ct, cfg);

  // Integer m with -d/2 <= m < d/2.
  Int lo = -(ct.d() / 2), hi = (ct.d() + 1) / 2 - 1;
  if (!args.all_m) lo = hi = *args.m;
  o.table.columns = {"m", "d"};
  for (Int m = lo; m <= hi; ++m) {
    const Rational v = d_invariant(ct, r, m);
    o.table.add({{"m", m}, {"d", v.str()}});
    o.text << m << ' ' << v.str() << '\n';
  }
  o.results["count"] = static_cast<Int>(o.table.rows.size());
}

// ---- repro -----------------------------------------------------------------

struct ReproCase {
  std::string name;
  std::vector<std::string> args;
  int expected_exit;
};

std::vector<ReproCase> repro_cases() {
  std::vector<ReproCase> cases = {
      {"spectrum_6_4_0", {"spectrum", "--a", "6", "--b", "4", "--e", "0", "--method", "both"}, 0},
      {"spectrum_6_6_0", {"spectrum", "--a", "6", "--b", "6", "--e", "0"}, 0},
      {"check_6_6_0_2_51", {"check", "--a", "6", "--b", "6", "--e", "0", "--cusp", "2:51"}, 2},
      {"check_6_6_0_3_26", {"check", "--a", "6", "--b", "6", "--e", "0", "--cusp", "3:26"}, 0},
      {"check_6_6_0_6_11", {"check", "--a", "6", "--b", "6", "--e", "0", "--cusp", "6:11"}, 0},
      {"enumerate_6_6_0", {"enumerate", "--a", "6", "--b", "6", "--e", "0", "--max-cusps", "1"}, 0},
      {"enumerate_4_4_4", {"enumerate", "--a", "4", "--b", "4", "--e", "4", "--max-cusps", "1"}, 0},
      {"dinv_6_6_0_6_11", {"dinv", "--a", "6", "--b", "6", "--e", "0", "--cusp", "6:11", "--all-m"}, 0},
      {"dedekind_s_1_3", {"dedekind", "s", "1", "3"}, 0},
      {"dedekind_d_2_3_5", {"dedekind", "d", "2", "3", "5"}, 0},
      {"dedekind_limits_3", {"dedekind", "limits", "--b", "3", "--max-w", "100000"}, 0},
  };
  for (Int e = 1; e <= 10; ++e) {
    cases.push_back({"check_4_4_" + std::to_string(e),
                     {"check", "--a", "4", "--b", "4", "--e", std::to_string(e), "--cusp",
                      "3:" + std::to_string(6 * e + 10), "--only", "hf"},
                     e % 2 == 0 ? 2 : 0});
  }
  return cases;
}

int cmd_repro(const std::string& dir, bool update, std::ostream& out, std::ostream& err) {
  namespace fs = std::filesystem;
  int failures = 0;
  for (const auto& c : repro_cases()) {
    auto args = c.args;
    args.push_back("--json");
    std::ostringstream captured, errors;
    const int code = run(args, captured, errors);
    const fs::path path = fs::path(dir) / (c.name + ".json");
    if (code != c.expected_exit) {
      out << "FAIL " << c.name << ": exit " << code << ", expected " << c.expected_exit
          << '\n';
      err << errors.str();
      ++failures;
      continue;
    }
    if (update) {
      fs::create_directories(dir);
      std::ofstream(path) << captured.str();
      out << "wrote " << path.string() << '\n';
      continue;
    }
    std::ifstream in(path);
    if (!in) {
      out << "FAIL " << c.name << ": missing " << path.string() << '\n';
      ++failures;
      continue;
    }
    const std::string golden{std::istreambuf_iterator<char>(in), {}};
    if (golden != captured.str()) {
      out << "FAIL " << c.name << ": output differs from " << path.string() << '\n';
      ++failures;
      continue;
    }
    out << "ok   " << c.name << '\n';
  }
  if (failures) {
    out << failures << " case(s) failed\n";
    return kExitMismatch;
  }
  return kExitSurvives;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Obstructions for rational cuspidal curves in Hirzebruch surfaces", "cuspidal"};
  app.require_subcommand(1);

  bool as_json = false, as_csv = false;
  const auto add_format = [&](CLI::App* sub) {
    auto* j = sub->add_flag("--json", as_json, "Emit one JSON report");
    auto* c = sub->add_flag("--csv", as_csv, "Emit a header row plus data rows");
    j->excludes(c);
  };
  const auto add_curve = [](CLI::App* sub, Int& a, Int& b, Int& e) {
    sub->add_option("--a", a, "Curve type a")->required();
    sub->add_option("--b", b, "Curve type b")->required();
    sub->add_option("--e", e, "Hirzebruch index e")->required();
  };

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Run both obstructions on one configuration");
  add_curve(check_cmd, check.a, check.b, check.e);
  check_cmd->add_option("--cusp", check.cusps, "Cusp r:s, repeatable");
  check_cmd->add_option("--only", check.only, "Restrict to one filter")
      ->check(CLI::IsMember({"hf", "spectrum"}));
  add_format(check_cmd);

  EnumerateArgs en;
  auto* en_cmd = app.add_subcommand("enumerate", "List and filter genus-compatible candidates");
  add_curve(en_cmd, en.a, en.b, en.e);
  en_cmd->add_option("--max-cusps", en.max_cusps, "Largest number of cusps")
      ->check(CLI::PositiveNumber);
  en_cmd->add_option("--cap", en.cap,
                     std::string("Candidate cap (default ") + kCapVariable + " or 1000000)")
      ->check(CLI::PositiveNumber);
  en_cmd->add_option("--jobs", en.jobs, "Worker threads (default: all cores)");
  en_cmd->add_flag("--fast", en.fast, "Stop at the first failed filter");
  add_format(en_cmd);

  SpectrumArgs sp;
  auto* sp_cmd = app.add_subcommand("spectrum", "Spectrum at infinity");
  add_curve(sp_cmd, sp.a, sp.b, sp.e);
  sp_cmd->add_option("--method", sp.method, "table, derived or both")
      ->check(CLI::IsMember({"table", "derived", "both"}));
  add_format(sp_cmd);

  DedekindArgs dd;
  auto* dd_cmd = app.add_subcommand("dedekind", "Dedekind and Rademacher sums");
  dd_cmd->require_subcommand(1);
  auto* s_cmd = dd_cmd->add_subcommand("s", "s(p, q)");
  s_cmd->add_option("p", dd.p)->required();
  s_cmd->add_option("q", dd.q)->required();
  add_format(s_cmd);
  auto* d_cmd = dd_cmd->add_subcommand("d", "D(p, q, r)");
  d_cmd->add_option("p", dd.p)->required();
  d_cmd->add_option("q", dd.q)->required();
  d_cmd->add_option("r", dd.r)->required();
  add_format(d_cmd);
  auto* lim_cmd = dd_cmd->add_subcommand("limits", "Convergence of a_w/w, b_w/w, c_w/w");
  lim_cmd->add_option("--b", dd.b)->required();
  lim_cmd->add_option("--max-w", dd.max_w)->required();
  lim_cmd->add_option("--tol", dd.tol, "Tolerance as p/q (default 1/200)");
  add_format(lim_cmd);

  DinvArgs dv;
  auto* dv_cmd = app.add_subcommand("dinv", "d-invariants of the boundary 3-manifold");
  add_curve(dv_cmd, dv.a, dv.b, dv.e);
  dv_cmd->add_option("--cusp", dv.cusps, "Cusp r:s, repeatable");
  auto* m_opt = dv_cmd->add_option("--m", dv.m, "Spin^c index m");
  auto* all_opt = dv_cmd->add_flag("--all-m", dv.all_m, "Every m in [-d/2, d/2)");
  m_opt->excludes(all_opt);
  add_format(dv_cmd);

  std::string golden_dir = CUSPIDAL_GOLDEN_DIR;
  bool update = false;
  auto* repro_cmd = app.add_subcommand("repro", "Rerun the worked examples against golden files");
  repro_cmd->add_option("--golden-dir", golden_dir, "Directory of golden JSON files");
  repro_cmd->add_flag("--update", update, "Rewrite the golden files");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (dv_cmd->parsed() && !dv.m && !dv.all_m) {
      throw CLI::ValidationError("dinv needs --m or --all-m");
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitError;
  }

  if (repro_cmd->parsed()) return cmd_repro(golden_dir, update, out, err);

  const Format format = as_json ? Format::kJson : as_csv ? Format::kCsv : Format::kText;
  Outcome o;
  try {
    if (check_cmd->parsed()) {
      cmd_check(check, o);
    } else if (en_cmd->parsed()) {
      cmd_enumerate(en, o);
    } else if (sp_cmd->parsed()) {
      cmd_spectrum(sp, o);
    } else if (s_cmd->parsed()) {
      cmd_dedekind_s(dd, o);
    } else if (d_cmd->parsed()) {
      cmd_dedekind_d(dd, o);
    } else if (lim_cmd->parsed()) {
      cmd_dedekind_limits(dd, o);
    } else if (dv_cmd->parsed()) {
      cmd_dinv(dv, o);
    }
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitMismatch;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  emit(o, format, out);
  return o.exit_code;
}

}  // namespace cuspidal::cli
