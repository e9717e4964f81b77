// Command-line front end: poset construction, chain counts, the r-copies
// table, DOT/JSON diagrams, and numerical solving of Schubert problems on
// osculating flags.
#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "schubert/solver.hpp"

using json = nlohmann::json;
using namespace schubert;

namespace {

struct ProblemInput {
  ProblemSpec spec;
  std::vector<Rat> params;  // default curve parameters, possibly empty
};

Rat parse_rat(const std::string& text) {
  std::string t = text;
  if (t.empty()) throw FormatError("empty rational");
  try {
    Rat q(t);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw FormatError("not a rational: '" + text + "'");
  }
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    try {
      size_t used = 0;
      int v = std::stoi(piece, &used);
      if (used != piece.size()) throw std::invalid_argument(piece);
      out.push_back(v);
    } catch (const std::exception&) {
      throw FormatError("not an integer list: '" + text + "'");
    }
  }
  if (out.empty()) throw FormatError("empty integer list: '" + text + "'");
  return out;
}

std::vector<Rat> parse_rat_list(const std::string& text) {
  std::vector<Rat> out;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) out.push_back(parse_rat(piece));
  return out;
}

ProblemInput preset_problem(const std::string& name) {
  ProblemInput in;
  if (name == "fig1") {
    in.spec.space = Space::gr(3, 7);
    in.spec.conditions.assign(4, Condition::with_partition({2, 1}));
    in.params = {1, 2, 3, 4};
  } else if (name == "ex21") {
    in.spec.space = Space::fl(FlagShape{5, {2, 3}});
    for (int l : {2, 3, 2, 3, 2, 3, 2, 3})
      in.spec.conditions.push_back(Condition::at_level(l));
    in.params = {-8, -4, -2, -1, 1, 2, 4, 8};
  } else if (name == "lg2") {
    in.spec.space = Space::lg(2);
    in.spec.conditions.assign(2, Condition::simple());
    in.spec.target = make_strict_partition({2}, 2);
    in.params = {0, 1};
  } else if (name == "lg3") {
    in.spec.space = Space::lg(3);
    in.spec.conditions.assign(6, Condition::simple());
    in.params = {1, 2, 3, 4, 5, 6};
  } else if (name == "og3") {
    in.spec.space = Space::og(3);
    in.spec.conditions.assign(6, Condition::simple());
    in.params = {1, 2, 3, 4, 5, 6};
  } else if (name == "og4") {
    in.spec.space = Space::og(4);
    in.spec.conditions.assign(10, Condition::simple());
    in.params = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  } else {
    throw FormatError("unknown preset '" + name + "'");
  }
  return in;
}

bool is_preset(const std::string& s) {
  return s == "fig1" || s == "ex21" || s == "lg2" || s == "lg3" || s == "og3" ||
         s == "og4";
}

Space space_from_json(const json& j) {
  std::string fam = j.at("family").get<std::string>();
  if (fam == "fl") {
    FlagShape sh;
    sh.n = j.at("n").get<int>();
    sh.d = j.at("shape").get<std::vector<int>>();
    return Space::fl(sh);
  }
  if (fam == "gr") return Space::gr(j.at("k").get<int>(), j.at("n").get<int>());
  if (fam == "og") return Space::og(j.at("n").get<int>());
  if (fam == "lg") return Space::lg(j.at("n").get<int>());
  throw FormatError("unknown family '" + fam + "'");
}

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat((long)j.get<long long>());
  if (j.is_string()) return parse_rat(j.get<std::string>());
  throw FormatError("parameters must be integers or rational strings");
}

ProblemInput problem_from_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw FormatError("cannot open '" + path + "'");
  json j;
  try {
    f >> j;
  } catch (const json::exception& e) {
    throw FormatError("bad JSON in '" + path + "': " + e.what());
  }
  try {
    ProblemInput in;
    in.spec.space = space_from_json(j.at("space"));
    for (const json& c : j.at("conditions")) {
      if (c.is_string() && c.get<std::string>() == "simple")
        in.spec.conditions.push_back(Condition::simple());
      else if (c.is_object() && c.contains("level"))
        in.spec.conditions.push_back(Condition::at_level(c.at("level").get<int>()));
      else if (c.is_object() && c.contains("mu"))
        in.spec.conditions.push_back(
            Condition::with_partition(c.at("mu").get<std::vector<int>>()));
      else
        throw FormatError("condition must be \"simple\", {\"level\":d} or {\"mu\":[..]}");
    }
    if (j.contains("target")) {
      std::string t;
      if (j.at("target").is_array()) {
        std::string sep;
        for (const json& v : j.at("target")) {
          t += sep + std::to_string(v.get<int>());
          sep = ",";
        }
      } else {
        t = j.at("target").get<std::string>();
      }
      in.spec.target = parse_index(t, in.spec.space);
    }
    if (j.contains("params"))
      for (const json& p : j.at("params")) in.params.push_back(rat_from_json(p));
    return in;
  } catch (const json::exception& e) {
    throw FormatError("bad problem JSON: " + std::string(e.what()));
  }
}

struct Options {
  std::string space, mu, conditions, params, anchor, format, out;
  int k = 0, n = 0, copies = -1, rmax = 11;
  unsigned seed = 17;
  double tol_real = -1, tol_newton = -1;
};

ProblemInput resolve_problem(const Options& o) {
  if (o.space.empty()) throw FormatError("--space is required");
  if (is_preset(o.space)) {
    if (!o.mu.empty() || !o.conditions.empty() || o.copies >= 0)
      throw FormatError("preset '" + o.space + "' already fixes its conditions");
    return preset_problem(o.space);
  }
  if (o.space.size() > 5 && o.space.substr(o.space.size() - 5) == ".json")
    return problem_from_json_file(o.space);
  if (std::filesystem::exists(o.space) && o.space.find('/') != std::string::npos)
    return problem_from_json_file(o.space);

  std::string fam = o.space;
  int n = o.n;
  if ((fam.rfind("og", 0) == 0 || fam.rfind("lg", 0) == 0) && fam.size() > 2) {
    // compact form og3 / lg2
    try {
      n = std::stoi(fam.substr(2));
    } catch (const std::exception&) {
      throw FormatError("unknown space '" + o.space + "'");
    }
    fam = fam.substr(0, 2);
  }

  ProblemInput in;
  if (fam == "fl") {
    if (n <= 0) throw FormatError("fl needs --n");
    if (o.conditions.empty()) throw FormatError("fl needs --conditions (a level list)");
    std::vector<int> levels = parse_int_list(o.conditions);
    std::vector<int> shape = levels;
    std::sort(shape.begin(), shape.end());
    shape.erase(std::unique(shape.begin(), shape.end()), shape.end());
    in.spec.space = Space::fl(FlagShape{n, shape});
    for (int l : levels) in.spec.conditions.push_back(Condition::at_level(l));
  } else if (fam == "gr") {
    if (o.k <= 0 || n <= 0) throw FormatError("gr needs --k and --n");
    in.spec.space = Space::gr(o.k, n);
    if (!o.conditions.empty()) {
      std::stringstream ss(o.conditions);
      std::string piece;
      while (std::getline(ss, piece, ';'))
        in.spec.conditions.push_back(Condition::with_partition(parse_int_list(piece)));
    } else {
      if (o.mu.empty()) throw FormatError("gr needs --mu (with --copies) or --conditions");
      int copies = o.copies < 0 ? 1 : o.copies;
      in.spec.conditions.assign(copies, Condition::with_partition(parse_int_list(o.mu)));
    }
  } else if (fam == "og" || fam == "lg") {
    if (n <= 0) throw FormatError(fam + " needs --n or a compact name like " + fam + "3");
    in.spec.space = fam == "og" ? Space::og(n) : Space::lg(n);
    int copies = o.copies < 0 ? dimension(in.spec.space) : o.copies;
    in.spec.conditions.assign(copies, Condition::simple());
  } else {
    throw FormatError("unknown space '" + o.space + "'");
  }
  return in;
}

TrackerConfig tracker_from(const Options& o) {
  TrackerConfig cfg;
  cfg.seed = o.seed;
  if (o.tol_real > 0) cfg.reality_tol = o.tol_real;
  if (o.tol_newton > 0) cfg.residual_tol = o.tol_newton;
  return cfg;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw FormatError("cannot write '" + o.out + "'");
  f << text;
}

std::string fmt_complex(const std::complex<double>& c) {
  char buf[80];
  std::snprintf(buf, sizeof buf, "%.15g %c %.15gi", c.real(),
                c.imag() < 0 ? '-' : '+', std::abs(c.imag()));
  return buf;
}

std::string format_or(const Options& o, const char* dflt) {
  return o.format.empty() ? dflt : o.format;
}

int cmd_count(const Options& o, bool want_odd) {
  ProblemInput in = resolve_problem(o);
  Count value = want_odd ? odd(in.spec) : deg(in.spec);
  std::string fmt = format_or(o, "text");
  if (fmt == "text") {
    emit(o, value.get_str() + "\n");
  } else if (fmt == "json") {
    json j;
    j[want_odd ? "odd" : "deg"] = value.get_str();
    emit(o, j.dump(2) + "\n");
  } else {
    throw FormatError("unsupported format '" + fmt + "' (use text or json)");
  }
  return 0;
}

int cmd_table1(const Options& o) {
  std::string fmt = format_or(o, "csv");
  if (fmt != "csv" && fmt != "text")
    throw FormatError("unsupported format '" + fmt + "' (table1 is CSV)");
  if (o.rmax < 2) throw FormatError("--rmax must be at least 2");
  std::ostringstream out;
  out << "r,deg,odd,note\n";
  for (const TableRow& row : table1(o.rmax))
    out << row.r << "," << row.deg.get_str() << "," << row.odd.get_str() << ","
        << (row.r > 11 ? "unverified" : "") << "\n";
  emit(o, out.str());
  return 0;
}

int cmd_poset(const Options& o) {
  ProblemInput in = resolve_problem(o);
  MultiplicityPoset poset = build_poset(in.spec);
  emit(o, export_hasse(poset, format_or(o, "dot")));
  return 0;
}

struct SolveRun {
  ProblemInput in;
  Anchor anchor;
  Count expected;
  PolySystem sys;
  SolutionSet sols;
};

SolveRun run_solve(const Options& o) {
  SolveRun r;
  r.in = resolve_problem(o);
  if (!o.params.empty()) r.in.params = parse_rat_list(o.params);
  if (r.in.params.empty()) throw FormatError("solve needs --params");
  r.anchor = o.anchor.empty() ? default_anchor(r.in.spec.space)
                              : parse_anchor(o.anchor);
  r.expected = deg(r.in.spec);
  r.sys = build_system(r.in.spec, r.in.params, r.anchor, true, o.seed);
  r.sols = solve(r.sys, tracker_from(o));
  return r;
}

int cmd_solve(const Options& o) {
  SolveRun r = run_solve(o);
  const SolutionSet& s = r.sols;
  std::string fmt = format_or(o, "text");
  if (fmt == "text") {
    std::ostringstream out;
    out << "space: " << to_string(r.in.spec.space) << "\n";
    out << "target: " << to_string(r.in.spec.effective_target()) << "\n";
    out << "anchor: " << (r.anchor == Anchor::zero ? "0" : "infinity") << "\n";
    out << "params:";
    for (const Rat& p : r.in.params) out << " " << p.get_str();
    out << "\n";
    out << "deg: " << r.expected.get_str() << "\n";
    if (r.sys.squared_up) out << "squared-up rank conditions: yes\n";
    out << "paths: " << s.paths_tracked << " tracked, " << s.paths_diverged
        << " diverged, " << s.paths_stuck << " stuck\n";
    out << "solutions: " << s.points.size() << " (" << s.n_real << " real)\n";
    double worst = 0;
    for (double res : s.residuals) worst = std::max(worst, res);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", worst);
    out << "max residual: " << buf << "\n";
    for (size_t i = 0; i < s.points.size(); i++) {
      out << "solution " << (i + 1) << (s.is_real[i] ? " (real)" : "") << ":\n";
      for (size_t j = 0; j < s.points[i].size(); j++)
        out << "  x" << (j + 1) << " = " << fmt_complex(s.points[i][j]) << "\n";
    }
    emit(o, out.str());
  } else if (fmt == "json") {
    json j;
    j["space"] = to_string(r.in.spec.space);
    j["target"] = to_string(r.in.spec.effective_target());
    j["anchor"] = r.anchor == Anchor::zero ? "0" : "infinity";
    json params = json::array();
    for (const Rat& p : r.in.params) params.push_back(p.get_str());
    j["params"] = params;
    j["deg"] = r.expected.get_str();
    j["squared_up"] = r.sys.squared_up;
    j["paths"] = {{"tracked", r.sols.paths_tracked},
                  {"diverged", r.sols.paths_diverged},
                  {"stuck", r.sols.paths_stuck}};
    json sols = json::array();
    for (size_t i = 0; i < s.points.size(); i++) {
      json pt = json::array();
      for (const auto& c : s.points[i]) pt.push_back({c.real(), c.imag()});
      sols.push_back({{"point", pt},
                      {"residual", s.residuals[i]},
                      {"real", (bool)s.is_real[i]}});
    }
    j["solutions"] = sols;
    j["n_real"] = s.n_real;
    emit(o, j.dump(2) + "\n");
  } else {
    throw FormatError("unsupported format '" + fmt + "' (use text or json)");
  }
  if (Count((long)s.points.size()) != r.expected) {
    std::cerr << "error: found " << s.points.size() << " solutions, expected "
              << r.expected.get_str() << " (lost paths)\n";
    return 2;
  }
  return 0;
}

int cmd_sweep(const Options& o) {
  ProblemInput in = resolve_problem(o);
  if (o.params.empty()) throw FormatError("sweep needs --params (a tuple file)");
  std::ifstream f(o.params);
  if (!f) throw FormatError("cannot open '" + o.params + "'");
  std::vector<std::vector<Rat>> sets;
  std::string line;
  while (std::getline(f, line)) {
    if (line.empty() || line[0] == '#') continue;
    sets.push_back(parse_rat_list(line));
  }
  if (sets.empty()) throw FormatError("no parameter tuples in '" + o.params + "'");
  Anchor anchor = o.anchor.empty() ? default_anchor(in.spec.space)
                                   : parse_anchor(o.anchor);
  std::string fmt = format_or(o, "csv");
  if (fmt != "csv" && fmt != "text")
    throw FormatError("unsupported format '" + fmt + "' (sweep is CSV)");
  auto rows = sweep(in.spec, sets, anchor, tracker_from(o), true);
  std::ostringstream out;
  out << "params,total,expected,real\n";
  bool short_row = false;
  for (const SweepRow& r : rows) {
    std::string ps;
    for (const Rat& p : r.params) ps += (ps.empty() ? "" : " ") + p.get_str();
    out << ps << "," << r.total << "," << r.expected.get_str() << "," << r.real
        << "\n";
    if (Count((long)r.total) != r.expected) short_row = true;
  }
  emit(o, out.str());
  if (short_row) {
    std::cerr << "error: at least one sweep row lost paths\n";
    return 2;
  }
  return 0;
}

void add_common(CLI::App* sub, Options& o, bool tracker) {
  sub->add_option("--space", o.space,
                  "family (fl/gr/og/lg), compact og3/lg2, preset, or problem JSON path");
  sub->add_option("--k", o.k, "gr: subspace dimension");
  sub->add_option("--n", o.n, "ambient dimension parameter");
  sub->add_option("--mu", o.mu, "gr: partition, e.g. 2,1");
  sub->add_option("--copies", o.copies, "repeat count for the condition");
  sub->add_option("--conditions", o.conditions,
                  "fl: level list 2,3,2,3; gr: partitions 2,1;1;1");
  sub->add_option("--format", o.format, "text|csv|json|dot (subcommand-dependent)");
  sub->add_option("--out", o.out, "write output to this file instead of stdout");
  if (tracker) {
    sub->add_option("--params", o.params,
                    "solve: curve parameters -8,-4,...; sweep: tuple file path");
    sub->add_option("--anchor", o.anchor, "chart anchor: 0 or infinity");
    sub->add_option("--seed", o.seed, "random seed for start systems");
    sub->add_option("--tol-real", o.tol_real, "reality classification tolerance");
    sub->add_option("--tol-newton", o.tol_newton, "endpoint residual tolerance");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schubert problems on osculating flags: chain counts, posets, solving"};
  app.require_subcommand(1);
  Options o;

  CLI::App* c_deg = app.add_subcommand("deg", "multiplicity-weighted chain count");
  add_common(c_deg, o, false);
  CLI::App* c_odd = app.add_subcommand("odd", "odd-multiplicity chain count");
  add_common(c_odd, o, false);
  CLI::App* c_table = app.add_subcommand("table1", "deg/odd for r (2,1)-conditions on gr(3,r+3)");
  c_table->add_option("--rmax", o.rmax, "last r (default 11; beyond 11 flagged unverified)");
  c_table->add_option("--format", o.format, "csv");
  c_table->add_option("--out", o.out, "write output to this file");
  CLI::App* c_poset = app.add_subcommand("poset", "export the multiplicity poset (dot/json)");
  add_common(c_poset, o, false);
  CLI::App* c_solve = app.add_subcommand("solve", "solve one instance numerically");
  add_common(c_solve, o, true);
  CLI::App* c_sweep = app.add_subcommand("sweep", "solve many parameter tuples");
  add_common(c_sweep, o, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (c_deg->parsed()) return cmd_count(o, false);
    if (c_odd->parsed()) return cmd_count(o, true);
    if (c_table->parsed()) return cmd_table1(o);
    if (c_poset->parsed()) return cmd_poset(o);
    if (c_solve->parsed()) return cmd_solve(o);
    if (c_sweep->parsed()) return cmd_sweep(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::numeric ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
