#include "kpotent/cli.hpp"

#include <cctype>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kpotent/counting.hpp"
#include "kpotent/errors.hpp"
#include "kpotent/field.hpp"
#include "kpotent/incmat.hpp"
#include "kpotent/poset.hpp"
#include "kpotent/potent.hpp"
#include "kpotent/qpoly.hpp"
#include "kpotent/tables.hpp"

namespace kpotent {

namespace {

using nlohmann::ordered_json;

constexpr const char* kVersion = "kpotent 1.0.0";

std::uint64_t to_cap(double v, const std::string& what) {
  if (!(v >= 1.0) || v > 9.0e18) throw Error(what + ": cap must be in [1, 9e18]");
  return static_cast<std::uint64_t>(v);
}

// Precedence: explicit --cap, then KPOTENT_CAP, then the built-in default.
std::uint64_t resolve_cap(bool flag_given, double flag_value) {
  if (flag_given) return to_cap(flag_value, "--cap");
  if (const char* env = std::getenv("KPOTENT_CAP")) {
    std::size_t pos = 0;
    double v = 0;
    try {
      v = std::stod(env, &pos);
    } catch (const std::exception&) {
      throw Error("KPOTENT_CAP: not a number: " + std::string(env));
    }
    while (env[pos] != '\0' && std::isspace(static_cast<unsigned char>(env[pos]))) ++pos;
    if (env[pos] != '\0') throw Error("KPOTENT_CAP: not a number: " + std::string(env));
    return to_cap(v, "KPOTENT_CAP");
  }
  return OracleOptions{}.cap;
}

std::shared_ptr<const Field> make_field(const std::string& text) {
  return std::make_shared<const Field>(Field::parse(text));
}

std::shared_ptr<const Poset> make_poset(const std::string& text) {
  return std::make_shared<const Poset>(build_shape(parse_shape(text)));
}

unsigned scalar_count(const Field& f, unsigned k) {
  return static_cast<unsigned>(f.potent_scalars(k).size());
}

void require_guard(const Field& f, unsigned k) {
  GuardResult g = f.char_guard(k);
  if (!g.pass) throw CharGuardFailed(g.reason);
}

std::vector<Field::Elem> parse_codes(const std::string& text, const Field& f) {
  std::vector<Field::Elem> codes;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &pos);
    } catch (const std::exception&) {
      throw ParseError("bad element code: " + tok);
    }
    if (pos != tok.size() || v >= f.q()) throw ParseError("bad element code: " + tok);
    codes.push_back(static_cast<Field::Elem>(v));
  }
  if (codes.empty()) throw ParseError("empty code list");
  return codes;
}

// "i,j=v" with 1-based extension positions.
void parse_free_entry(const std::string& text, const Field& f, FreeValues& into) {
  std::size_t eq = text.find('=');
  std::size_t comma = text.find(',');
  if (eq == std::string::npos || comma == std::string::npos || comma > eq)
    throw ParseError("free entry must be i,j=v: " + text);
  auto parse_int = [&](const std::string& tok) {
    std::size_t pos = 0;
    long v = 0;
    try {
      v = std::stol(tok, &pos);
    } catch (const std::exception&) {
      throw ParseError("bad free entry index: " + tok);
    }
    if (pos != tok.size() || v < 1) throw ParseError("bad free entry index: " + tok);
    return static_cast<int>(v);
  };
  int i = parse_int(text.substr(0, comma));
  int j = parse_int(text.substr(comma + 1, eq - comma - 1));
  std::string val = text.substr(eq + 1);
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(val, &pos);
  } catch (const std::exception&) {
    throw ParseError("bad element code: " + val);
  }
  if (pos != val.size() || v >= f.q()) throw ParseError("bad element code: " + val);
  into[{i - 1, j - 1}] = static_cast<Field::Elem>(v);
}

std::string int_str(const Int& v) { return v.str(); }

// Shared option bundle filled while wiring subcommands.
struct Cli {
  // roots
  std::string roots_field;
  unsigned roots_k = 1;
  // count
  std::string count_poset, count_field;
  unsigned count_k = 0, count_s = 0;
  bool count_symbolic = false;
  // complete
  std::string complete_poset, complete_field, complete_diag;
  unsigned complete_k = 1;
  std::vector<std::string> complete_free;
  bool complete_zero_free = false;
  // enumerate
  std::string enum_poset, enum_field, enum_mode = "scalars";
  unsigned enum_k = 1;
  bool enum_oracle = false, enum_list = false;
  // verify
  bool verify_all = false;
  std::string verify_poset, verify_field;
  unsigned verify_k = 1;
  // tables
  int tables_id = 0;
  std::string tables_dir = "tables";
  bool tables_allow_documented = false;
  // slowik-equiv
  unsigned slowik_n = 6, slowik_l = 5;
  // shared
  double cap_value = 0;
  bool json = false;
  unsigned threads = 0;
};

int run_roots(const Cli& o, std::ostream& out) {
  auto f = make_field(o.roots_field);
  auto scalars = f->potent_scalars(o.roots_k);
  if (o.json) {
    ordered_json j{{"verb", "roots"},
                   {"inputs", {{"field", f->name()}, {"k", o.roots_k}}},
                   {"result", {{"scalars", scalars}, {"s", scalars.size()}}},
                   {"checks", ordered_json::array()}};
    out << j.dump(2) << "\n";
    return 0;
  }
  for (std::size_t i = 0; i < scalars.size(); ++i) out << (i ? " " : "") << scalars[i];
  out << "\n" << "s=" << scalars.size() << "\n";
  return 0;
}

int run_count(const Cli& o, std::ostream& out) {
  PosetShape shape = parse_shape(o.count_poset);
  unsigned s = 0;
  std::shared_ptr<const Field> f;
  if (!o.count_field.empty()) {
    if (o.count_k == 0) throw CLI::ValidationError("count", "--k is required with --field");
    if (o.count_s > 0) throw CLI::ValidationError("count", "--s conflicts with --field");
    f = make_field(o.count_field);
    require_guard(*f, o.count_k);
    s = scalar_count(*f, o.count_k);
  } else if (o.count_s > 0) {
    if (!o.count_symbolic)
      throw CLI::ValidationError("count", "--s only makes sense with --symbolic");
    s = o.count_s;
  } else {
    throw CLI::ValidationError("count", "need --field (numeric) or --symbolic --s N");
  }

  QPolynomial poly;
  if (shape.kind == PosetShape::Kind::File) {
    auto poset = make_poset(o.count_poset);
    // coloring enumeration is s^n; keep it inside the state cap
    std::uint64_t cap = resolve_cap(false, 0);
    std::uint64_t cost = 1;
    for (int i = 0; i < poset->size(); ++i) {
      if (cost > cap / std::max(1u, s)) throw SearchSpaceTooLarge("s^n over the state cap");
      cost *= s;
    }
    poly = pattern_count_poly(*poset, s);
  } else {
    poly = closed_form_count(shape, s);
  }

  if (o.json) {
    ordered_json inputs{{"poset", o.count_poset}, {"s", s}};
    if (f) {
      inputs["field"] = f->name();
      inputs["k"] = o.count_k;
    }
    ordered_json result;
    if (o.count_symbolic)
      result["polynomial"] = poly.str();
    else
      result["count"] = int_str(poly.eval(Int(f->q())));
    ordered_json j{{"verb", "count"}, {"inputs", inputs}, {"result", result},
                   {"checks", ordered_json::array()}};
    out << j.dump(2) << "\n";
    return 0;
  }
  if (o.count_symbolic)
    out << poly.str() << "\n";
  else
    out << int_str(poly.eval(Int(f->q()))) << "\n";
  return 0;
}

int run_complete(const Cli& o, std::ostream& out) {
  auto poset = make_poset(o.complete_poset);
  auto field = make_field(o.complete_field);
  auto diag = make_diagonal(poset, field, o.complete_k, parse_codes(o.complete_diag, *field));
  FreeValues values;
  if (o.complete_zero_free) {
    if (!o.complete_free.empty())
      throw CLI::ValidationError("complete", "--zero-free excludes --free");
    for (auto slot : free_slots(diag)) values[slot] = 0;
  } else {
    for (const auto& text : o.complete_free) parse_free_entry(text, *field, values);
  }
  UpperMatrix a = complete_potent(diag, values);
  if (o.json) {
    ordered_json entries = ordered_json::array();
    for (std::size_t t = 0; t < poset->relation_pairs().size(); ++t) {
      auto [i, j] = poset->relation_pairs()[t];
      entries.push_back({{"i", i + 1}, {"j", j + 1}, {"value", a.values()[t]}});
    }
    ordered_json j{{"verb", "complete"},
                   {"inputs",
                    {{"poset", o.complete_poset},
                     {"field", field->name()},
                     {"k", o.complete_k},
                     {"diag", o.complete_diag}}},
                   {"result", {{"entries", entries}}},
                   {"checks", ordered_json::array({{{"name", "is_potent"}, {"status", "PASS"}}})}};
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "k=" << o.complete_k << "\n" << render_matrix(a, poset->shape());
  return 0;
}

int run_enumerate(const Cli& o, bool cap_given, std::ostream& out) {
  auto poset = make_poset(o.enum_poset);
  auto field = make_field(o.enum_field);
  DiagMode mode;
  if (o.enum_mode == "scalars")
    mode = DiagMode::Scalars;
  else if (o.enum_mode == "omega")
    mode = DiagMode::OmegaSet;
  else
    throw CLI::ValidationError("enumerate", "--mode must be scalars or omega");
  if (o.enum_oracle && mode != DiagMode::Scalars)
    throw CLI::ValidationError("enumerate", "--oracle compares all potent elements; use --mode scalars");

  std::uint64_t cap = resolve_cap(cap_given, o.cap_value);
  Int construction = count_by_construction(*poset, *field, o.enum_k, mode);

  ordered_json checks = ordered_json::array();
  ordered_json result{{"construction", int_str(construction)}};
  int rc = 0;
  std::ostringstream text;
  text << "construction: " << int_str(construction) << "\n";

  if (o.enum_oracle) {
    OracleOptions opt;
    opt.cap = cap;
    opt.threads = o.threads;
    Int oracle = brute_force_count(*poset, *field, o.enum_k, opt);
    bool ok = oracle == construction;
    text << "oracle: " << int_str(oracle) << "\n"
         << "verdict: " << (ok ? "match" : "MISMATCH") << "\n";
    result["oracle"] = int_str(oracle);
    checks.push_back({{"name", "oracle"}, {"status", ok ? "PASS" : "FAIL"}});
    if (!ok) rc = 1;
  }
  if (o.enum_list) {
    std::ostringstream matrices;
    std::uint64_t shown = 0;
    brute_force_scan(*poset, *field, o.enum_k, cap, [&](const UpperMatrix& a) {
      matrices << render_matrix(a, poset->shape()) << "\n";
      ++shown;
    });
    text << "elements: " << shown << "\n" << matrices.str();
    result["elements"] = shown;
  }
  if (o.json) {
    ordered_json j{{"verb", "enumerate"},
                   {"inputs",
                    {{"poset", o.enum_poset},
                     {"field", field->name()},
                     {"k", o.enum_k},
                     {"mode", o.enum_mode}}},
                   {"result", result},
                   {"checks", checks}};
    out << j.dump(2) << "\n";
    return rc;
  }
  out << text.str();
  return rc;
}

struct VerifyCase {
  std::string poset, field;
  unsigned k;
};

std::vector<VerifyCase> builtin_cases() {
  return {
      {"chain:1", "3", 1}, {"chain:2", "3", 1},  {"chain:3", "3", 1},     {"chain:4", "3", 1},
      {"chain:1", "5", 2}, {"chain:2", "5", 2},  {"chain:3", "5", 2},     {"chain:4", "5", 2},
      {"chain:2", "7", 2}, {"chain:3", "7", 2},  {"chain:2", "7", 3},     {"chain:3", "7", 3},
      {"star:1:1", "5", 2}, {"rhombus:1:1", "5", 2}, {"y:1:1:1", "5", 2},
  };
}

int run_verify(const Cli& o, bool cap_given, std::ostream& out) {
  std::vector<VerifyCase> cases;
  if (o.verify_all) {
    cases = builtin_cases();
  } else {
    if (o.verify_poset.empty() || o.verify_field.empty())
      throw CLI::ValidationError("verify", "need --all or --poset/--field/--k");
    cases.push_back({o.verify_poset, o.verify_field, o.verify_k});
  }
  OracleOptions opt;
  opt.cap = resolve_cap(cap_given, o.cap_value);
  opt.threads = o.threads;

  ordered_json checks = ordered_json::array();
  std::ostringstream text;
  int rc = 0;
  for (const auto& c : cases) {
    std::string name = c.poset + " field=" + c.field + " k=" + std::to_string(c.k);
    std::string status;
    std::string detail;
    try {
      auto field = make_field(c.field);
      require_guard(*field, c.k);
      PosetShape shape = parse_shape(c.poset);
      unsigned s = scalar_count(*field, c.k);
      Int expected = closed_form_count(shape, s).eval(Int(field->q()));
      auto poset = make_poset(c.poset);
      Int oracle = brute_force_count(*poset, *field, c.k, opt);
      bool ok = oracle == expected;
      status = ok ? "PASS" : "FAIL";
      detail = " expected=" + int_str(expected) + " oracle=" + int_str(oracle);
      if (!ok) rc = 1;
    } catch (const SearchSpaceTooLarge&) {
      status = "SKIP";
      detail = " reason=search-space-exceeds-cap";
    }
    text << status << " " << name << detail << "\n";
    checks.push_back({{"name", name}, {"status", status}});
  }
  if (o.json) {
    ordered_json j{{"verb", "verify"},
                   {"inputs", {{"all", o.verify_all}, {"cap", opt.cap}}},
                   {"result", {{"cases", cases.size()}}},
                   {"checks", checks}};
    out << j.dump(2) << "\n";
    return rc;
  }
  out << text.str();
  return rc;
}

int run_tables(const Cli& o, std::ostream& out) {
  std::vector<int> ids = o.tables_id ? std::vector<int>{o.tables_id} : table_ids();
  ordered_json checks = ordered_json::array();
  ordered_json jtables = ordered_json::array();
  std::ostringstream text;
  int rc = 0;
  for (int id : ids) {
    const TableSpec& spec = table_spec(id);
    TableDiff diff = diff_table(id, o.tables_dir + "/" + table_file_name(id));
    text << "table " << id << ": " << spec.title << "\n";
    ordered_json jrows = ordered_json::array();
    bool table_ok = true;
    for (const auto& row : diff.rows) {
      ordered_json jrow{{"key", row.key}};
      if (row.present && row.match) {
        text << "  " << row.key << ": " << row.computed.str() << "  [match]\n";
        jrow["status"] = "match";
        jrow["polynomial"] = row.computed.str();
        jrows.push_back(jrow);
        continue;
      }
      table_ok = false;
      text << "  " << row.key << ": " << row.computed.str() << "  [DIFF]\n";
      text << "    recorded: " << (row.present ? row.recorded.str() : "missing") << "\n";
      jrow["status"] = "diff";
      jrow["computed"] = row.computed.str();
      jrow["recorded"] = row.present ? row.recorded.str() : "missing";
      jrow["documented"] = row.documented;
      if (!row.note.empty()) {
        text << "    note: " << row.note << "\n";
        jrow["note"] = row.note;
      }
      bool adjudicated = false;
      for (const auto& rspec : spec.rows) {
        if (rspec.key == row.key) {
          adjudicated = adjudicate_row(spec, rspec);
          text << "    recount: "
               << (adjudicated ? "coloring enumeration confirms the computed form"
                               : "coloring enumeration DISAGREES with the computed form")
               << "\n";
          jrow["recount"] = adjudicated ? "confirms-computed" : "disagrees";
          break;
        }
      }
      if (!(o.tables_allow_documented && row.documented && adjudicated)) rc = 1;
      jrows.push_back(jrow);
    }
    checks.push_back({{"name", "table" + std::to_string(id)},
                      {"status", table_ok ? "PASS" : "DIFF"}});
    jtables.push_back({{"id", id}, {"title", spec.title}, {"rows", jrows}});
  }
  if (o.json) {
    ordered_json j{{"verb", "tables"},
                   {"inputs", {{"dir", o.tables_dir}}},
                   {"result", {{"tables", jtables}}},
                   {"checks", checks}};
    out << j.dump(2) << "\n";
    return rc;
  }
  out << text.str();
  return rc;
}

int run_slowik(const Cli& o, std::ostream& out) {
  SlowikEquivResult res = slowik_equiv_check(o.slowik_n, o.slowik_l);
  if (o.json) {
    ordered_json result{{"checked", res.checked}};
    if (!res.pass) {
      result["counterexample"] = {{"n", res.n},
                                  {"l", res.l},
                                  {"lhs", res.lhs.str()},
                                  {"rhs", res.rhs.str()}};
    }
    ordered_json j{
        {"verb", "slowik-equiv"},
        {"inputs", {{"n", o.slowik_n}, {"l", o.slowik_l}}},
        {"result", result},
        {"checks",
         ordered_json::array({{{"name", "identity"}, {"status", res.pass ? "PASS" : "FAIL"}}})}};
    out << j.dump(2) << "\n";
    return res.pass ? 0 : 1;
  }
  out << "checked=" << res.checked << " n<=" << o.slowik_n << " l<=" << o.slowik_l << "\n";
  if (res.pass) {
    out << "PASS\n";
    return 0;
  }
  out << "FAIL n=" << res.n << " l=" << res.l << " partition-form=" << res.lhs.str()
      << " composition-form=" << res.rhs.str() << "\n";
  return 1;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"(k+1)-potent elements of triangular and incidence algebras"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  Cli o;

  CLI::App* roots = app.add_subcommand("roots", "potent scalars of a field");
  roots->add_option("--field", o.roots_field, "field, e.g. 7 or 3^2")->required();
  roots->add_option("--k", o.roots_k, "potency exponent: A^{k+1}=A")->required();
  roots->add_flag("--json", o.json, "JSON output");

  CLI::App* count = app.add_subcommand("count", "count potent elements by closed form");
  count->add_option("--poset", o.count_poset, "chain:n, star:n:..., rhombus:n:m, y:n:m:l, @file")
      ->required();
  count->add_option("--k", o.count_k, "potency exponent");
  count->add_option("--field", o.count_field, "field for a numeric count");
  count->add_option("--s", o.count_s, "diagonal alphabet size for --symbolic");
  count->add_flag("--symbolic", o.count_symbolic, "print the counting polynomial");
  count->add_flag("--json", o.json, "JSON output");

  CLI::App* complete = app.add_subcommand("complete", "complete a diagonal to a potent element");
  complete->add_option("--poset", o.complete_poset, "poset shape")->required();
  complete->add_option("--field", o.complete_field, "field")->required();
  complete->add_option("--k", o.complete_k, "potency exponent")->required();
  complete->add_option("--diag", o.complete_diag, "comma-separated diagonal codes")->required();
  complete->add_option("--free", o.complete_free, "free entry i,j=v (repeatable)");
  complete->add_flag("--zero-free", o.complete_zero_free, "set every free entry to 0");
  complete->add_flag("--json", o.json, "JSON output");

  CLI::App* enumerate = app.add_subcommand("enumerate", "count (and list) by construction");
  enumerate->add_option("--poset", o.enum_poset, "poset shape")->required();
  enumerate->add_option("--field", o.enum_field, "field")->required();
  enumerate->add_option("--k", o.enum_k, "potency exponent")->required();
  enumerate->add_option("--mode", o.enum_mode, "diagonal alphabet: scalars|omega");
  enumerate->add_flag("--oracle", o.enum_oracle, "compare with the exhaustive oracle");
  enumerate->add_flag("--list", o.enum_list, "print every potent element");
  CLI::Option* enum_cap = enumerate->add_option("--cap", o.cap_value, "state cap");
  enumerate->add_option("--threads", o.threads, "oracle worker count");
  enumerate->add_flag("--json", o.json, "JSON output");

  CLI::App* verify = app.add_subcommand("verify", "closed forms vs exhaustive oracle");
  verify->add_flag("--all", o.verify_all, "run the built-in case matrix");
  verify->add_option("--poset", o.verify_poset, "poset shape");
  verify->add_option("--field", o.verify_field, "field");
  verify->add_option("--k", o.verify_k, "potency exponent");
  CLI::Option* verify_cap = verify->add_option("--cap", o.cap_value, "state cap");
  verify->add_option("--threads", o.threads, "oracle worker count");
  verify->add_flag("--json", o.json, "JSON output");

  CLI::App* tables = app.add_subcommand("tables", "recompute and diff the recorded tables");
  tables->add_option("--id", o.tables_id, "table id (default: all)");
  tables->add_option("--dir", o.tables_dir, "golden file directory (default: tables)");
  tables->add_flag("--allow-documented", o.tables_allow_documented,
                   "exit 0 when every diff is a documented, recount-confirmed erratum");
  tables->add_flag("--json", o.json, "JSON output");

  CLI::App* slowik = app.add_subcommand("slowik-equiv",
                                        "partition-form vs composition-form chain counts");
  slowik->add_option("--n,--n-max", o.slowik_n, "max chain length");
  slowik->add_option("--l,--l-max", o.slowik_l, "max alphabet size");
  slowik->add_flag("--json", o.json, "JSON output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (roots->parsed()) return run_roots(o, out);
    if (count->parsed()) return run_count(o, out);
    if (complete->parsed()) return run_complete(o, out);
    if (enumerate->parsed()) return run_enumerate(o, enum_cap->count() > 0, out);
    if (verify->parsed()) return run_verify(o, verify_cap->count() > 0, out);
    if (tables->parsed()) return run_tables(o, out);
    if (slowik->parsed()) return run_slowik(o, out);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace kpotent
