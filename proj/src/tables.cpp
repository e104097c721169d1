#include "kpotent/tables.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <initializer_list>
#include <map>
#include <sstream>
#include <utility>

#include "kpotent/counting.hpp"
#include "kpotent/errors.hpp"
#include "kpotent/potent.hpp"

namespace kpotent {

namespace {

std::string star_key(int m) { return "m=" + std::to_string(m); }

std::string rhombus_key(int n, int m) {
  return "n=" + std::to_string(n) + ",m=" + std::to_string(m);
}

std::string y_key(int n, int m, int l) {
  return "n=" + std::to_string(n) + ",m=" + std::to_string(m) + ",l=" + std::to_string(l);
}

TableSpec star_table(int id, unsigned s, int m_lo) {
  TableSpec t;
  t.id = id;
  t.family = TableSpec::Family::StarArm;
  t.s = s;
  t.title = "star arm factors P(m, " + std::to_string(s) + ")";
  for (int m = m_lo; m <= 7; ++m) t.rows.push_back({star_key(m), m, 0, 0});
  return t;
}

TableSpec rhombus_table(int id, unsigned s,
                        std::initializer_list<std::pair<int, int>> nm) {
  TableSpec t;
  t.id = id;
  t.family = TableSpec::Family::Rhombus;
  t.s = s;
  t.title = "rhombus counts, s = " + std::to_string(s);
  for (auto [n, m] : nm) t.rows.push_back({rhombus_key(n, m), n, m, 0});
  return t;
}

TableSpec y_table(int id, unsigned s,
                  std::initializer_list<std::array<int, 3>> nml) {
  TableSpec t;
  t.id = id;
  t.family = TableSpec::Family::Y;
  t.s = s;
  t.title = "Y counts, s = " + std::to_string(s);
  for (auto [n, m, l] : nml) t.rows.push_back({y_key(n, m, l), n, m, l});
  return t;
}

std::string strip(const std::string& text) {
  std::size_t b = text.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = text.find_last_not_of(" \t\r");
  return text.substr(b, e - b + 1);
}

}  // namespace

const std::vector<TableSpec>& table_registry() {
  static const std::vector<TableSpec> reg = [] {
    std::vector<TableSpec> r;
    r.push_back(star_table(4, 3, 3));
    r.push_back(star_table(5, 4, 4));
    r.push_back(star_table(6, 5, 4));
    r.push_back(star_table(7, 6, 4));
    r.push_back(rhombus_table(
        9, 3, {{2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 2}, {3, 3}, {3, 4}, {3, 5}}));
    r.push_back(rhombus_table(10, 4, {{3, 2}, {3, 3}, {3, 4}, {3, 5}}));
    r.push_back(rhombus_table(11, 5, {{3, 4}, {3, 5}}));
    r.push_back(y_table(12, 3, {{{3, 3, 3}}, {{3, 3, 4}}, {{3, 3, 5}}}));
    return r;
  }();
  return reg;
}

std::vector<int> table_ids() {
  std::vector<int> ids;
  for (const auto& t : table_registry()) ids.push_back(t.id);
  return ids;
}

const TableSpec& table_spec(int id) {
  for (const auto& t : table_registry())
    if (t.id == id) return t;
  throw Error("unknown table id " + std::to_string(id));
}

std::string table_file_name(int id) {
  std::ostringstream os;
  os << "table" << (id < 10 ? "0" : "") << id << ".txt";
  return os.str();
}

QPolynomial compute_row(const TableSpec& spec, const TableRowSpec& row) {
  switch (spec.family) {
    case TableSpec::Family::StarArm:
      return star_p(static_cast<unsigned>(row.a), spec.s);
    case TableSpec::Family::Rhombus:
      return rhombus_count(static_cast<unsigned>(row.a), static_cast<unsigned>(row.b), spec.s);
    case TableSpec::Family::Y:
      return y_count(static_cast<unsigned>(row.a), static_cast<unsigned>(row.b),
                     static_cast<unsigned>(row.c), spec.s);
  }
  throw Error("unreachable table family");
}

std::vector<std::pair<std::string, QPolynomial>> load_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open table file: " + path);
  std::vector<std::pair<std::string, QPolynomial>> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = strip(line);
    if (line.empty()) continue;
    std::size_t colon = line.find(':');
    if (colon == std::string::npos)
      throw ParseError(path + ":" + std::to_string(lineno) + ": expected 'key: polynomial'");
    std::string key = strip(line.substr(0, colon));
    key.erase(std::remove(key.begin(), key.end(), ' '), key.end());
    if (key.empty())
      throw ParseError(path + ":" + std::to_string(lineno) + ": empty row key");
    try {
      rows.emplace_back(key, QPolynomial::parse(line.substr(colon + 1)));
    } catch (const Error& e) {
      throw ParseError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return rows;
}

const std::vector<Erratum>& errata_registry() {
  static const std::vector<Erratum> errata = {
      {4, "m=7",
       "recorded coefficient of q^17 is 340; the composition sum and the "
       "coloring recount both give 336 (row sums to 2191 at q=1 instead of 3^7 = 2187)"},
      {6, "m=7",
       "recorded coefficient of q^21 is 134400; the composition sum and the "
       "coloring recount both give 13440 (row sums to 5^7 + 120960 at q=1)"},
      {7, "m=6",
       "recorded coefficients of q^19 and q^17 are both 126000; the composition "
       "sum and the coloring recount both give 12600 (row sums to 6^6 + 226800 at q=1)"},
  };
  return errata;
}

const Erratum* find_erratum(int id, const std::string& key) {
  for (const auto& e : errata_registry())
    if (e.id == id && e.key == key) return &e;
  return nullptr;
}

bool TableDiff::clean() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const RowDiff& r) { return r.present && r.match; });
}

bool TableDiff::all_explained() const {
  return std::all_of(rows.begin(), rows.end(), [](const RowDiff& r) {
    return (r.present && r.match) || r.documented;
  });
}

TableDiff diff_table(int id, const std::string& golden_path) {
  const TableSpec& spec = table_spec(id);
  auto recorded = load_table_file(golden_path);
  std::map<std::string, QPolynomial> by_key(recorded.begin(), recorded.end());

  TableDiff diff;
  diff.id = id;
  for (const auto& row : spec.rows) {
    RowDiff rd;
    rd.key = row.key;
    rd.computed = compute_row(spec, row);
    auto it = by_key.find(row.key);
    if (it != by_key.end()) {
      rd.present = true;
      rd.recorded = it->second;
      rd.match = rd.recorded == rd.computed;
      by_key.erase(it);
    }
    if (!rd.match) {
      if (const Erratum* e = find_erratum(id, row.key)) {
        rd.documented = true;
        rd.note = e->note;
      }
    }
    diff.rows.push_back(std::move(rd));
  }
  for (const auto& [key, poly] : by_key) {
    RowDiff rd;
    rd.key = key;
    rd.recorded = poly;
    rd.present = true;
    rd.match = false;
    rd.note = "row not in registry";
    diff.rows.push_back(std::move(rd));
  }
  return diff;
}

bool adjudicate_row(const TableSpec& spec, const TableRowSpec& row) {
  QPolynomial closed = compute_row(spec, row);
  switch (spec.family) {
    case TableSpec::Family::StarArm: {
      // P(m, s) carries the arm-to-hub pinning exponent, so s * P(m, s) is
      // exactly the coloring polynomial of a chain of m+1 elements.
      Poset chain = Poset::chain(row.a + 1);
      return pattern_count_poly(chain, spec.s) == closed * Int(spec.s);
    }
    case TableSpec::Family::Rhombus: {
      Poset p = Poset::rhombus(row.a, row.b);
      return pattern_count_poly(p, spec.s) == closed;
    }
    case TableSpec::Family::Y: {
      Poset p = Poset::y(row.a, row.b, row.c);
      return pattern_count_poly(p, spec.s) == closed;
    }
  }
  throw Error("unreachable table family");
}

}  // namespace kpotent
