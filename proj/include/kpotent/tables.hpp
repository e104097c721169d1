#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kpotent/poset.hpp"
#include "kpotent/qpoly.hpp"

namespace kpotent {

// Registry of the recorded count tables shipped under tables/.  Three row
// families: star arm factors P(m, s), rhombus counts, and Y counts.
struct TableRowSpec {
  std::string key;  // "m=3", "n=2,m=2", "n=3,m=3,l=3"
  int a = 0;        // m (star arm) or n (rhombus, y)
  int b = 0;        // m (rhombus, y)
  int c = 0;        // l (y)
};

struct TableSpec {
  enum class Family { StarArm, Rhombus, Y };
  int id = 0;
  Family family = Family::StarArm;
  unsigned s = 0;  // admissible diagonal values per element
  std::string title;
  std::vector<TableRowSpec> rows;
};

const std::vector<TableSpec>& table_registry();
std::vector<int> table_ids();
const TableSpec& table_spec(int id);  // throws Error on unknown id

// Default golden file name for a table id: "table04.txt" etc.
std::string table_file_name(int id);

// Closed-form polynomial for one registry row.
QPolynomial compute_row(const TableSpec& spec, const TableRowSpec& row);

// Parse a golden table file: one "key: polynomial" row per line, '#' starts
// a comment, blank lines ignored.
std::vector<std::pair<std::string, QPolynomial>> load_table_file(const std::string& path);

// A recorded table row known to disagree with the closed form (and with the
// independent coloring recount).  `note` states the discrepancy.
struct Erratum {
  int id = 0;
  std::string key;
  std::string note;
};
const std::vector<Erratum>& errata_registry();
const Erratum* find_erratum(int id, const std::string& key);

struct RowDiff {
  std::string key;
  QPolynomial computed;
  QPolynomial recorded;
  bool present = false;     // row exists in the golden file
  bool match = false;       // recorded == computed
  bool documented = false;  // mismatch registered as an erratum
  std::string note;
};

struct TableDiff {
  int id = 0;
  std::vector<RowDiff> rows;
  bool clean() const;          // every row present and matching
  bool all_explained() const;  // every mismatch is a documented erratum
};

TableDiff diff_table(int id, const std::string& golden_path);

// Independent recount of one registry row by direct enumeration of diagonal
// colorings of the underlying poset, compared symbolically with the closed
// form.  Star rows are checked through s * P(m, s) == coloring polynomial of
// an (m+1)-chain (arm plus the hub it feeds).
bool adjudicate_row(const TableSpec& spec, const TableRowSpec& row);

}  // namespace kpotent
