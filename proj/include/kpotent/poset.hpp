#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kpotent/errors.hpp"

namespace kpotent {

// Finite poset with a fixed linear extension: element indices ARE extension
// positions, so i <= j in the order implies i <= j as integers. The relation
// is stored reflexively and transitively closed; antisymmetry is enforced at
// construction (cover cycles are rejected). Instances are immutable.
class Poset {
 public:
  // x1 < x2 < ... < xn.
  static Poset chain(int n);

  // Hub x0 below a main chain x1..xn and below the first element of each arm
  // chain y{t}_1..y{t}_mt. star(0, {}) is the one-point poset.
  static Poset star(int n, const std::vector<int>& arms);

  // Chain x0 < x1 < ... < x{n+1} plus a parallel chain y1 < ... < ym glued by
  // x0 < y1 and ym < x{n+1}. rhombus(1,1) is the diamond.
  static Poset rhombus(int n, int m);

  // Chain r1..rn below both of two incomparable chains s1..sm and t1..tl.
  static Poset y(int n, int m, int l);

  // Labels in declaration order plus cover pairs (indices into labels).
  // The linear extension is the stable topological order (ties by
  // declaration). Throws DuplicateLabel / CycleError.
  static Poset from_covers(std::vector<std::string> labels,
                           std::vector<std::pair<int, int>> covers,
                           std::string shape = "custom");

  // Text format: '#' comments; an "elements:" section listing labels and a
  // "covers:" section listing a<b tokens. Sections may span lines.
  static Poset parse(const std::string& text);

  int size() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool leq(int i, int j) const { return leq_[static_cast<std::size_t>(i) * n_ + j]; }

  // All comparable pairs (i, j) with i <= j, sorted lexicographically;
  // includes the diagonal. Everything outside is identically zero in the
  // incidence algebra and unrepresented.
  const std::vector<std::pair<int, int>>& relation_pairs() const { return pairs_; }
  int pair_count() const { return static_cast<int>(pairs_.size()); }
  int pair_index(int i, int j) const { return pair_idx_[static_cast<std::size_t>(i) * n_ + j]; }

  const std::vector<std::pair<int, int>>& cover_pairs() const { return covers_; }

  // For relation pair (i, j): the list of (pair_index(i,t), pair_index(t,j))
  // over all t with i <= t <= j. This is the support of the convolution
  // (a*b)_{ij} = sum_t a_{it} b_{tj}.
  const std::vector<std::pair<int, int>>& convolution(int pair_idx) const {
    return conv_[pair_idx];
  }

  bool is_chain() const;
  const std::string& shape() const { return shape_; }

  std::string render() const;

  bool operator==(const Poset& o) const { return labels_ == o.labels_ && pairs_ == o.pairs_; }

 private:
  int n_ = 0;
  std::string shape_;
  std::vector<std::string> labels_;
  std::vector<char> leq_;       // n*n adjacency of the closed relation
  std::vector<int> pair_idx_;   // n*n -> index into pairs_ or -1
  std::vector<std::pair<int, int>> pairs_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<std::pair<int, int>>> conv_;

  void finish(std::string shape);  // closure, pair tables, convolution
};

// CLI shorthand for poset construction: "chain:3", "star:2:1,2" (arms after
// the second colon), "rhombus:2:2", "y:1:1:1", or "@path" for a poset file.
struct PosetShape {
  enum class Kind { Chain, Star, Rhombus, Y, File };
  Kind kind = Kind::Chain;
  int n = 0, m = 0, l = 0;
  std::vector<int> arms;
  std::string path;
};

PosetShape parse_shape(const std::string& text);
Poset build_shape(const PosetShape& shape);

}  // namespace kpotent
