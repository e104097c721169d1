#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "kpotent/field.hpp"
#include "kpotent/poset.hpp"

namespace kpotent {

// Element of the incidence algebra I(X, K), stored sparsely on the relation
// pairs of X (for a chain this is exactly an upper triangular matrix).
// Entries outside the relation are identically zero and unrepresented.
class UpperMatrix {
 public:
  UpperMatrix(std::shared_ptr<const Poset> poset, std::shared_ptr<const Field> field);

  static UpperMatrix identity(std::shared_ptr<const Poset> poset,
                              std::shared_ptr<const Field> field);

  int size() const { return poset_->size(); }
  const Poset& poset() const { return *poset_; }
  const Field& field() const { return *field_; }
  const std::shared_ptr<const Poset>& poset_ptr() const { return poset_; }
  const std::shared_ptr<const Field>& field_ptr() const { return field_; }

  Field::Elem at(int i, int j) const {
    int pi = poset_->pair_index(i, j);
    return pi < 0 ? 0 : vals_[pi];
  }
  // (i, j) must be a relation pair of the poset.
  void set(int i, int j, Field::Elem v);

  const std::vector<Field::Elem>& values() const { return vals_; }
  std::vector<Field::Elem>& values() { return vals_; }

  bool operator==(const UpperMatrix& o) const {
    return *poset_ == *o.poset_ && field_->same_as(*o.field_) && vals_ == o.vals_;
  }

 private:
  std::shared_ptr<const Poset> poset_;
  std::shared_ptr<const Field> field_;
  std::vector<Field::Elem> vals_;  // indexed by poset pair index
};

UpperMatrix mat_mul(const UpperMatrix& a, const UpperMatrix& b);
UpperMatrix mat_pow(const UpperMatrix& a, std::uint64_t t);

// A^{k+1} == A.
bool is_potent(const UpperMatrix& a, unsigned k);

// Closed forms for the outer blocks of A^{k+1} when A is partitioned as
//   [ r  a  x ]
//   [ 0  u  b ]
//   [ 0  0  t ]
// on a chain of n >= 3 elements (r, t scalars; a row; b column; u the middle
// (n-2)x(n-2) block):
//   a' = a (r^k e + r^{k-1} u + ... + u^k)
//   b' = (u^k + u^{k-1} t + ... + e t^k) b
//   x' = x h_k(r,t) + a [ sum_{d=0}^{k-1} h_{k-1-d}(r,t) u^d ] b
// with h_j(r,t) = r^j + r^{j-1} t + ... + t^j.
struct OuterPowerBlocks {
  std::vector<Field::Elem> a_row;  // (A^{k+1})_{1, 2..n-1}
  std::vector<Field::Elem> b_col;  // (A^{k+1})_{2..n-1, n}
  Field::Elem corner = 0;          // (A^{k+1})_{1, n}
};
OuterPowerBlocks outer_power_blocks(const UpperMatrix& a, unsigned k);

// Contiguous principal block A[lo..hi] of a chain matrix, as a matrix on
// chain(hi-lo+1). Principal blocks of (k+1)-potent matrices stay potent.
UpperMatrix principal_block(const UpperMatrix& a, int lo, int hi);

// Text format: "field" and "poset" header lines, then one "i j code" line
// per relation pair (1-based extension indices, canonical element codes).
std::string render_matrix(const UpperMatrix& a, const std::string& poset_label);

}  // namespace kpotent
