#pragma once

#include <vector>

#include "kpotent/poset.hpp"
#include "kpotent/qpoly.hpp"

namespace kpotent {

// Compositions of n into s nonnegative parts, colexicographic order:
// (n,0,...,0) first, (0,...,0,n) last. There are C(n+s-1, s-1) of them.
class Compositions {
 public:
  Compositions(unsigned n, unsigned s);
  const std::vector<unsigned>& parts() const { return parts_; }
  bool done() const { return done_; }
  void next();

 private:
  unsigned n_;
  std::vector<unsigned> parts_;
  bool done_ = false;
};

// Number of discordant index pairs of a diagonal split into blocks of the
// given sizes: sum_{i<j} parts_i * parts_j = (n^2 - sum parts_i^2) / 2.
unsigned delta_stat(const std::vector<unsigned>& parts);

// Potent-element count for the full triangular algebra on a chain of n
// elements, with s admissible diagonal values:
//   sum over compositions n_1+...+n_s = n of multinomial(n; parts) q^Delta.
QPolynomial count_triangular(unsigned n, unsigned s);

// Arm factor for star posets. The hub value is pinned to the first scalar;
// arm diagonal entries differing from it contribute the extra q^{m - m_1}:
//   P(m, s) = sum over compositions of m of multinomial * q^{Delta + m - m_1}.
QPolynomial star_p(unsigned m, unsigned s);

// Star poset count: hub + main chain give count_triangular(n+1, s); each arm
// multiplies by its P factor.
QPolynomial star_count(unsigned n, const std::vector<unsigned>& arms, unsigned s);

// Rhombus count in the form the block analysis yields (authoritative form;
// matches the reference tables and the construction count):
//   s * sum over composition pairs of binom(n;n_i) binom(m;m_i)
//     * q^{Delta(n parts) + Delta(m parts) + T}
//     * ( q^T + q * sum_{j=2}^s q^{(n+m) - n_j - m_j} )
// with T = (n - n_1) + (m - m_1).
QPolynomial rhombus_count(unsigned n, unsigned m, unsigned s);

// Literal transcription of the statement form, whose first exponent reads
// sum_{i<j} (n_i m_j + m_i m_j); it disagrees with the proof form (the n_i m_j
// is a slip for n_i n_j) and is kept for the documented comparison.
QPolynomial rhombus_count_statement_form(unsigned n, unsigned m, unsigned s);

// Y poset count:
//   sum over composition triples of the three multinomials times
//   q^{Delta(n)+Delta(m)+Delta(l) + sum_{i != j} n_i (m_j + l_j)}.
QPolynomial y_count(unsigned n, unsigned m, unsigned l, unsigned s);

// Unitriangular-style count over partitions: l = number of h-th roots of
// unity in the field,
//   sum_{j=1}^{min(l,n)} sum over partitions m_1<=...<=m_j of n of
//     l!/((l-j)! g) * multinomial(n; parts) * q^{(n^2 - sum m_u^2)/2}
// where g is the product of factorials of run lengths of equal parts.
QPolynomial slowik_count(unsigned n, unsigned l);

struct SlowikEquivResult {
  bool pass = true;
  unsigned checked = 0;
  unsigned n = 0, l = 0;   // first counterexample when !pass
  QPolynomial lhs, rhs;
};

// slowik_count(n, l) == count_triangular(n, l) as exact polynomials for all
// 1 <= n <= n_max, 1 <= l <= l_max.
SlowikEquivResult slowik_equiv_check(unsigned n_max, unsigned l_max);

// Closed-form count for a builder shape (throws for file posets, which have
// no closed form and are handled by enumeration).
QPolynomial closed_form_count(const PosetShape& shape, unsigned s);

}  // namespace kpotent
