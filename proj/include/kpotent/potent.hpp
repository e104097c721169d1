#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "kpotent/incmat.hpp"
#include "kpotent/qpoly.hpp"

namespace kpotent {

// Diagonal alphabet for constructions and counts: all (k+1)-potent scalars
// (s-mode, size gcd(k, q-1)+1) or the set {0, 1, w, ..., w^{k-1}} with w a
// primitive k-th root of unity (omega-mode, size k+1, needs k | q-1).
enum class DiagMode { Scalars, OmegaSet };

// A choice of (k+1)-potent scalar for every poset element, extension order.
struct DiagonalAssignment {
  std::shared_ptr<const Poset> poset;
  std::shared_ptr<const Field> field;
  unsigned k = 1;
  std::vector<Field::Elem> values;
};

// Validates that every value satisfies v^{k+1} = v.
DiagonalAssignment make_diagonal(std::shared_ptr<const Poset> poset,
                                 std::shared_ptr<const Field> field, unsigned k,
                                 std::vector<Field::Elem> values);

// The strict relation pairs (i, j) with d(i) != d(j), in extension order.
// These entries of a (k+1)-potent element are arbitrary; all other strict
// entries are forced.
std::vector<std::pair<int, int>> free_slots(const DiagonalAssignment& diag);

using FreeValues = std::map<std::pair<int, int>, Field::Elem>;

// The unique (k+1)-potent element with the given diagonal and free entries.
// Forced entries are solved pairwise in increasing extension span: writing
// r for the common diagonal value of a forced pair (i, j) and P for the sum
// over all monotone length-(k+1) paths i -> j that avoid the direct step,
// (A^{k+1})_ij = (k+1) r^k a_ij + P, so a_ij = -P/k when r != 0 and
// a_ij = P when r = 0. Throws CharGuardFailed / MissingFreeValue /
// ExtraFreeValue.
UpperMatrix complete_potent(const DiagonalAssignment& diag, const FreeValues& free_values);

// Literal closed form for one forced entry (i, j) with nonzero common
// diagonal value r: -(1/k) sum over step counts s = 2..k+1 and weakly
// increasing interior chains i < i_1 <= ... <= i_{s-1} < j of
// (k+2-s) r^{k+1-s} a_{i,i_1} a_{i_1,i_2} ... a_{i_{s-1},j}, where a repeated
// index contributes that element's diagonal entry. All smaller-span entries
// of `partial` must already be determined. Throws ZeroDiagonalCase when
// r = 0 (the closed form's -1/k prefactor is wrong there; the fixed-point
// route in complete_potent handles it).
Field::Elem forced_entry_closed_form(const DiagonalAssignment& diag, const UpperMatrix& partial,
                                     std::pair<int, int> slot);

// sum over all colorings d of the poset with `colors` colors of
// q^{#discordant strict pairs}, as a polynomial in q. Counting potent
// elements factors through this pattern polynomial: with an alphabet of s
// potent scalars the potent-element count is exactly its value, since each
// (diagonal, free values) pair completes to a unique potent element.
QPolynomial pattern_count_poly(const Poset& poset, unsigned colors);

// Number of (k+1)-potent elements whose diagonal is drawn from the mode's
// alphabet, by direct enumeration of diagonals (not by the closed-form
// composition sums). Guard-checked.
Int count_by_construction(const Poset& poset, const Field& field, unsigned k,
                          DiagMode mode = DiagMode::Scalars);

struct OracleOptions {
  std::uint64_t cap = 100'000'000;  // maximum number of states q^{#pairs}
  unsigned threads = 0;             // 0 = hardware concurrency
};

// Exhaustive oracle: counts A with A^{k+1} = A over ALL q^{#relation pairs}
// incidence-algebra elements. No theory involved; deterministic result
// regardless of worker count. Throws SearchSpaceTooLarge over the cap.
Int brute_force_count(const Poset& poset, const Field& field, unsigned k,
                      const OracleOptions& options = {});

// Single-threaded variant streaming every potent element in state order.
void brute_force_scan(const Poset& poset, const Field& field, unsigned k, std::uint64_t cap,
                      const std::function<void(const UpperMatrix&)>& on_potent);

}  // namespace kpotent
