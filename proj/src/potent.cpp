#include "kpotent/potent.hpp"

#include <algorithm>
#include <thread>

namespace kpotent {

DiagonalAssignment make_diagonal(std::shared_ptr<const Poset> poset,
                                 std::shared_ptr<const Field> field, unsigned k,
                                 std::vector<Field::Elem> values) {
  if (static_cast<int>(values.size()) != poset->size())
    throw Error("diagonal has " + std::to_string(values.size()) + " values for " +
                std::to_string(poset->size()) + " elements");
  if (k == 0) throw Error("potency index k must be positive");
  for (Field::Elem v : values)
    if (field->pow(v, static_cast<std::uint64_t>(k) + 1) != v)
      throw Error("diagonal value " + std::to_string(v) + " is not (k+1)-potent in GF(" +
                  field->name() + ")");
  return DiagonalAssignment{std::move(poset), std::move(field), k, std::move(values)};
}

std::vector<std::pair<int, int>> free_slots(const DiagonalAssignment& diag) {
  std::vector<std::pair<int, int>> out;
  for (auto [i, j] : diag.poset->relation_pairs())
    if (i != j && diag.values[i] != diag.values[j]) out.emplace_back(i, j);
  return out;  // relation_pairs is sorted, so this is extension order
}

UpperMatrix complete_potent(const DiagonalAssignment& diag, const FreeValues& free_values) {
  const Poset& poset = *diag.poset;
  const Field& field = *diag.field;
  const unsigned k = diag.k;

  if (GuardResult guard = field.char_guard(k); !guard.pass) throw CharGuardFailed(guard.reason);

  auto slots = free_slots(diag);
  for (const auto& slot : slots)
    if (!free_values.count(slot))
      throw MissingFreeValue("no value for free entry (" + std::to_string(slot.first + 1) + "," +
                             std::to_string(slot.second + 1) + ")");
  if (free_values.size() != slots.size())
    for (const auto& [slot, v] : free_values)
      if (!std::binary_search(slots.begin(), slots.end(), slot))
        throw ExtraFreeValue("entry (" + std::to_string(slot.first + 1) + "," +
                             std::to_string(slot.second + 1) + ") is not free");

  const int n = poset.size();
  UpperMatrix a(diag.poset, diag.field);
  for (int i = 0; i < n; ++i) a.set(i, i, diag.values[i]);
  for (const auto& [slot, v] : free_values) a.set(slot.first, slot.second, v);

  // Forced entries in increasing span: every monotone path i -> j other than
  // the direct step only crosses pairs of strictly smaller span, so the path
  // sum P below involves already-determined entries only. The pending entry
  // itself is still zero, which silently excludes the direct step from P.
  std::vector<std::pair<int, int>> forced;
  for (auto [i, j] : poset.relation_pairs())
    if (i != j && diag.values[i] == diag.values[j]) forced.emplace_back(i, j);
  std::sort(forced.begin(), forced.end(), [](auto lhs, auto rhs) {
    return std::make_tuple(lhs.second - lhs.first, lhs.first) <
           std::make_tuple(rhs.second - rhs.first, rhs.first);
  });

  const Field::Elem k_in_field = field.from_int(k);
  std::vector<Field::Elem> walk(n), next(n);
  for (auto [i, j] : forced) {
    // walk[t] = sum over monotone paths i -> t of the current length.
    std::fill(walk.begin(), walk.end(), 0);
    walk[i] = 1;
    for (unsigned step = 0; step <= k; ++step) {
      std::fill(next.begin(), next.end(), 0);
      for (int y = i; y <= j; ++y) {
        Field::Elem acc = 0;
        for (int x = i; x <= y; ++x)
          if (walk[x] != 0 && poset.leq(x, y)) acc = field.add(acc, field.mul(walk[x], a.at(x, y)));
        next[y] = acc;
      }
      std::swap(walk, next);
    }
    const Field::Elem path_sum = walk[j];
    const Field::Elem r = diag.values[i];
    a.set(i, j, r != 0 ? field.neg(field.div(path_sum, k_in_field)) : path_sum);
  }
  return a;
}

Field::Elem forced_entry_closed_form(const DiagonalAssignment& diag, const UpperMatrix& partial,
                                     std::pair<int, int> slot) {
  const Poset& poset = *diag.poset;
  const Field& field = *diag.field;
  const unsigned k = diag.k;
  const auto [i, j] = slot;

  if (GuardResult guard = field.char_guard(k); !guard.pass) throw CharGuardFailed(guard.reason);
  if (poset.pair_index(i, j) < 0 || i == j || diag.values[i] != diag.values[j])
    throw Error("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                ") is not a forced slot");
  const Field::Elem r = diag.values[i];
  if (r == 0)
    throw ZeroDiagonalCase("closed form needs a nonzero diagonal value at the forced pair");

  std::vector<int> interior;  // elements strictly between i and j in the poset
  for (int v = i + 1; v < j; ++v)
    if (poset.leq(i, v) && poset.leq(v, j)) interior.push_back(v);

  Field::Elem total = 0;
  // chain = (i_1 <= ... <= i_{s-1}); extend or close against j.
  std::vector<int> chain;
  auto recurse = [&](auto&& self, Field::Elem product) -> void {
    const unsigned s = static_cast<unsigned>(chain.size()) + 1;  // step count when closed now
    if (!chain.empty() && s <= k + 1) {
      // close the chain: multiply by a_{last, j} and the coefficient
      Field::Elem closed = field.mul(product, partial.at(chain.back(), j));
      Field::Elem coeff = field.mul(field.from_int(k + 2 - s), field.pow(r, k + 1 - s));
      total = field.add(total, field.mul(coeff, closed));
    }
    if (s >= k + 1) return;  // no room for another step
    for (int v : interior) {
      if (!chain.empty() && !poset.leq(chain.back(), v)) continue;  // weakly increasing
      Field::Elem grown = field.mul(product, partial.at(chain.empty() ? i : chain.back(), v));
      chain.push_back(v);
      self(self, grown);
      chain.pop_back();
    }
  };
  recurse(recurse, 1);

  return field.neg(field.div(total, field.from_int(k)));
}

QPolynomial pattern_count_poly(const Poset& poset, unsigned colors) {
  if (colors == 0) throw Error("pattern count needs at least one color");
  const int n = poset.size();

  // For each element, its strict predecessors in the relation.
  std::vector<std::vector<int>> pred(n);
  int strict_pairs = 0;
  for (auto [i, j] : poset.relation_pairs())
    if (i != j) {
      pred[j].push_back(i);
      ++strict_pairs;
    }

  std::vector<Int> histogram(strict_pairs + 1, 0);
  std::vector<unsigned> color(n, 0);
  // Depth-first over colorings with an incremental discordant-pair count.
  auto recurse = [&](auto&& self, int depth, int discord) -> void {
    if (depth == n) {
      ++histogram[discord];
      return;
    }
    for (unsigned c = 0; c < colors; ++c) {
      color[depth] = c;
      int added = 0;
      for (int i : pred[depth])
        if (color[i] != c) ++added;
      self(self, depth + 1, discord + added);
    }
  };
  recurse(recurse, 0, 0);

  QPolynomial out;
  for (int d = 0; d <= strict_pairs; ++d)
    if (histogram[d] != 0) out += QPolynomial::monomial(histogram[d], d);
  return out;
}

Int count_by_construction(const Poset& poset, const Field& field, unsigned k, DiagMode mode) {
  if (GuardResult guard = field.char_guard(k); !guard.pass) throw CharGuardFailed(guard.reason);
  std::vector<Field::Elem> alphabet;
  if (mode == DiagMode::Scalars) {
    alphabet = field.potent_scalars(k);
  } else {
    Field::Elem w = field.primitive_kth_root(k);  // throws NoSuchRoot unless k | q-1
    alphabet.push_back(0);
    for (unsigned j = 0; j < k; ++j) alphabet.push_back(field.pow(w, j));
  }
  QPolynomial pattern = pattern_count_poly(poset, static_cast<unsigned>(alphabet.size()));
  return pattern.eval(Int(field.q()));
}

namespace {

std::uint64_t checked_state_count(const Poset& poset, const Field& field, std::uint64_t cap) {
  std::uint64_t states = 1;
  for (int t = 0; t < poset.pair_count(); ++t) {
    if (states > cap / field.q())
      throw SearchSpaceTooLarge("state space " + std::to_string(field.q()) + "^" +
                                std::to_string(poset.pair_count()) + " exceeds cap " +
                                std::to_string(cap));
    states *= field.q();
  }
  return states;
}

// Count potent states in [begin, end). States are base-q odometers over the
// relation pairs (digit t = entry of pair t), so ranges partition cleanly.
std::uint64_t count_range(const Poset& poset, const Field& field, unsigned k, std::uint64_t begin,
                          std::uint64_t end) {
  const int pairs = poset.pair_count();
  const std::uint64_t q = field.q();
  std::vector<Field::Elem> vals(pairs), cur(pairs), nxt(pairs);

  std::uint64_t rest = begin;
  for (int t = 0; t < pairs; ++t) {
    vals[t] = static_cast<Field::Elem>(rest % q);
    rest /= q;
  }

  // Prime fields with a dense table take a fast path: codes add as integers,
  // so products can be accumulated in a machine word and reduced once.
  const Field::Elem* table = field.mul_table();
  const bool fast = table != nullptr && field.e() == 1;

  std::uint64_t hits = 0;
  for (std::uint64_t state = begin; state < end; ++state) {
    std::copy(vals.begin(), vals.end(), cur.begin());
    for (unsigned step = 0; step < k; ++step) {
      for (int pi = 0; pi < pairs; ++pi) {
        if (fast) {
          std::uint64_t acc = 0;
          for (auto [left, right] : poset.convolution(pi))
            acc += table[static_cast<std::uint64_t>(cur[left]) * q + vals[right]];
          nxt[pi] = static_cast<Field::Elem>(acc % q);
        } else {
          Field::Elem acc = 0;
          for (auto [left, right] : poset.convolution(pi))
            acc = field.add(acc, field.mul(cur[left], vals[right]));
          nxt[pi] = acc;
        }
      }
      std::swap(cur, nxt);
    }
    if (std::equal(cur.begin(), cur.end(), vals.begin())) ++hits;

    for (int t = 0; t < pairs; ++t) {
      if (++vals[t] < q) break;
      vals[t] = 0;
    }
  }
  return hits;
}

}  // namespace

Int brute_force_count(const Poset& poset, const Field& field, unsigned k,
                      const OracleOptions& options) {
  const std::uint64_t states = checked_state_count(poset, field, options.cap);
  unsigned workers = options.threads ? options.threads : std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  if (static_cast<std::uint64_t>(workers) > states) workers = static_cast<unsigned>(states);

  if (workers == 1) return Int(count_range(poset, field, k, 0, states));

  std::vector<std::uint64_t> counts(workers, 0);
  std::vector<std::thread> pool;
  const std::uint64_t chunk = states / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = w * chunk;
    const std::uint64_t end = (w + 1 == workers) ? states : begin + chunk;
    pool.emplace_back(
        [&, w, begin, end] { counts[w] = count_range(poset, field, k, begin, end); });
  }
  for (auto& thread : pool) thread.join();
  std::uint64_t total = 0;
  for (std::uint64_t c : counts) total += c;
  return Int(total);
}

void brute_force_scan(const Poset& poset, const Field& field, unsigned k, std::uint64_t cap,
                      const std::function<void(const UpperMatrix&)>& on_potent) {
  const std::uint64_t states = checked_state_count(poset, field, cap);
  auto poset_ptr = std::make_shared<const Poset>(poset);
  auto field_ptr = std::make_shared<const Field>(field);

  const int pairs = poset.pair_count();
  const std::uint64_t q = field.q();
  UpperMatrix a(poset_ptr, field_ptr);
  for (std::uint64_t state = 0; state < states; ++state) {
    std::uint64_t rest = state;
    for (int t = 0; t < pairs; ++t) {
      a.values()[t] = static_cast<Field::Elem>(rest % q);
      rest /= q;
    }
    if (is_potent(a, k)) on_potent(a);
  }
}

}  // namespace kpotent
