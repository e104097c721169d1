#include "kpotent/counting.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace kpotent {

Compositions::Compositions(unsigned n, unsigned s) : n_(n), parts_(s, 0) {
  if (s == 0) throw Error("compositions need at least one part");
  parts_[0] = n;
}

void Compositions::next() {
  // Colex successor: bump the lowest bumpable index >= 2 (0-based index 1),
  // zero everything below it, rebalance into parts_[0].
  const std::size_t s = parts_.size();
  unsigned below = parts_[0];  // mass available at indices < t as t scans up
  for (std::size_t t = 1; t < s; ++t) {
    if (below > 0) {
      ++parts_[t];
      for (std::size_t u = 1; u < t; ++u) parts_[u] = 0;
      parts_[0] = below - 1;
      return;
    }
    below += parts_[t];
  }
  done_ = true;
}

unsigned delta_stat(const std::vector<unsigned>& parts) {
  unsigned total = 0, squares = 0;
  for (unsigned part : parts) {
    total += part;
    squares += part * part;
  }
  return (total * total - squares) / 2;
}

QPolynomial count_triangular(unsigned n, unsigned s) {
  if (n == 0 || s == 0) throw Error("count_triangular needs n >= 1 and s >= 1");
  QPolynomial out;
  for (Compositions comp(n, s); !comp.done(); comp.next())
    out += QPolynomial::monomial(multinomial(n, comp.parts()), delta_stat(comp.parts()));
  return out;
}

QPolynomial star_p(unsigned m, unsigned s) {
  if (m == 0 || s == 0) throw Error("star_p needs m >= 1 and s >= 1");
  QPolynomial out;
  for (Compositions comp(m, s); !comp.done(); comp.next()) {
    const auto& parts = comp.parts();
    out += QPolynomial::monomial(multinomial(m, parts), delta_stat(parts) + (m - parts[0]));
  }
  return out;
}

QPolynomial star_count(unsigned n, const std::vector<unsigned>& arms, unsigned s) {
  QPolynomial out = count_triangular(n + 1, s);
  for (unsigned m : arms) {
    if (m == 0) throw EmptyArm("star arm of length zero");
    out = out * star_p(m, s);
  }
  return out;
}

QPolynomial rhombus_count(unsigned n, unsigned m, unsigned s) {
  if (n == 0 || m == 0 || s == 0) throw Error("rhombus_count needs n, m, s >= 1");
  QPolynomial out;
  for (Compositions nc(n, s); !nc.done(); nc.next()) {
    const auto& np = nc.parts();
    const Int bn = multinomial(n, np);
    const unsigned dn = delta_stat(np);
    for (Compositions mc(m, s); !mc.done(); mc.next()) {
      const auto& mp = mc.parts();
      const Int coeff = bn * multinomial(m, mp) * s;
      const unsigned base = dn + delta_stat(mp);
      const unsigned tail = (n - np[0]) + (m - mp[0]);
      // top diagonal value equal to the hub's, or one of the s-1 others
      QPolynomial bracket = QPolynomial::monomial(1, tail);
      for (unsigned j = 1; j < s; ++j)
        bracket += QPolynomial::monomial(1, 1 + (n + m) - np[j] - mp[j]);
      out += bracket * QPolynomial::monomial(coeff, base + tail);
    }
  }
  return out;
}

QPolynomial rhombus_count_statement_form(unsigned n, unsigned m, unsigned s) {
  if (n == 0 || m == 0 || s == 0) throw Error("rhombus_count needs n, m, s >= 1");
  QPolynomial out;
  for (Compositions nc(n, s); !nc.done(); nc.next()) {
    const auto& np = nc.parts();
    const Int bn = multinomial(n, np);
    for (Compositions mc(m, s); !mc.done(); mc.next()) {
      const auto& mp = mc.parts();
      const Int coeff = bn * multinomial(m, mp) * s;
      unsigned expo = 0;  // literal sum_{i<j} (n_i m_j + m_i m_j)
      for (unsigned i = 0; i < s; ++i)
        for (unsigned j = i + 1; j < s; ++j) expo += np[i] * mp[j] + mp[i] * mp[j];
      QPolynomial bracket = QPolynomial::monomial(1, 2 * ((n - np[0]) + (m - mp[0])));
      for (unsigned j = 1; j < s; ++j)
        bracket += QPolynomial::monomial(1, 2 * (n + m) + 1 - np[0] - np[j] - mp[0] - mp[j]);
      out += bracket * QPolynomial::monomial(coeff, expo);
    }
  }
  return out;
}

QPolynomial y_count(unsigned n, unsigned m, unsigned l, unsigned s) {
  if (n == 0 || m == 0 || l == 0 || s == 0) throw Error("y_count needs n, m, l, s >= 1");
  QPolynomial out;
  for (Compositions nc(n, s); !nc.done(); nc.next()) {
    const auto& np = nc.parts();
    const Int bn = multinomial(n, np);
    const unsigned dn = delta_stat(np);
    for (Compositions mc(m, s); !mc.done(); mc.next()) {
      const auto& mp = mc.parts();
      const Int bm = bn * multinomial(m, mp);
      const unsigned dm = dn + delta_stat(mp);
      // sum_{i != j} n_i m_j = n*m - sum_i n_i m_i
      unsigned dot_nm = 0;
      for (unsigned i = 0; i < s; ++i) dot_nm += np[i] * mp[i];
      for (Compositions lc(l, s); !lc.done(); lc.next()) {
        const auto& lp = lc.parts();
        unsigned dot_nl = 0;
        for (unsigned i = 0; i < s; ++i) dot_nl += np[i] * lp[i];
        const unsigned expo =
            dm + delta_stat(lp) + (n * m - dot_nm) + (n * l - dot_nl);
        out += QPolynomial::monomial(bm * multinomial(l, lp), expo);
      }
    }
  }
  return out;
}

namespace {

// Partitions of n into exactly j positive nondecreasing parts.
void for_each_partition(unsigned n, unsigned j, std::vector<unsigned>& parts,
                        const std::function<void(const std::vector<unsigned>&)>& fn,
                        unsigned minimum = 1) {
  if (parts.size() + 1 == j) {
    const unsigned used = std::accumulate(parts.begin(), parts.end(), 0u);
    if (n >= used + minimum) {
      parts.push_back(n - used);
      fn(parts);
      parts.pop_back();
    }
    return;
  }
  const unsigned used = std::accumulate(parts.begin(), parts.end(), 0u);
  for (unsigned next = minimum; used + next * (j - parts.size()) <= n; ++next) {
    parts.push_back(next);
    for_each_partition(n, j, parts, fn, next);
    parts.pop_back();
  }
}

Int run_length_factor(const std::vector<unsigned>& parts) {
  Int g = 1;
  std::size_t i = 0;
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    g *= factorial(static_cast<unsigned>(j - i));
    i = j;
  }
  return g;
}

}  // namespace

QPolynomial slowik_count(unsigned n, unsigned l) {
  if (n == 0 || l == 0) throw Error("slowik_count needs n >= 1 and l >= 1");
  QPolynomial out;
  for (unsigned j = 1; j <= std::min(l, n); ++j) {
    std::vector<unsigned> scratch;
    for_each_partition(n, j, scratch, [&](const std::vector<unsigned>& parts) {
      Int ways = 1;  // l! / (l-j)! = injections of the j blocks into l values
      for (unsigned t = 0; t < j; ++t) ways *= l - t;
      ways /= run_length_factor(parts);
      unsigned squares = 0;
      for (unsigned part : parts) squares += part * part;
      out += QPolynomial::monomial(ways * multinomial(n, parts), (n * n - squares) / 2);
    });
  }
  return out;
}

SlowikEquivResult slowik_equiv_check(unsigned n_max, unsigned l_max) {
  SlowikEquivResult result;
  for (unsigned n = 1; n <= n_max; ++n)
    for (unsigned l = 1; l <= l_max; ++l) {
      QPolynomial lhs = slowik_count(n, l);
      QPolynomial rhs = count_triangular(n, l);
      ++result.checked;
      if (!(lhs == rhs)) {
        result.pass = false;
        result.n = n;
        result.l = l;
        result.lhs = lhs;
        result.rhs = rhs;
        return result;
      }
    }
  return result;
}

QPolynomial closed_form_count(const PosetShape& shape, unsigned s) {
  switch (shape.kind) {
    case PosetShape::Kind::Chain:
      return count_triangular(shape.n, s);
    case PosetShape::Kind::Star: {
      std::vector<unsigned> arms;
      for (int a : shape.arms) {
        if (a < 1) throw EmptyArm("star arm length must be positive");
        arms.push_back(static_cast<unsigned>(a));
      }
      return star_count(shape.n, arms, s);
    }
    case PosetShape::Kind::Rhombus:
      return rhombus_count(shape.n, shape.m, s);
    case PosetShape::Kind::Y:
      return y_count(shape.n, shape.m, shape.l, s);
    case PosetShape::Kind::File:
      throw Error("no closed-form count for file posets; use enumeration");
  }
  throw Error("unreachable poset shape kind");
}

}  // namespace kpotent
