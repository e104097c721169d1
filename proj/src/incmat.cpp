#include "kpotent/incmat.hpp"

#include <sstream>

namespace kpotent {

UpperMatrix::UpperMatrix(std::shared_ptr<const Poset> poset, std::shared_ptr<const Field> field)
    : poset_(std::move(poset)), field_(std::move(field)) {
  vals_.assign(poset_->pair_count(), 0);
}

UpperMatrix UpperMatrix::identity(std::shared_ptr<const Poset> poset,
                                  std::shared_ptr<const Field> field) {
  UpperMatrix out(std::move(poset), std::move(field));
  for (int i = 0; i < out.size(); ++i) out.set(i, i, 1);
  return out;
}

void UpperMatrix::set(int i, int j, Field::Elem v) {
  int pi = poset_->pair_index(i, j);
  if (pi < 0)
    throw Error("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                ") is outside the poset relation");
  vals_[pi] = v;
}

namespace {

void check_compatible(const UpperMatrix& a, const UpperMatrix& b) {
  if (!(a.poset() == b.poset())) throw MixedPoset("operands live on different posets");
  if (!a.field().same_as(b.field())) throw MixedField("operands live over different fields");
}

}  // namespace

UpperMatrix mat_mul(const UpperMatrix& a, const UpperMatrix& b) {
  check_compatible(a, b);
  const Poset& poset = a.poset();
  const Field& field = a.field();
  UpperMatrix out(a.poset_ptr(), a.field_ptr());
  auto& vals = out.values();
  for (int pi = 0; pi < poset.pair_count(); ++pi) {
    Field::Elem acc = 0;
    for (auto [left, right] : poset.convolution(pi))
      acc = field.add(acc, field.mul(a.values()[left], b.values()[right]));
    vals[pi] = acc;
  }
  return out;
}

UpperMatrix mat_pow(const UpperMatrix& a, std::uint64_t t) {
  UpperMatrix acc = UpperMatrix::identity(a.poset_ptr(), a.field_ptr());
  if (t == 0) return acc;
  UpperMatrix base = a;
  while (true) {
    if (t & 1) acc = mat_mul(acc, base);
    t >>= 1;
    if (t == 0) break;
    base = mat_mul(base, base);
  }
  return acc;
}

bool is_potent(const UpperMatrix& a, unsigned k) {
  return mat_pow(a, static_cast<std::uint64_t>(k) + 1) == a;
}

OuterPowerBlocks outer_power_blocks(const UpperMatrix& a, unsigned k) {
  const Poset& poset = a.poset();
  if (!poset.is_chain()) throw Error("block power forms require a chain poset");
  const int n = poset.size();
  if (n < 3) throw TooSmall("block power forms need a chain of at least 3 elements");
  const Field& field = a.field();
  const int mid = n - 2;

  const Field::Elem r = a.at(0, 0);
  const Field::Elem t = a.at(n - 1, n - 1);

  // Dense copies of the outer blocks and of u = A[2..n-1, 2..n-1].
  std::vector<Field::Elem> row(mid), col(mid);
  for (int j = 0; j < mid; ++j) row[j] = a.at(0, j + 1);
  for (int i = 0; i < mid; ++i) col[i] = a.at(i + 1, n - 1);
  std::vector<Field::Elem> u(static_cast<std::size_t>(mid) * mid, 0);
  for (int i = 0; i < mid; ++i)
    for (int j = i; j < mid; ++j) u[static_cast<std::size_t>(i) * mid + j] = a.at(i + 1, j + 1);

  // u^0..u^k.
  std::vector<std::vector<Field::Elem>> upow(k + 1,
                                             std::vector<Field::Elem>(static_cast<std::size_t>(mid) * mid, 0));
  for (int i = 0; i < mid; ++i) upow[0][static_cast<std::size_t>(i) * mid + i] = 1;
  for (unsigned d = 1; d <= k; ++d)
    for (int i = 0; i < mid; ++i)
      for (int j = i; j < mid; ++j) {
        Field::Elem acc = 0;
        for (int s = i; s <= j; ++s)
          acc = field.add(acc, field.mul(upow[d - 1][static_cast<std::size_t>(i) * mid + s],
                                         u[static_cast<std::size_t>(s) * mid + j]));
        upow[d][static_cast<std::size_t>(i) * mid + j] = acc;
      }

  // h_j(r, t) = r^j + r^{j-1} t + ... + t^j for j = 0..k.
  std::vector<Field::Elem> h(k + 1, 0);
  for (unsigned j = 0; j <= k; ++j) {
    Field::Elem acc = 0;
    for (unsigned p = 0; p <= j; ++p) acc = field.add(acc, field.mul(field.pow(r, p), field.pow(t, j - p)));
    h[j] = acc;
  }

  // M = sum_d r^{k-d} u^d,  N = sum_d t^{k-d} u^d,
  // W = sum_{d=0}^{k-1} h_{k-1-d}(r,t) u^d.
  auto combine = [&](auto weight, unsigned top) {
    std::vector<Field::Elem> acc(static_cast<std::size_t>(mid) * mid, 0);
    for (unsigned d = 0; d <= top; ++d) {
      Field::Elem w = weight(d);
      if (w == 0) continue;
      for (std::size_t idx = 0; idx < acc.size(); ++idx)
        acc[idx] = field.add(acc[idx], field.mul(w, upow[d][idx]));
    }
    return acc;
  };
  auto M = combine([&](unsigned d) { return field.pow(r, k - d); }, k);
  auto N = combine([&](unsigned d) { return field.pow(t, k - d); }, k);

  OuterPowerBlocks out;
  out.a_row.assign(mid, 0);
  out.b_col.assign(mid, 0);
  for (int j = 0; j < mid; ++j) {
    Field::Elem acc = 0;
    for (int s = 0; s < mid; ++s)
      acc = field.add(acc, field.mul(row[s], M[static_cast<std::size_t>(s) * mid + j]));
    out.a_row[j] = acc;
  }
  for (int i = 0; i < mid; ++i) {
    Field::Elem acc = 0;
    for (int s = 0; s < mid; ++s)
      acc = field.add(acc, field.mul(N[static_cast<std::size_t>(i) * mid + s], col[s]));
    out.b_col[i] = acc;
  }

  Field::Elem corner = field.mul(a.at(0, n - 1), h[k]);
  if (k >= 1) {
    auto W = combine([&](unsigned d) { return h[k - 1 - d]; }, k - 1);
    for (int i = 0; i < mid; ++i)
      for (int j = i; j < mid; ++j)
        corner = field.add(corner, field.mul(field.mul(row[i], W[static_cast<std::size_t>(i) * mid + j]),
                                             col[j]));
  }
  out.corner = corner;
  return out;
}

UpperMatrix principal_block(const UpperMatrix& a, int lo, int hi) {
  const Poset& poset = a.poset();
  if (!poset.is_chain()) throw Error("principal blocks require a chain poset");
  if (lo < 0 || hi >= poset.size() || lo > hi) throw Error("bad principal block range");
  auto sub = std::make_shared<Poset>(Poset::chain(hi - lo + 1));
  UpperMatrix out(sub, a.field_ptr());
  for (int i = lo; i <= hi; ++i)
    for (int j = i; j <= hi; ++j) out.set(i - lo, j - lo, a.at(i, j));
  return out;
}

std::string render_matrix(const UpperMatrix& a, const std::string& poset_label) {
  std::ostringstream out;
  out << "field " << a.field().name() << "\n";
  out << "poset " << poset_label << "\n";
  const auto& pairs = a.poset().relation_pairs();
  for (std::size_t pi = 0; pi < pairs.size(); ++pi)
    out << pairs[pi].first + 1 << " " << pairs[pi].second + 1 << " " << a.values()[pi] << "\n";
  return out.str();
}

}  // namespace kpotent
