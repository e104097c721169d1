#include "kpotent/field.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace kpotent {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Polynomials over GF(p) as coefficient vectors, index i = coefficient of
// x^i, trailing zeros trimmed. Only used during field construction.
using Poly = std::vector<std::uint32_t>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// f mod g, g monic and nonconstant.
Poly poly_mod(Poly f, const Poly& g, std::uint64_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    const std::uint64_t c = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    if (c != 0)
      for (std::size_t i = 0; i <= dg; ++i) {
        std::uint64_t v = f[shift + i] + (p - (c * g[i]) % p);
        f[shift + i] = static_cast<std::uint32_t>(v % p);
      }
    f.pop_back();
    trim(f);
  }
  return f;
}

// Trial division by every monic polynomial of degree 1..deg/2. Exhaustive
// and deterministic; plenty fast at desk scale (q <= 2^20).
bool is_irreducible(const Poly& f, std::uint64_t p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; d * 2 <= deg; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      std::uint64_t rest = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

Field::Field(std::uint64_t p, unsigned e) {
  if (e == 0) throw DegreeZero("field degree must be positive");
  if (!is_prime(p)) throw NotPrime("field characteristic must be prime, got " + std::to_string(p));
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (q > kMaxOrder / p) throw FieldTooLarge("field order exceeds 2^20");
    q *= p;
  }
  if (q > kMaxOrder) throw FieldTooLarge("field order exceeds 2^20");
  spec_.p = p;
  spec_.e = e;
  spec_.q = q;

  if (e > 1) {
    // Smallest canonical code whose monic polynomial is irreducible.
    for (std::uint64_t code = 0;; ++code) {
      Poly f(e + 1, 0);
      std::uint64_t rest = code;
      for (unsigned i = 0; i < e; ++i) {
        f[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      f[e] = 1;
      if (is_irreducible(f, p)) {
        spec_.modulus = f;
        break;
      }
    }
  }

  if (q <= kMulTableLimit) {
    multab_.resize(q * q);
    for (std::uint64_t a = 0; a < q; ++a)
      for (std::uint64_t b = 0; b <= a; ++b) {
        Elem v = mul_generic(static_cast<Elem>(a), static_cast<Elem>(b));
        multab_[a * q + b] = v;
        multab_[b * q + a] = v;
      }
  }
}

Field Field::parse(const std::string& text) {
  const auto caret = text.find('^');
  auto number = [&text](const std::string& part) {
    std::size_t pos = 0;
    std::uint64_t v = 0;
    try {
      if (part.empty() || !std::isdigit(static_cast<unsigned char>(part[0])))
        throw std::invalid_argument(part);
      v = std::stoull(part, &pos);
    } catch (const std::invalid_argument&) {
      throw ParseError("bad field syntax '" + text + "', expected q or p^e");
    } catch (const std::out_of_range&) {
      throw FieldTooLarge("field order out of range in '" + text + "'");
    }
    if (pos != part.size())
      throw ParseError("bad field syntax '" + text + "', expected q or p^e");
    return v;
  };
  if (caret == std::string::npos) return Field(number(text), 1);
  std::uint64_t p = number(text.substr(0, caret));
  std::uint64_t e = number(text.substr(caret + 1));
  if (e > 32) throw FieldTooLarge("field order out of range in '" + text + "'");
  return Field(p, static_cast<unsigned>(e));
}

std::string Field::name() const {
  if (spec_.e == 1) return std::to_string(spec_.p);
  return std::to_string(spec_.p) + "^" + std::to_string(spec_.e);
}

Field::Elem Field::add(Elem a, Elem b) const {
  if (spec_.e == 1) {
    std::uint64_t v = static_cast<std::uint64_t>(a) + b;
    if (v >= spec_.q) v -= spec_.q;
    return static_cast<Elem>(v);
  }
  // digitwise base-p addition
  Elem out = 0;
  std::uint64_t mult = 1;
  const std::uint32_t p = static_cast<std::uint32_t>(spec_.p);
  for (unsigned i = 0; i < spec_.e; ++i) {
    std::uint32_t da = static_cast<std::uint32_t>((a / mult) % p);
    std::uint32_t db = static_cast<std::uint32_t>((b / mult) % p);
    std::uint32_t s = da + db;
    if (s >= p) s -= p;
    out += static_cast<Elem>(s * mult);
    mult *= p;
  }
  return out;
}

Field::Elem Field::neg(Elem a) const {
  if (spec_.e == 1) return a == 0 ? 0 : static_cast<Elem>(spec_.q - a);
  Elem out = 0;
  std::uint64_t mult = 1;
  const std::uint32_t p = static_cast<std::uint32_t>(spec_.p);
  for (unsigned i = 0; i < spec_.e; ++i) {
    std::uint32_t d = static_cast<std::uint32_t>((a / mult) % p);
    out += static_cast<Elem>((d == 0 ? 0 : p - d) * mult);
    mult *= p;
  }
  return out;
}

Field::Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Field::Elem Field::mul(Elem a, Elem b) const {
  if (!multab_.empty()) return multab_[static_cast<std::uint64_t>(a) * spec_.q + b];
  return mul_generic(a, b);
}

Field::Elem Field::mul_generic(Elem a, Elem b) const {
  const std::uint64_t p = spec_.p;
  if (spec_.e == 1) return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p);

  const unsigned e = spec_.e;
  std::uint32_t da[32], db[32];
  std::uint64_t prod[63] = {0};
  std::uint64_t ra = a, rb = b;
  for (unsigned i = 0; i < e; ++i) {
    da[i] = static_cast<std::uint32_t>(ra % p);
    ra /= p;
    db[i] = static_cast<std::uint32_t>(rb % p);
    rb /= p;
  }
  for (unsigned i = 0; i < e; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < e; ++j) prod[i + j] += static_cast<std::uint64_t>(da[i]) * db[j];
  }
  // reduce by the monic modulus: x^e = -sum modulus[t] x^t
  for (unsigned d = 2 * e - 2; d >= e; --d) {
    std::uint64_t c = prod[d] % p;
    prod[d] = 0;
    if (c != 0)
      for (unsigned t = 0; t < e; ++t)
        prod[d - e + t] += c * ((p - spec_.modulus[t]) % p);
  }
  Elem out = 0;
  std::uint64_t mult = 1;
  for (unsigned i = 0; i < e; ++i) {
    out += static_cast<Elem>((prod[i] % p) * mult);
    mult *= p;
  }
  return out;
}

Field::Elem Field::pow(Elem a, std::uint64_t t) const {
  Elem acc = 1;
  Elem base = a;
  while (t > 0) {
    if (t & 1) acc = mul(acc, base);
    base = mul(base, base);
    t >>= 1;
  }
  return acc;
}

Field::Elem Field::inv(Elem a) const {
  if (a == 0) throw Error("division by zero in GF(" + name() + ")");
  return pow(a, spec_.q - 2);
}

std::vector<std::uint32_t> Field::coeffs(Elem a) const {
  std::vector<std::uint32_t> out(spec_.e);
  std::uint64_t rest = a;
  for (unsigned i = 0; i < spec_.e; ++i) {
    out[i] = static_cast<std::uint32_t>(rest % spec_.p);
    rest /= spec_.p;
  }
  return out;
}

std::vector<Field::Elem> Field::potent_scalars(unsigned k) const {
  std::vector<Elem> out;
  for (std::uint64_t x = 0; x < spec_.q; ++x) {
    Elem a = static_cast<Elem>(x);
    if (pow(a, static_cast<std::uint64_t>(k) + 1) == a) out.push_back(a);
  }
  return out;  // ascending by construction
}

Field::Elem Field::primitive_kth_root(unsigned k) const {
  if (k == 0 || (spec_.q - 1) % k != 0)
    throw NoSuchRoot("no element of multiplicative order " + std::to_string(k) + " in GF(" +
                     name() + ")");
  for (std::uint64_t x = 1; x < spec_.q; ++x) {
    Elem a = static_cast<Elem>(x);
    if (pow(a, k) != 1) continue;
    bool exact = true;
    for (unsigned d = 1; d < k; ++d)
      if (k % d == 0 && pow(a, d) == 1) {
        exact = false;
        break;
      }
    if (exact) return a;
  }
  throw NoSuchRoot("order-" + std::to_string(k) + " element not found in GF(" + name() + ")");
}

GuardResult Field::char_guard(unsigned k) const {
  if (k % spec_.p == 0)
    return {false, "characteristic " + std::to_string(spec_.p) + " divides k = " + std::to_string(k)};
  if ((static_cast<std::uint64_t>(k) + 1) % spec_.p == 0)
    return {false,
            "characteristic " + std::to_string(spec_.p) + " divides k+1 = " + std::to_string(k + 1)};
  return {true, ""};
}

bool Field::same_as(const Field& other) const {
  return spec_.p == other.spec_.p && spec_.e == other.spec_.e && spec_.modulus == other.spec_.modulus;
}

}  // namespace kpotent
