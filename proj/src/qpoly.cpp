#include "kpotent/qpoly.hpp"

#include <cctype>
#include <numeric>

namespace kpotent {

void QPolynomial::put(unsigned d, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(d, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Int QPolynomial::coeff(unsigned d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? Int(0) : it->second;
}

Int QPolynomial::eval(const Int& q) const {
  // Horner over the sparse terms, highest exponent first.
  Int acc = 0;
  unsigned prev = 0;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (first) {
      acc = it->second;
      prev = it->first;
      first = false;
      continue;
    }
    for (unsigned i = it->first; i < prev; ++i) acc *= q;
    acc += it->second;
    prev = it->first;
  }
  for (unsigned i = 0; i < prev; ++i) acc *= q;
  return acc;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
  for (const auto& [d, c] : o.terms_) put(d, c);
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) {
  for (const auto& [d, c] : o.terms_) put(d, -c);
  return *this;
}

QPolynomial QPolynomial::operator*(const QPolynomial& o) const {
  QPolynomial out;
  for (const auto& [da, ca] : terms_)
    for (const auto& [db, cb] : o.terms_) out.put(da + db, ca * cb);
  return out;
}

QPolynomial QPolynomial::operator*(const Int& c) const {
  QPolynomial out;
  if (c == 0) return out;
  for (const auto& [d, v] : terms_) out.put(d, v * c);
  return out;
}

std::string QPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const unsigned d = it->first;
    Int c = it->second;
    if (!out.empty()) {
      out += (c < 0) ? "-" : "+";
      if (c < 0) c = -c;
    } else if (c < 0) {
      out += "-";
      c = -c;
    }
    if (d == 0) {
      out += c.str();
    } else {
      if (c != 1) out += c.str();
      out += "q";
      if (d > 1) out += "^" + std::to_string(d);
    }
  }
  return out;
}

QPolynomial QPolynomial::parse(const std::string& text) {
  // Normalize: drop whitespace, map U+2212 to '-'.
  std::string s;
  for (std::size_t i = 0; i < text.size(); ++i) {
    unsigned char ch = static_cast<unsigned char>(text[i]);
    if (std::isspace(ch)) continue;
    if (ch == 0xE2 && i + 2 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0x88 &&
        static_cast<unsigned char>(text[i + 2]) == 0x92) {
      s += '-';
      i += 2;
      continue;
    }
    s += static_cast<char>(ch);
  }
  if (s.empty()) throw ParseError("empty polynomial");

  QPolynomial out;
  std::size_t i = 0;
  while (i < s.size()) {
    Int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = -1;
      ++i;
      if (i >= s.size()) throw ParseError("dangling sign in polynomial '" + text + "'");
    }
    std::string digits;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
    Int c = digits.empty() ? Int(1) : Int(digits);
    unsigned d = 0;
    bool has_q = false;
    if (i < s.size() && s[i] == 'q') {
      has_q = true;
      d = 1;
      ++i;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::string ed;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ed += s[i++];
        if (ed.empty()) throw ParseError("missing exponent in polynomial '" + text + "'");
        d = static_cast<unsigned>(std::stoul(ed));
      }
    }
    if (digits.empty() && !has_q)
      throw ParseError("unexpected character '" + std::string(1, s[i]) + "' in polynomial '" +
                       text + "'");
    out.put(d, sign * c);
    if (i < s.size() && s[i] != '+' && s[i] != '-')
      throw ParseError("expected + or - at '" + s.substr(i) + "' in polynomial '" + text + "'");
  }
  return out;
}

Int factorial(unsigned n) {
  Int out = 1;
  for (unsigned i = 2; i <= n; ++i) out *= i;
  return out;
}

Int multinomial(unsigned n, const std::vector<unsigned>& parts) {
  unsigned total = 0;
  for (unsigned part : parts) total += part;
  if (total != n)
    throw PartsMismatch("multinomial parts sum to " + std::to_string(total) + ", expected " +
                        std::to_string(n));
  Int out = factorial(n);
  for (unsigned part : parts) out /= factorial(part);
  return out;
}

}  // namespace kpotent
