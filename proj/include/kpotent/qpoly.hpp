#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "kpotent/errors.hpp"

namespace kpotent {

using Int = boost::multiprecision::cpp_int;

// Polynomial in the field-size variable q with exact integer coefficients,
// stored sparsely (exponent -> coefficient, no zero entries). Counting
// formulas produce these; golden tables are parsed into them.
class QPolynomial {
 public:
  QPolynomial() = default;
  QPolynomial(long long c) { put(0, Int(c)); }          // NOLINT: implicit constants are handy
  explicit QPolynomial(const Int& c) { put(0, c); }

  static QPolynomial monomial(const Int& c, unsigned d) {
    QPolynomial out;
    out.put(d, c);
    return out;
  }

  bool is_zero() const { return terms_.empty(); }
  int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first); }
  Int coeff(unsigned d) const;
  Int leading_coeff() const { return terms_.empty() ? Int(0) : terms_.rbegin()->second; }
  const std::map<unsigned, Int>& terms() const { return terms_; }

  Int eval(const Int& q) const;

  QPolynomial& operator+=(const QPolynomial& o);
  QPolynomial& operator-=(const QPolynomial& o);
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  QPolynomial operator*(const QPolynomial& o) const;
  QPolynomial operator*(const Int& c) const;
  bool operator==(const QPolynomial& o) const { return terms_ == o.terms_; }

  // "12q^5+6q^4+8q^3+1": descending exponents, coefficient 1 elided except in
  // the constant term, "q" for exponent 1, plain integer for exponent 0.
  std::string str() const;

  // Inverse of str(); whitespace-insensitive, accepts ASCII '-' and U+2212.
  static QPolynomial parse(const std::string& text);

 private:
  std::map<unsigned, Int> terms_;
  void put(unsigned d, const Int& c);
};

Int factorial(unsigned n);

// n! / (parts_1! * ... * parts_r!); the parts must sum to n.
Int multinomial(unsigned n, const std::vector<unsigned>& parts);

}  // namespace kpotent
