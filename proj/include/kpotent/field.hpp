#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kpotent/errors.hpp"

namespace kpotent {

// Carrier data of GF(p^e): characteristic, extension degree, order, and the
// reduction modulus. The modulus is deterministic: the monic irreducible of
// degree e whose non-leading coefficient vector has the smallest canonical
// code sum(c_i * p^i). For e == 1 the modulus is empty.
struct FieldSpec {
  std::uint64_t p = 0;
  unsigned e = 1;
  std::uint64_t q = 0;
  std::vector<std::uint32_t> modulus;  // coefficient of x^i at index i; size e+1, leading 1
};

struct GuardResult {
  bool pass = false;
  std::string reason;  // empty when pass
};

// Exact arithmetic in GF(p^e). Elements are canonical codes in [0, q):
// code(sum c_i x^i) = sum c_i p^i, so 0 and 1 have codes 0 and 1 and the
// prime subfield occupies codes 0..p-1. Instances are immutable and safe to
// share across threads.
class Field {
 public:
  using Elem = std::uint32_t;

  static constexpr std::uint64_t kMaxOrder = 1u << 20;
  static constexpr std::uint64_t kMulTableLimit = 512;  // dense tables below this order

  Field(std::uint64_t p, unsigned e);

  // "7" or "3^2"; a plain number must itself be prime.
  static Field parse(const std::string& text);

  const FieldSpec& spec() const { return spec_; }
  std::uint64_t p() const { return spec_.p; }
  unsigned e() const { return spec_.e; }
  std::uint64_t q() const { return spec_.q; }
  std::string name() const;  // "7" or "3^2"

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;  // a != 0
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t t) const;

  // Image of an ordinary integer under Z -> GF(p^e), i.e. v mod p in the
  // prime subfield.
  Elem from_int(std::uint64_t v) const { return static_cast<Elem>(v % spec_.p); }

  // Coefficients (c_0, ..., c_{e-1}) of the element with the given code.
  std::vector<std::uint32_t> coeffs(Elem a) const;

  // All x with x^{k+1} = x, ascending by code. Size is gcd(k, q-1) + 1.
  std::vector<Elem> potent_scalars(unsigned k) const;

  // Element of multiplicative order exactly k with the smallest code.
  // Throws NoSuchRoot unless k divides q-1.
  Elem primitive_kth_root(unsigned k) const;

  // The completion theory needs char(K) to divide neither k nor k+1.
  GuardResult char_guard(unsigned k) const;

  bool same_as(const Field& other) const;

  // Dense q*q multiplication table, or nullptr for larger fields.
  const Elem* mul_table() const { return multab_.empty() ? nullptr : multab_.data(); }

 private:
  FieldSpec spec_;
  std::vector<Elem> multab_;

  Elem mul_generic(Elem a, Elem b) const;
};

}  // namespace kpotent
