#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "kpotent/errors.hpp"
#include "kpotent/field.hpp"

using namespace kpotent;

TEST_CASE("prime field arithmetic") {
  Field f(7, 1);
  CHECK(f.p() == 7);
  CHECK(f.e() == 1);
  CHECK(f.q() == 7);
  CHECK(f.name() == "7");
  CHECK(f.spec().modulus.empty());
  CHECK(f.add(3, 5) == 1);
  CHECK(f.sub(2, 5) == 4);
  CHECK(f.neg(3) == 4);
  CHECK(f.neg(0) == 0);
  CHECK(f.mul(3, 5) == 1);
  CHECK(f.inv(3) == 5);
  CHECK(f.div(1, 3) == 5);
  CHECK(f.pow(3, 6) == 1);
  CHECK(f.pow(3, 0) == 1);
  CHECK(f.from_int(23) == 2);
}

TEST_CASE("deterministic extension moduli") {
  // Smallest-canonical-code monic irreducible of the right degree.
  CHECK(Field(2, 2).spec().modulus == std::vector<std::uint32_t>{1, 1, 1});  // x^2+x+1
  CHECK(Field(3, 2).spec().modulus == std::vector<std::uint32_t>{1, 0, 1});  // x^2+1
  CHECK(Field(2, 3).spec().modulus == std::vector<std::uint32_t>{1, 1, 0, 1});  // x^3+x+1
  CHECK(Field(3, 2).name() == "3^2");
  CHECK(Field(3, 2).q() == 9);
}

TEST_CASE("extension field element codes") {
  Field f9(3, 2);
  // code 3 is x; with modulus x^2+1 we get x*x = -1 = 2.
  CHECK(f9.mul(3, 3) == 2);
  CHECK(f9.coeffs(5) == std::vector<std::uint32_t>{2, 1});
  CHECK(f9.from_int(10) == 1);

  Field f4(2, 2);
  // modulus x^2+x+1: x*x = x+1 (code 3), x*(x+1) = 1.
  CHECK(f4.mul(2, 2) == 3);
  CHECK(f4.mul(2, 3) == 1);
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(12345u);
  for (const Field& f : {Field(7, 1), Field(2, 2), Field(3, 2), Field(5, 1), Field(2, 3)}) {
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(f.q() - 1));
    for (int t = 0; t < 200; ++t) {
      Field::Elem a = pick(rng), b = pick(rng), c = pick(rng);
      CHECK(f.add(a, b) == f.add(b, a));
      CHECK(f.mul(a, b) == f.mul(b, a));
      CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.add(a, f.neg(a)) == 0);
      CHECK(f.sub(a, b) == f.add(a, f.neg(b)));
      CHECK(f.add(a, 0) == a);
      CHECK(f.mul(a, 1) == a);
      CHECK(f.mul(a, 0) == 0);
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
      // pow against repeated multiplication
      Field::Elem acc = 1;
      for (unsigned i = 0; i < 11; ++i) acc = f.mul(acc, a);
      CHECK(f.pow(a, 11) == acc);
    }
  }
}

TEST_CASE("large field drops the dense multiplication table") {
  Field f(5, 4);  // q = 625 > dense-table limit
  CHECK(f.q() == 625);
  CHECK(f.mul_table() == nullptr);
  CHECK(f.mul(f.inv(7), 7) == 1);
  CHECK(f.mul(2, 3) == 1);  // prime subfield: 6 mod 5
  Field small(7, 1);
  CHECK(small.mul_table() != nullptr);
}

TEST_CASE("potent scalars") {
  CHECK(Field(5, 1).potent_scalars(2) == std::vector<Field::Elem>{0, 1, 4});
  CHECK(Field(7, 1).potent_scalars(3) == std::vector<Field::Elem>{0, 1, 2, 4});
  CHECK(Field(3, 2).potent_scalars(4) == std::vector<Field::Elem>{0, 1, 2, 3, 6});
  // k = 1 (idempotent scalars) is always {0, 1}
  for (const Field& f : {Field(2, 1), Field(7, 1), Field(3, 2), Field(2, 3)})
    CHECK(f.potent_scalars(1) == std::vector<Field::Elem>{0, 1});
}

TEST_CASE("potent scalar count is gcd(k, q-1) + 1 and the set is complete") {
  for (const Field& f : {Field(5, 1), Field(7, 1), Field(11, 1), Field(3, 2), Field(2, 2)}) {
    for (unsigned k = 1; k <= 12; ++k) {
      auto scalars = f.potent_scalars(k);
      CHECK(scalars.size() == std::gcd<std::uint64_t>(k, f.q() - 1) + 1);
      CHECK(std::is_sorted(scalars.begin(), scalars.end()));
      std::set<Field::Elem> seen(scalars.begin(), scalars.end());
      CHECK(seen.size() == scalars.size());
      for (Field::Elem x : scalars) CHECK(f.pow(x, k + 1) == x);
      // completeness: no potent scalar outside the list
      for (std::uint64_t x = 0; x < f.q(); ++x) {
        bool potent = f.pow(static_cast<Field::Elem>(x), k + 1) == x;
        CHECK(potent == (seen.count(static_cast<Field::Elem>(x)) > 0));
      }
    }
  }
}

TEST_CASE("primitive roots of unity") {
  CHECK(Field(5, 1).primitive_kth_root(4) == 2);
  CHECK(Field(7, 1).primitive_kth_root(3) == 2);
  CHECK(Field(13, 1).primitive_kth_root(4) == 5);
  CHECK(Field(7, 1).primitive_kth_root(1) == 1);
  CHECK_THROWS_AS(Field(7, 1).primitive_kth_root(4), NoSuchRoot);   // 4 does not divide 6
  CHECK_THROWS_AS(Field(5, 1).primitive_kth_root(3), NoSuchRoot);   // 3 does not divide 4
}

TEST_CASE("primitive root order is exact and its powers are distinct") {
  for (const Field& f : {Field(7, 1), Field(13, 1), Field(3, 2), Field(11, 1)}) {
    for (unsigned k = 1; k + 1 <= f.q(); ++k) {
      if ((f.q() - 1) % k != 0) continue;
      Field::Elem w = f.primitive_kth_root(k);
      CHECK(f.pow(w, k) == 1);
      for (unsigned d = 1; d < k; ++d) CHECK(f.pow(w, d) != 1);
      // the alphabet {0, 1, w, ..., w^{k-1}} has k+1 distinct members
      std::set<Field::Elem> alphabet{0};
      Field::Elem p = 1;
      for (unsigned d = 0; d < k; ++d) {
        alphabet.insert(p);
        p = f.mul(p, w);
      }
      CHECK(alphabet.size() == k + 1);
    }
  }
}

TEST_CASE("characteristic guard") {
  CHECK(Field(3, 1).char_guard(1).pass);
  CHECK(Field(3, 1).char_guard(1).reason.empty());
  CHECK(Field(5, 1).char_guard(3).pass);
  CHECK(Field(7, 1).char_guard(5).pass);

  GuardResult g = Field(2, 1).char_guard(1);
  CHECK_FALSE(g.pass);
  CHECK(g.reason == "characteristic 2 divides k+1 = 2");
  CHECK(Field(3, 1).char_guard(3).reason == "characteristic 3 divides k = 3");
  CHECK_FALSE(Field(3, 1).char_guard(2).pass);  // 3 | k+1

  // characteristic 2 can never pass: one of k, k+1 is even
  for (unsigned k = 1; k <= 6; ++k) {
    CHECK_FALSE(Field(2, 1).char_guard(k).pass);
    CHECK_FALSE(Field(2, 2).char_guard(k).pass);
  }
}

TEST_CASE("field text parsing") {
  CHECK(Field::parse("7").q() == 7);
  CHECK(Field::parse("3^2").q() == 9);
  CHECK(Field::parse("3^2").name() == "3^2");
  CHECK(Field::parse("2").q() == 2);

  CHECK_THROWS_AS(Field::parse("5x"), ParseError);
  CHECK_THROWS_AS(Field::parse("3^2^2"), ParseError);
  CHECK_THROWS_AS(Field::parse(""), ParseError);
  CHECK_THROWS_AS(Field::parse("^2"), ParseError);
  CHECK_THROWS_AS(Field::parse("7^"), ParseError);
  CHECK_THROWS_AS(Field::parse("x"), ParseError);

  CHECK_THROWS_AS(Field::parse("4"), NotPrime);
  CHECK_THROWS_AS(Field::parse("6"), NotPrime);
  CHECK_THROWS_AS(Field::parse("1"), NotPrime);
  CHECK_THROWS_AS(Field::parse("0"), NotPrime);
  CHECK_THROWS_AS(Field::parse("10^2"), NotPrime);

  CHECK_THROWS_AS(Field::parse("7^0"), DegreeZero);
  CHECK_THROWS_AS(Field::parse("2^21"), FieldTooLarge);
  CHECK_THROWS_AS(Field::parse("3^40"), FieldTooLarge);
  CHECK_THROWS_AS(Field::parse("99999999999999999999999"), FieldTooLarge);
}

TEST_CASE("constructor validation") {
  CHECK_THROWS_AS(Field(4, 1), NotPrime);
  CHECK_THROWS_AS(Field(7, 0), DegreeZero);
  CHECK_THROWS_AS(Field(2, 21), FieldTooLarge);
}

TEST_CASE("same_as distinguishes fields") {
  CHECK(Field(7, 1).same_as(Field(7, 1)));
  CHECK_FALSE(Field(7, 1).same_as(Field(5, 1)));
  CHECK_FALSE(Field(3, 1).same_as(Field(3, 2)));
}
