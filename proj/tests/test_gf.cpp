/// Field-layer checks: deterministic modulus construction, randomized ring
/// axioms, tower embedding/projection round trips, and exact root orders.

#include <random>

#include "doctest.h"

#include "eaqmds/gf.hpp"

using namespace eaqmds::gf;

namespace {

/// Deterministic RNG so failures reproduce bit-for-bit.
std::mt19937_64 rng_for(i64 seed) { return std::mt19937_64(0x9e3779b9ull ^ static_cast<unsigned long long>(seed)); }

Field::Elt random_elt(const Field& F, std::mt19937_64& rng) {
  return F.unpack(static_cast<i64>(rng() % static_cast<unsigned long long>(F.order())));
}

void check_axioms(const Field& F, int trials) {
  std::mt19937_64 rng = rng_for(F.order());
  for (int t = 0; t < trials; ++t) {
    const Field::Elt a = random_elt(F, rng);
    const Field::Elt b = random_elt(F, rng);
    const Field::Elt c = random_elt(F, rng);
    REQUIRE(F.eq(F.add(a, b), F.add(b, a)));
    REQUIRE(F.eq(F.mul(a, b), F.mul(b, a)));
    REQUIRE(F.eq(F.add(F.add(a, b), c), F.add(a, F.add(b, c))));
    REQUIRE(F.eq(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c))));
    REQUIRE(F.eq(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c))));
    REQUIRE(F.eq(F.add(a, F.neg(a)), F.zero()));
    REQUIRE(F.eq(F.sub(a, b), F.add(a, F.neg(b))));
    REQUIRE(F.eq(F.mul(a, F.one()), a));
    if (!F.is_zero(a)) {
      REQUIRE(F.eq(F.mul(a, F.inv(a)), F.one()));
      REQUIRE(F.eq(F.pow(a, F.order() - 1), F.one()));  // Fermat
    }
    // Frobenius is additive and multiplicative.
    REQUIRE(F.eq(F.frobenius(F.add(a, b)),
                 F.add(F.frobenius(a), F.frobenius(b))));
    REQUIRE(F.eq(F.frobenius(F.mul(a, b)),
                 F.mul(F.frobenius(a), F.frobenius(b))));
    if (F.degree() % 2 == 0) REQUIRE(F.eq(F.conj(F.conj(a)), a));
    REQUIRE(F.eq(F.unpack(F.pack(a)), a));
  }
}

void check_tower(const TowerMap& t, int trials) {
  const Field& B = t.base;
  const Field& T = t.top;
  std::mt19937_64 rng = rng_for(t.q);
  for (int i = 0; i < trials; ++i) {
    const Field::Elt a = random_elt(B, rng);
    const Field::Elt b = random_elt(B, rng);
    // Embedding is a ring homomorphism fixing prime-field scalars.
    REQUIRE(T.eq(t.embed(B.add(a, b)), T.add(t.embed(a), t.embed(b))));
    REQUIRE(T.eq(t.embed(B.mul(a, b)), T.mul(t.embed(a), t.embed(b))));
    REQUIRE(t.in_base(t.embed(a)));
    const auto [u, v] = t.project(t.embed(a));
    REQUIRE(B.eq(u, a));
    REQUIRE(B.is_zero(v));
    // Projection round trip on an arbitrary top element.
    const Field::Elt big = random_elt(T, rng);
    const auto [x, y] = t.project(big);
    const Field::Elt back =
        T.add(t.embed(x), T.mul(t.embed(y), T.gen()));
    REQUIRE(T.eq(back, big));
  }
  REQUIRE(T.eq(t.embed(B.one()), T.one()));
}

}  // namespace

TEST_CASE("prime power factorization") {
  CHECK(factor_prime_power(13).p == 13);
  CHECK(factor_prime_power(13).e == 1);
  CHECK(factor_prime_power(27).p == 3);
  CHECK(factor_prime_power(27).e == 3);
  CHECK(factor_prime_power(81).e == 4);
  CHECK_THROWS_AS(factor_prime_power(6), NotPrimePowerError);
  CHECK_THROWS_AS(factor_prime_power(1), NotPrimePowerError);
  CHECK_THROWS_AS(factor_prime_power(75), NotPrimePowerError);
}

TEST_CASE("modulus selection is the smallest monic irreducible") {
  // Squares mod 13 exclude -2, so x^2 + 2 is the first irreducible; x^2 + 1
  // splits (5^2 = -1 mod 13).
  const Field F169 = Field::make(13, 2);
  CHECK(F169.modulus() == std::vector<i64>{2, 0, 1});
  // -1 is not a square mod 3, so x^2 + 1 wins.
  const Field F9 = Field::make(3, 2);
  CHECK(F9.modulus() == std::vector<i64>{1, 0, 1});
  // In GF(9) = GF(3)[x]/(x^2+1): conj(x) = x^3 = x * x^2 = -x = 2x.
  const Field::Elt x = F9.gen();
  CHECK(F9.eq(F9.conj(x), F9.mul(F9.from_int(2), x)));
  CHECK(poly_irreducible({2, 0, 1}, 13));
  CHECK_FALSE(poly_irreducible({1, 0, 1}, 13));
  CHECK_FALSE(poly_irreducible({0, 1, 1}, 13));  // zero constant term
}

TEST_CASE("field axioms, 1000 random triples each") {
  check_axioms(Field::make(13, 2), 1000);
  check_axioms(Field::make(17, 2), 1000);
  check_axioms(Field::make(3, 6), 1000);
}

TEST_CASE("conjugation fixes exactly the subfield GF(q)") {
  const Field F = Field::make(13, 2);
  int fixed = 0;
  for (i64 i = 0; i < F.order(); ++i) {
    const Field::Elt a = F.unpack(i);
    if (F.eq(F.conj(a), a)) ++fixed;
  }
  CHECK(fixed == 13);
}

TEST_CASE("towers over 13, 17 and 27") {
  check_tower(make_tower(13), 1000);
  check_tower(make_tower(17), 1000);
  check_tower(make_tower(27), 300);  // top field has 3^12 elements
}

TEST_CASE("roots of unity have exact order") {
  const std::vector<std::pair<i64, i64>> cases = {
      {17, 13}, {29, 17}, {37, 31}, {65, 47}, {73, 27}};
  for (const auto& [n, q] : cases) {
    const TowerMap t = make_tower(q);
    const Field::Elt g = nth_root_of_unity(n, t);
    CHECK(t.top.element_order(g) == n);
    // gamma^n = 1 but no smaller power is 1 (order is exact), and gamma
    // never lies in GF(q^2) since n does not divide q^2 - 1.
    CHECK_FALSE(t.in_base(g));
  }
}

TEST_CASE("root of unity rejects impossible orders") {
  const TowerMap t = make_tower(13);
  CHECK_THROWS(nth_root_of_unity(19, t));  // 19 does not divide 13^4 - 1
}
