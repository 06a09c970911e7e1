#pragma once

/**
 * @file gf.hpp
 * @brief Exact arithmetic in GF(p^e), deterministic field construction, and
 *        the degree-2 tower GF(q^2) ⊂ GF(q^4).
 *
 * Fields are built as GF(p)[x]/(f) where f is the lexicographically smallest
 * monic irreducible of the requested degree (coefficients compared from the
 * high degree down).  The construction is deterministic, so repeated runs
 * produce bit-identical moduli.  Everything downstream only consumes
 * basis-independent quantities (ranks, multiplicative orders), so the choice
 * of modulus cannot affect verdicts.
 */

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace eaqmds::gf {

using i64 = std::int64_t;

struct NotPrimePowerError : std::domain_error {
  using std::domain_error::domain_error;
};

struct PrimePower {
  i64 p = 0;
  i64 e = 0;
  i64 q = 0;
};

/// Decompose q = p^e with p prime; throws NotPrimePowerError otherwise.
PrimePower factor_prime_power(i64 q);

/// p^e, throwing if the result does not fit in 62 bits.
i64 checked_pow(i64 p, i64 e);

/// GF(p^e) with elements represented as coefficient vectors of length e
/// (low degree first), reduced mod p.
class Field {
 public:
  using Elt = std::vector<i64>;

  /// Deterministic construction: lexicographically smallest monic
  /// irreducible modulus of degree e over GF(p).
  static Field make(i64 p, i64 e);

  i64 p() const { return p_; }
  i64 degree() const { return e_; }
  i64 order() const { return order_; }  // p^e
  const std::vector<i64>& modulus() const { return modulus_; }  // length e+1, monic

  Elt zero() const { return Elt(static_cast<size_t>(e_), 0); }
  Elt one() const { return from_int(1); }
  Elt from_int(i64 c) const;
  /// x, the residue of the polynomial generator (== from_int(p) conceptually).
  Elt gen() const;

  bool is_zero(const Elt& a) const;
  bool eq(const Elt& a, const Elt& b) const { return a == b; }

  Elt add(const Elt& a, const Elt& b) const;
  Elt sub(const Elt& a, const Elt& b) const;
  Elt neg(const Elt& a) const;
  Elt mul(const Elt& a, const Elt& b) const;
  Elt inv(const Elt& a) const;  // throws std::domain_error on zero
  Elt div(const Elt& a, const Elt& b) const { return mul(a, inv(b)); }
  /// a^k; negative k means pow(inv(a), -k).
  Elt pow(const Elt& a, i64 k) const;
  /// Frobenius a^p.
  Elt frobenius(const Elt& a) const { return pow(a, p_); }
  /// a^q with q = p^(e/2); requires even degree.
  Elt conj(const Elt& a) const;

  /// Canonical integer encoding sum c_i p^i in [0, p^e).
  i64 pack(const Elt& a) const;
  Elt unpack(i64 idx) const;
  std::string to_string(const Elt& a) const;

  /// Multiplicative order of a nonzero element.
  i64 element_order(const Elt& a) const;

 private:
  Field(i64 p, i64 e, std::vector<i64> modulus);
  i64 p_ = 0, e_ = 0, order_ = 0;
  std::vector<i64> modulus_;
};

/// Monic f of degree >= 1 over GF(p): true iff irreducible.
bool poly_irreducible(const std::vector<i64>& f, i64 p);

/// GF(q^4) as a 2-dimensional space over GF(q^2).  Both fields are built
/// directly over GF(p); the embedding sends the base generator to a root of
/// the base modulus inside the top field (smallest root in the canonical
/// element encoding).  {1, x_top} is the GF(q^2)-basis used for projection.
struct TowerMap {
  i64 q = 0;        // p^eq
  PrimePower pp;    // (p, eq)
  Field base;       // GF(q^2), degree 2*eq over p
  Field top;        // GF(q^4), degree 4*eq over p
  std::vector<Field::Elt> rho_pow;  // rho^0 .. rho^(2eq-1), rho = embedded root

  Field::Elt embed(const Field::Elt& a) const;
  /// Coordinates (u, v) with A = embed(u) + embed(v) * x_top.
  std::pair<Field::Elt, Field::Elt> project(const Field::Elt& a) const;
  /// True iff a lies in the embedded GF(q^2) (second coordinate zero).
  bool in_base(const Field::Elt& a) const;

  std::vector<i64> proj_matrix;  // (4eq)x(4eq) over GF(p), row-major
};

TowerMap make_tower(i64 q);

/// gamma of exact multiplicative order n in GF(q^4); requires n | q^4 - 1.
/// Deterministic: candidates are taken in canonical element order and the
/// first g with ord(g^((q^4-1)/n)) = n wins.
Field::Elt nth_root_of_unity(i64 n, const TowerMap& tower);

}  // namespace eaqmds::gf
