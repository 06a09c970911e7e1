#pragma once

/**
 * @file zmod.hpp
 * @brief Residue arithmetic mod n, q^2-cyclotomic cosets, defining sets and
 *        their skew-symmetric / skew-asymmetric decomposition.
 *
 * A defining set T of a cyclic code of length n over GF(q^2) is a union of
 * q^2-cyclotomic cosets mod n.  Writing T^{-q} = { n - q*t mod n : t in T },
 * the split T = T_ss ∪ T_sas with T_ss = T ∩ T^{-q} determines the number of
 * ebits an entanglement-assisted stabilizer construction consumes: c = |T_ss|.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace eaqmds {

using i64 = std::int64_t;

/// Reduce x into [0, n).  Works for negative x.
i64 mod_norm(i64 x, i64 n);

/// (x * y) mod n.  Inputs must already be reduced; n must be < 2^31 so the
/// product cannot overflow.
i64 mod_mul(i64 x, i64 y, i64 n);

/// x^e mod n for e >= 0.
i64 mod_pow(i64 x, i64 e, i64 n);

/// Deterministic trial-division primality test.
bool is_prime(i64 p);

/// Prime factors of x in increasing order, without multiplicity.
std::vector<i64> prime_factors(i64 x);

/// Orbit of s under multiplication by q^2 modulo n.
struct CyclotomicCoset {
  i64 n = 0;
  i64 base = 0;           // q^2 mod n
  i64 representative = 0; // smallest element
  std::vector<i64> elements;  // sorted

  bool contains(i64 x) const;
  i64 size() const { return static_cast<i64>(elements.size()); }
  bool operator==(const CyclotomicCoset& o) const {
    return n == o.n && elements == o.elements;
  }
};

/// Union of cyclotomic cosets, stored as sorted representatives + flat
/// sorted element set.
struct DefiningSet {
  i64 n = 0;
  i64 q = 0;
  std::vector<i64> coset_reps;  // canonical (smallest-element), sorted
  std::vector<i64> elements;    // sorted, duplicate-free

  i64 size() const { return static_cast<i64>(elements.size()); }
  bool contains(i64 x) const;
  bool operator==(const DefiningSet& o) const = default;
};

struct CosetClass {
  enum Kind { SkewSymmetric, SkewAsymmetricPair };
  Kind kind = SkewSymmetric;
  i64 partner_rep = -1;  // canonical rep of C_{n-q*s}; == own rep iff skew symmetric
};

/// One self-certifying reason why a coset (or coset pair) landed in T_ss.
struct DecompositionWitness {
  CosetClass::Kind kind;
  i64 rep;          // coset in T
  i64 partner_rep;  // == rep for skew-symmetric cosets
};

struct Decomposition {
  DefiningSet tss;
  DefiningSet tsas;
  std::vector<DecompositionWitness> witnesses;
};

/// The q^2-cyclotomic coset mod n containing s.  Throws std::invalid_argument
/// unless gcd(n, q) = 1.  s is reduced mod n.
CyclotomicCoset cyclotomic_coset(i64 s, i64 n, i64 q);

/// All q^2-cyclotomic cosets mod n, sorted by representative.  They partition
/// Z_n.
std::vector<CyclotomicCoset> all_cosets(i64 n, i64 q);

/// { (n - q*s) mod n : s in S }.  If S is a union of cosets, so is the image.
std::vector<i64> neg_q_image(const std::vector<i64>& s, i64 q, i64 n);

/// Skew symmetric iff n - q*rep mod n lands back in the coset; otherwise the
/// partner coset's canonical representative is reported.
CosetClass classify_coset(const CyclotomicCoset& c, i64 q);

/// Build a defining set from coset representatives.  Aliased reps (labels of
/// the same coset) are collapsed; reps are canonicalized.
DefiningSet make_defining_set(i64 n, i64 q, const std::vector<i64>& reps);

/// T_ss = T ∩ T^{-q}, T_sas = T \ T_ss, with witnesses for every
/// skew-symmetric coset and every skew-asymmetric pair contained in T.
Decomposition decompose(const DefiningSet& t);

}  // namespace eaqmds
