#pragma once

/**
 * @file cyclic.hpp
 * @brief Length-n cyclic codes over GF(q^2) whose defining set is a union of
 *        cyclotomic cosets of consecutive exponents around s = (n+1)/2.
 *
 * Requires n | q^2 + 1; then every nonzero coset mod n has exactly two
 * elements {x, n-x} and the run C_s ∪ ... ∪ C_{s+k} covers the consecutive
 * exponents s-k-1 .. s+k.  A primitive n-th root of unity gamma lives in
 * GF(q^4); evaluating at gamma powers and splitting over the {1, x} basis of
 * the tower turns each coset row into two parity rows over GF(q^2).
 */

#include <memory>

#include "eaqmds/gf.hpp"
#include "eaqmds/matrix.hpp"
#include "eaqmds/zmod.hpp"

namespace eaqmds {

/// Shared field machinery for one (q, n) pair.
struct CodeContext {
  i64 q = 0;
  i64 n = 0;
  gf::TowerMap tower;
  gf::Field::Elt gamma;                      // order exactly n in GF(q^4)
  std::shared_ptr<gf::PackedField> pf;       // packed GF(q^2)
};

/// Builds tower, root of unity and packed field; validates n | q^2 + 1 and
/// that q is a prime power.
CodeContext make_code_context(i64 q, i64 n);

/// Parameters of one defining-set run: s = (n+1)/2 and the run index k with
/// T = C_s ∪ C_{s+1} ∪ ... ∪ C_{s+k}.  Requires 0 <= k <= s - 2 so the code
/// is nondegenerate.
struct ConsecutiveSpec {
  i64 q = 0, n = 0, s = 0, k = 0;
};

ConsecutiveSpec make_consecutive_spec(i64 n, i64 q, i64 k);

/// The defining set of a spec: coset representatives s, s+1, ..., s+k.
DefiningSet build_defining_set(const ConsecutiveSpec& spec);

/// Parity-check matrix of the cyclic code with defining set T, as |T| rows
/// over GF(q^2) in reduced row echelon form.  Each coset representative i
/// contributes the GF(q^4) row (gamma^{ij})_j split into two GF(q^2) rows;
/// redundant rows are dropped by the echelon reduction, and the final rank
/// must equal |T| (internal-consistency failure otherwise).
struct CheckMatrix {
  i64 q = 0, n = 0;
  std::shared_ptr<gf::PackedField> pf;
  gf::Mat m;  // rank x n, reduced row echelon form
};

CheckMatrix parity_check_matrix(const CodeContext& ctx, const DefiningSet& T);

/// Generator polynomial prod_{i in T} (x - gamma^i), computed in GF(q^4) and
/// projected to GF(q^2); throws std::logic_error if any coefficient fails to
/// lie in the subfield (T not closed under the q^2 power map).
struct Gq2Poly {
  std::vector<gf::u32> coeffs;  // low degree first, packed GF(q^2) indices
  i64 degree() const { return static_cast<i64>(coeffs.size()) - 1; }
};

Gq2Poly generator_polynomial(const CodeContext& ctx, const DefiningSet& T);

/// Largest count of consecutive exponents (cyclically) contained in T, plus
/// one.  T empty gives 1; T = all residues throws (degenerate code).
i64 bch_designed_distance(const DefiningSet& T);

/// Everything that pins down one code: defining set, generator polynomial,
/// dimension and designed distance.
struct CyclicCodeSpec {
  i64 n = 0, q = 0;
  DefiningSet T;
  Gq2Poly g;
  i64 dimension = 0;  // n - |T|
  i64 delta = 0;      // designed distance
};

CyclicCodeSpec build_code_spec(const CodeContext& ctx, const DefiningSet& T);

}  // namespace eaqmds
