/// Cyclic-code layer: context validation, parity matrix rank and kernel,
/// generator polynomial roots and divisibility, designed distance.

#include "doctest.h"

#include "eaqmds/cyclic.hpp"

using namespace eaqmds;

namespace {

/// Remainder of x^n - 1 divided by g over the packed field.
std::vector<gf::u32> xn_minus_1_mod_g(const gf::PackedField& pf, i64 n,
                                      const Gq2Poly& g) {
  std::vector<gf::u32> r(static_cast<size_t>(n) + 1, 0);
  r[static_cast<size_t>(n)] = pf.one();
  r[0] = pf.neg(pf.one());
  const i64 dg = g.degree();
  const gf::u32 lead_inv = pf.inv(g.coeffs.back());
  for (i64 d = n; d >= dg; --d) {
    const gf::u32 c = r[static_cast<size_t>(d)];
    if (c == 0) continue;
    const gf::u32 f = pf.mul(c, lead_inv);
    for (i64 j = 0; j <= dg; ++j) {
      auto& slot = r[static_cast<size_t>(d - dg + j)];
      slot = pf.sub(slot, pf.mul(f, g.coeffs[static_cast<size_t>(j)]));
    }
  }
  r.resize(static_cast<size_t>(dg));
  return r;
}

}  // namespace

TEST_CASE("context construction validates inputs") {
  CHECK_NOTHROW(make_code_context(13, 17));
  CHECK_THROWS_AS(make_code_context(13, 15), std::invalid_argument);  // 15 ∤ 170
  CHECK_THROWS_AS(make_code_context(13, 16), std::invalid_argument);  // even
  CHECK_THROWS_AS(make_code_context(12, 29), gf::NotPrimePowerError);
}

TEST_CASE("consecutive spec covers s-k-1 .. s+k") {
  const ConsecutiveSpec spec = make_consecutive_spec(17, 13, 4);
  CHECK(spec.s == 9);
  const DefiningSet T = build_defining_set(spec);
  CHECK(T.elements == std::vector<i64>{4, 5, 6, 7, 8, 9, 10, 11, 12, 13});
  CHECK(T.coset_reps == std::vector<i64>{4, 5, 6, 7, 8});
  CHECK_THROWS_AS(make_consecutive_spec(17, 13, 8), std::invalid_argument);
  CHECK_THROWS_AS(make_consecutive_spec(17, 13, -1), std::invalid_argument);
}

TEST_CASE("parity matrix has rank |T| and kills the generator word") {
  const CodeContext ctx = make_code_context(13, 17);
  for (i64 k : {0, 2, 4}) {
    const DefiningSet T = build_defining_set(make_consecutive_spec(17, 13, k));
    const CheckMatrix H = parity_check_matrix(ctx, T);
    CHECK(H.m.rows == T.size());
    CHECK(H.m.cols == 17);
    CHECK(gf::rank(*H.pf, H.m) == T.size());

    // The generator polynomial, zero-padded to length n, is a codeword.
    const Gq2Poly g = generator_polynomial(ctx, T);
    for (i64 r = 0; r < H.m.rows; ++r) {
      gf::u32 acc = 0;
      for (size_t j = 0; j < g.coeffs.size(); ++j)
        acc = H.pf->add(acc,
                        H.pf->mul(H.m.at(r, static_cast<i64>(j)), g.coeffs[j]));
      CHECK(acc == 0);
    }
  }
}

TEST_CASE("generator polynomial vanishes exactly on T") {
  const CodeContext ctx = make_code_context(13, 17);
  const DefiningSet T = build_defining_set(make_consecutive_spec(17, 13, 2));
  const Gq2Poly g = generator_polynomial(ctx, T);
  CHECK(g.degree() == T.size());
  CHECK(g.coeffs.back() == ctx.pf->one());  // monic

  const gf::Field& top = ctx.tower.top;
  for (i64 i = 0; i < 17; ++i) {
    const gf::Field::Elt pt = top.pow(ctx.gamma, i);
    gf::Field::Elt acc = top.zero();
    for (size_t j = g.coeffs.size(); j-- > 0;) {
      acc = top.mul(acc, pt);
      acc = top.add(acc, ctx.tower.embed(
                             ctx.pf->unpack(g.coeffs[j])));
    }
    if (T.contains(i))
      CHECK(top.is_zero(acc));
    else
      CHECK_FALSE(top.is_zero(acc));
  }
}

TEST_CASE("generator divides x^n - 1") {
  const CodeContext ctx = make_code_context(13, 17);
  for (i64 k : {0, 3, 5}) {
    const DefiningSet T = build_defining_set(make_consecutive_spec(17, 13, k));
    const Gq2Poly g = generator_polynomial(ctx, T);
    for (gf::u32 c : xn_minus_1_mod_g(*ctx.pf, 17, g)) CHECK(c == 0);
  }
}

TEST_CASE("designed distance is the longest consecutive run plus one") {
  // A consecutive run C_s..C_{s+k} covers 2k+2 exponents: delta = 2k+3.
  for (i64 k = 0; k <= 6; ++k) {
    const DefiningSet T = build_defining_set(make_consecutive_spec(17, 13, k));
    CHECK(bch_designed_distance(T) == 2 * k + 3);
  }
  // Non-consecutive union: C_1 u C_3 mod 17 = {1,16} u {3,14}; the longest
  // run is a single residue.
  CHECK(bch_designed_distance(make_defining_set(17, 13, {1, 3})) == 2);
  // Wrap-around: {16, 0, 1} u {2, 15} gives the cyclic run 15,16,0,1,2.
  CHECK(bch_designed_distance(make_defining_set(17, 13, {0, 1, 2})) == 6);
  CHECK(bch_designed_distance(DefiningSet{17, 13, {}, {}}) == 1);
}

TEST_CASE("full code spec ties the pieces together") {
  const CodeContext ctx = make_code_context(17, 29);
  const DefiningSet T = build_defining_set(make_consecutive_spec(29, 17, 3));
  const CyclicCodeSpec spec = build_code_spec(ctx, T);
  CHECK(spec.n == 29);
  CHECK(spec.q == 17);
  CHECK(spec.dimension == 29 - 8);
  CHECK(spec.delta == 9);
  CHECK(spec.g.degree() == 8);
}
