/// Verification layer: Gram-rank ebit counts against the defining-set route,
/// the two minor-check kernels against each other, bound classification, and
/// full record assembly.

#include <random>

#include "doctest.h"

#include "eaqmds/verify.hpp"

using namespace eaqmds;

namespace {

CheckMatrix anchor_matrix(const CodeContext& ctx, i64 k) {
  return parity_check_matrix(
      ctx, build_defining_set(make_consecutive_spec(ctx.n, ctx.q, k)));
}

/// Multiply H on the left by a random invertible matrix (row operations):
/// scale each row by a nonzero constant, then add random multiples of other
/// rows.  Leaves the row space — and therefore every verdict — unchanged.
gf::Mat random_row_mix(const CheckMatrix& H, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  const gf::PackedField& pf = *H.pf;
  gf::Mat m = H.m;
  for (i64 r = 0; r < m.rows; ++r) {
    const gf::u32 c = static_cast<gf::u32>(
        1 + rng() % static_cast<unsigned long long>(pf.order() - 1));
    for (i64 j = 0; j < m.cols; ++j) m.at(r, j) = pf.mul(c, m.at(r, j));
  }
  for (int step = 0; step < 8; ++step) {
    const i64 src = static_cast<i64>(rng() % static_cast<unsigned long long>(m.rows));
    const i64 dst = static_cast<i64>(rng() % static_cast<unsigned long long>(m.rows));
    if (src == dst) continue;
    const gf::u32 c = static_cast<gf::u32>(
        rng() % static_cast<unsigned long long>(pf.order()));
    for (i64 j = 0; j < m.cols; ++j)
      m.at(dst, j) = pf.add(m.at(dst, j), pf.mul(c, m.at(src, j)));
  }
  return m;
}

}  // namespace

TEST_CASE("binomial with clamp") {
  CHECK(binom_clamped(17, 6) == 12376);
  CHECK(binom_clamped(17, 8) == 24310);
  CHECK(binom_clamped(29, 12) == 51895935);
  CHECK(binom_clamped(5, 0) == 1);
  CHECK(binom_clamped(5, 5) == 1);
  CHECK(binom_clamped(5, 6) == 0);
  CHECK(binom_clamped(100, 50, 1000) == 1000);  // clamped
}

TEST_CASE("gram rank equals |T_ss| on the anchor field") {
  const CodeContext ctx = make_code_context(13, 17);
  const std::vector<i64> expected = {0, 0, 4, 4, 4, 8, 12, 16};
  for (i64 k = 0; k <= 7; ++k) {
    const DefiningSet T = build_defining_set(make_consecutive_spec(17, 13, k));
    const CheckMatrix H = parity_check_matrix(ctx, T);
    CHECK(gram_rank(H) == expected[static_cast<size_t>(k)]);
    const EbitReport rep = ebit_cross_check(T, H);
    CHECK(rep.agree);
    CHECK(rep.tss_size == expected[static_cast<size_t>(k)]);
  }
}

TEST_CASE("ea singleton classification") {
  CHECK(ea_singleton(17, 9, 7, 4) == Saturation::Saturated);
  CHECK(ea_singleton(17, 10, 7, 4) == Saturation::Violated);  // 12 > 11
  CHECK(ea_singleton(17, 8, 7, 4) == Saturation::Slack);      // 12 < 13
  CHECK_THROWS_AS(ea_singleton(17, 9, 7, -1), std::domain_error);
  CHECK_THROWS_AS(ea_singleton(17, 9, 7, 17), std::domain_error);
}

TEST_CASE("minor kernels agree and certify the anchor codes") {
  const CodeContext ctx = make_code_context(13, 17);
  for (i64 k = 0; k <= 4; ++k) {
    const CheckMatrix H = anchor_matrix(ctx, k);
    const MinorVerdict fast = mds_minor_check(H, 1'000'000);
    const MinorVerdict serial = mds_minor_check_serial(H, 1'000'000);
    CHECK(fast.outcome == MinorOutcome::Mds);
    CHECK(serial.outcome == fast.outcome);
    CHECK(serial.witness == fast.witness);
    CHECK(serial.cost == fast.cost);
    CHECK(fast.cost == binom_clamped(17, H.m.rows));
  }
}

TEST_CASE("minor check finds the first dependent subset") {
  const CodeContext ctx = make_code_context(13, 17);
  CheckMatrix H = anchor_matrix(ctx, 2);  // 6 x 17
  // Duplicate column 0 into column 1: every 6-subset containing both is
  // dependent, and {0,1,2,3,4,5} is the lexicographically first one.
  for (i64 r = 0; r < H.m.rows; ++r) H.m.at(r, 1) = H.m.at(r, 0);
  const MinorVerdict fast = mds_minor_check(H, 1'000'000);
  const MinorVerdict serial = mds_minor_check_serial(H, 1'000'000);
  REQUIRE(fast.outcome == MinorOutcome::NotMds);
  CHECK(fast.witness == std::vector<i64>{0, 1, 2, 3, 4, 5});
  CHECK(serial.outcome == fast.outcome);
  CHECK(serial.witness == fast.witness);

  // Dependence planted later in lexicographic order: zero out a column.
  CheckMatrix H2 = anchor_matrix(ctx, 2);
  for (i64 r = 0; r < H2.m.rows; ++r) H2.m.at(r, 9) = 0;
  const MinorVerdict f2 = mds_minor_check(H2, 1'000'000);
  const MinorVerdict s2 = mds_minor_check_serial(H2, 1'000'000);
  REQUIRE(f2.outcome == MinorOutcome::NotMds);
  CHECK(f2.witness == std::vector<i64>{0, 1, 2, 3, 4, 9});
  CHECK(s2.witness == f2.witness);
}

TEST_CASE("minor verdicts are invariant under row operations") {
  const CodeContext ctx = make_code_context(13, 17);
  for (i64 k : {1, 3}) {
    const CheckMatrix H = anchor_matrix(ctx, k);
    for (unsigned long long seed : {1ull, 2ull}) {
      CheckMatrix mixed{H.q, H.n, H.pf, random_row_mix(H, seed)};
      const MinorVerdict a = mds_minor_check(H, 1'000'000);
      const MinorVerdict b = mds_minor_check(mixed, 1'000'000);
      CHECK(a.outcome == b.outcome);
      CHECK(a.witness == b.witness);
      CHECK(gram_rank(mixed) == gram_rank(H));
    }
  }
}

TEST_CASE("minor check skips above the cap") {
  const CodeContext ctx = make_code_context(17, 29);
  const CheckMatrix H = anchor_matrix(ctx, 5);  // C(29,12) = 51,895,935
  const MinorVerdict v = mds_minor_check(H, 1'000'000);
  CHECK(v.outcome == MinorOutcome::Skipped);
  CHECK(v.cost == 51895935);
}

TEST_CASE("record assembly cross-checks both ebit routes") {
  const CodeContext ctx = make_code_context(13, 17);
  const DefiningSet T = build_defining_set(make_consecutive_spec(17, 13, 2));
  const CheckMatrix H = parity_check_matrix(ctx, T);
  const EaqmdsRecord rec = eaqmds_record(T, H, bch_designed_distance(T),
                                         1'000'000);
  CHECK(rec.q == 13);
  CHECK(rec.n == 17);
  CHECK(rec.k == 9);
  CHECK(rec.d == 7);
  CHECK(rec.c == 4);
  CHECK(rec.saturation == Saturation::Saturated);
  CHECK(rec.ebits.agree);
  CHECK(rec.minor.outcome == MinorOutcome::Mds);
}
