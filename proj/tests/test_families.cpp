/// Family layer: parameter cell validation, anchor instances against
/// hand-computed values, claim/report generation, predicted coset pairs,
/// published-table reproduction, and sweeps.

#include <algorithm>

#include "doctest.h"

#include "eaqmds/families.hpp"
#include "eaqmds/published_tables.hpp"

using namespace eaqmds;

namespace {

i64 count_reports(const std::vector<DiscrepancyReport>& reports,
                  const std::string& kind) {
  return std::count_if(reports.begin(), reports.end(),
                       [&](const DiscrepancyReport& r) { return r.kind == kind; });
}

const DiscrepancyReport* find_report(
    const std::vector<DiscrepancyReport>& reports, const std::string& kind) {
  for (const DiscrepancyReport& r : reports)
    if (r.kind == kind) return &r;
  return nullptr;
}

bool sorted_cosets_equal(std::vector<CyclotomicCoset> a,
                         const std::vector<CyclotomicCoset>& b) {
  std::sort(a.begin(), a.end(),
            [](const CyclotomicCoset& x, const CyclotomicCoset& y) {
              return x.representative < y.representative;
            });
  return a == b;
}

}  // namespace

TEST_CASE("parameter cell validation") {
  const FamilyParams p1 = make_family_params(FamilyTag::F1, 3, 1);
  CHECK(p1.a == 10);
  CHECK(p1.q == 13);
  CHECK(p1.n == 17);
  CHECK(p1.s == 9);

  const FamilyParams p2 = make_family_params(FamilyTag::F2, 7, 1);
  CHECK(p2.a == 10);
  CHECK(p2.q == 17);
  CHECK(p2.n == 29);
  CHECK(p2.s == 15);
  CHECK(p2.t == 0);
  CHECK(p2.residue == 7);

  const FamilyParams p3 = make_family_params(FamilyTag::F2, 13, 1);
  CHECK(p3.a == 34);
  CHECK(p3.q == 47);
  CHECK(p3.n == 65);
  CHECK(p3.t == 1);
  CHECK(p3.residue == 3);

  CHECK_THROWS_AS(make_family_params(FamilyTag::F1, 4, 1),
                  std::invalid_argument);  // even l
  CHECK_THROWS_AS(make_family_params(FamilyTag::F1, 3, 0),
                  std::invalid_argument);  // m < 1
  CHECK_THROWS_AS(make_family_params(FamilyTag::F2, 5, 1),
                  std::invalid_argument);  // l mod 10 not in {3, 7}
  CHECK_THROWS_AS(make_family_params(FamilyTag::F2, 17, 1),
                  gf::NotPrimePowerError);  // q = 75
}

TEST_CASE("family 1 anchor (3,1): the three published code points") {
  const FamilyResult res = family1(3, 1, {FamilyOptions::Depth::Full, 100'000});
  CHECK(res.k_lo == 2);
  CHECK(res.k_hi == 4);
  CHECK(res.computed_range.d_min == 7);
  CHECK(res.computed_range.d_max == 11);

  REQUIRE(res.records.size() == 3);
  const std::vector<std::vector<i64>> expect = {
      {17, 9, 7, 4}, {17, 5, 9, 4}, {17, 1, 11, 4}};
  for (size_t i = 0; i < 3; ++i) {
    const EaqmdsRecord& r = res.records[i];
    CHECK(r.n == expect[i][0]);
    CHECK(r.k == expect[i][1]);
    CHECK(r.d == expect[i][2]);
    CHECK(r.c == expect[i][3]);
    CHECK(r.q == 13);
    CHECK(r.ebits.agree);
    CHECK(r.saturation == Saturation::Saturated);
    CHECK(r.minor.outcome == MinorOutcome::Mds);
  }

  // Computed skew pair {6,11}, {7,10}; predicted form agrees here.
  REQUIRE(res.computed_tss.size() == 2);
  CHECK(res.computed_tss[0].elements == std::vector<i64>{6, 11});
  CHECK(res.computed_tss[1].elements == std::vector<i64>{7, 10});
  CHECK(res.predicted.integral);
  CHECK(sorted_cosets_equal(res.predicted.cosets, res.computed_tss));

  // The stated d-range is too narrow (upper end); the table range is right.
  CHECK(count_reports(res.reports, "rangeMismatch") == 1);
  const DiscrepancyReport* rm = find_report(res.reports, "rangeMismatch");
  REQUIRE(rm != nullptr);
  CHECK(rm->witness["claimedDMax"] == 8);
  CHECK(rm->witness["computedDMax"] == 11);
  CHECK(count_reports(res.reports, "tssFormulaMismatch") == 0);
}

TEST_CASE("family 2 anchor (7,1): run break and shifted pair detected") {
  const FamilyResult res = family2(7, 1, {FamilyOptions::Depth::Full, 100'000});
  CHECK(res.k_lo == 3);
  CHECK(res.k_hi == 5);
  CHECK(res.computed_range.d_min == 9);
  CHECK(res.computed_range.d_max == 13);

  REQUIRE(res.records.size() == 3);
  const std::vector<std::vector<i64>> expect = {
      {29, 17, 9, 4}, {29, 13, 11, 4}, {29, 9, 13, 4}};
  for (size_t i = 0; i < 3; ++i) {
    const EaqmdsRecord& r = res.records[i];
    CHECK(r.n == expect[i][0]);
    CHECK(r.k == expect[i][1]);
    CHECK(r.d == expect[i][2]);
    CHECK(r.c == expect[i][3]);
    CHECK(r.ebits.agree);
    CHECK(r.saturation == Saturation::Saturated);
  }

  // Computed pair is {11,18}, {13,16}; the closed form names {12,17}.
  REQUIRE(res.computed_tss.size() == 2);
  CHECK(res.computed_tss[0].elements == std::vector<i64>{11, 18});
  CHECK(res.computed_tss[1].elements == std::vector<i64>{13, 16});

  const DiscrepancyReport* rm = find_report(res.reports, "rangeMismatch");
  REQUIRE(rm != nullptr);
  CHECK(rm->witness["claimedKMax"] == 6);
  CHECK(rm->witness["tssSizeAtClaimedKMax"] == 8);
  CHECK(rm->witness["computedKMax"] == 5);

  const DiscrepancyReport* tm = find_report(res.reports, "tssFormulaMismatch");
  REQUIRE(tm != nullptr);
  CHECK(tm->witness.contains("predicted"));
  CHECK(tm->witness.contains("computed"));

  // The stated (theorem-level) d-range itself is confirmed.
  bool range_claim_confirmed = false;
  for (const ClaimCheck& c : res.claims)
    if (c.claim.find("<= d <=") != std::string::npos &&
        c.source == "theoremText")
      range_claim_confirmed = c.confirmed;
  CHECK(range_claim_confirmed);
}

TEST_CASE("family 2 (13,1): pair formula off by one, run top confirmed") {
  const FamilyResult res = family2(13, 1, {});
  CHECK(res.k_lo == 5);
  CHECK(res.k_hi == 8);
  CHECK(res.computed_range.d_min == 13);
  CHECK(res.computed_range.d_max == 19);
  REQUIRE(res.computed_tss.size() == 2);
  CHECK(res.computed_tss[0].elements == std::vector<i64>{27, 38});
  CHECK(res.computed_tss[1].elements == std::vector<i64>{31, 34});

  const DiscrepancyReport* tm = find_report(res.reports, "tssFormulaMismatch");
  REQUIRE(tm != nullptr);
  CHECK(count_reports(res.reports, "rangeMismatch") == 0);
}

TEST_CASE("predicted pair matches computation at the first family's cells") {
  for (const auto& [l, m] : std::vector<std::pair<i64, i64>>{
           {3, 1}, {3, 2}, {5, 1}}) {
    const FamilyResult res = family1(l, m, {FamilyOptions::Depth::Params, 0});
    CHECK(res.predicted.integral);
    CHECK(sorted_cosets_equal(res.predicted.cosets, res.computed_tss));
  }
}

TEST_CASE("profile scan fills both oracles") {
  const FamilyParams p = make_family_params(FamilyTag::F1, 3, 1);
  const std::vector<CProfileEntry> prof = scan_c_profile(p, 7);
  REQUIRE(prof.size() == 8);
  const std::vector<i64> expected = {0, 0, 4, 4, 4, 8, 12, 16};
  for (size_t i = 0; i < prof.size(); ++i) {
    CHECK(prof[i].tss_size == expected[i]);
    CHECK(prof[i].gram_rank == expected[i]);
  }
}

TEST_CASE("published table 1 reproduces with one subscript typo") {
  const TableResult res = reproduce_tables(1);
  REQUIRE(res.rows.size() == 12);
  for (const TableRowResult& row : res.rows) {
    CHECK(row.n.match);
    CHECK(row.k_offset.match);
    CHECK(row.d_range.match);
    CHECK(row.subscript.match == (row.q != 31));
  }
  CHECK(count_reports(res.reports, "tableTypo") == 1);
  // The stated closed-form upper bound disagrees on every row.
  CHECK(count_reports(res.reports, "rangeMismatch") == 12);
}

TEST_CASE("published table 2 reproduces with one offset typo") {
  const TableResult res = reproduce_tables(2);
  REQUIRE(res.rows.size() == 9);
  for (const TableRowResult& row : res.rows) {
    CHECK(row.n.match);
    CHECK(row.subscript.match);
    CHECK(row.d_range.match);
    CHECK(row.k_offset.match == (row.q != 37));
  }
  // Offset typo at q = 37 plus the header's q = m+l slip.
  CHECK(count_reports(res.reports, "tableTypo") == 2);
  // Every tabulated row confirms its printed d-range.
  for (const ClaimCheck& c : res.claims)
    if (c.source == "tableText") CHECK(c.confirmed);
}

TEST_CASE("summary table evaluation") {
  const TableResult res = reproduce_tables(3);
  bool f1_contradicted = false, f2_confirmed = false;
  for (const ClaimCheck& c : res.claims) {
    if (c.instance.find("family 1") != std::string::npos)
      f1_contradicted = !c.confirmed;
    if (c.instance.find("family 2") != std::string::npos)
      f2_confirmed = c.confirmed;
  }
  CHECK(f1_contradicted);
  CHECK(f2_confirmed);
  CHECK(count_reports(res.reports, "tableTypo") == 1);  // side-condition clash
}

TEST_CASE("sweep skips invalid cells with reasons") {
  const SweepResult res = sweep_family(FamilyTag::F1, 3, 7, 1, 1,
                                       {FamilyOptions::Depth::Params, 0});
  // l = 3: q = 13 ok; l = 5: q = 31 ok; l = 7: q = 57 = 3*19 not a prime power.
  CHECK(res.instances.size() == 2);
  REQUIRE(res.skips.size() == 3);
  i64 not_pp = 0, not_odd = 0;
  for (const SweepSkip& s : res.skips) {
    if (s.reason.find("prime power") != std::string::npos) ++not_pp;
    if (s.reason.find("odd") != std::string::npos) ++not_odd;
  }
  CHECK(not_pp == 1);
  CHECK(not_odd == 2);  // l = 4, 6
}

TEST_CASE("published row lookup") {
  REQUIRE(published_rows(1).size() == 12);
  REQUIRE(published_rows(2).size() == 9);
  const PublishedRow* row = find_published_row(2, 7, 37);
  REQUIRE(row != nullptr);
  CHECK(row->k_offset == 142);  // printed value, off from n + 6 = 143
  CHECK(find_published_row(1, 3, 999) == nullptr);
}
