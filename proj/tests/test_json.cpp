/// Serialization layer: stable key sets, deterministic rendering, CSV rows.

#include "doctest.h"

#include "eaqmds/json_io.hpp"

using namespace eaqmds;

TEST_CASE("record serialization carries every verification field") {
  const CodeContext ctx = make_code_context(13, 17);
  const DefiningSet T = build_defining_set(make_consecutive_spec(17, 13, 2));
  const CheckMatrix H = parity_check_matrix(ctx, T);
  const EaqmdsRecord rec =
      eaqmds_record(T, H, bch_designed_distance(T), 1'000'000);
  const ordered_json j = to_json(rec);
  CHECK(j["q"] == 13);
  CHECK(j["n"] == 17);
  CHECK(j["k"] == 9);
  CHECK(j["d"] == 7);
  CHECK(j["c"] == 4);
  CHECK(j["saturation"] == "saturated");
  CHECK(j["mdsVerified"] == true);
  CHECK(j["ebits"]["gramRank"] == 4);
  CHECK(j["ebits"]["tssSize"] == 4);
  CHECK(j["ebits"]["agree"] == true);
  CHECK(j["minor"]["verdict"] == "mds");

  // Identical inputs give identical bytes.
  const EaqmdsRecord rec2 =
      eaqmds_record(T, H, bch_designed_distance(T), 1'000'000);
  CHECK(to_json(rec2).dump() == j.dump());
}

TEST_CASE("defining set and decomposition serialization") {
  const DefiningSet T = make_defining_set(17, 13, {9, 10, 11, 12, 13});
  const ordered_json jt = to_json(T);
  CHECK(jt["n"] == 17);
  CHECK(jt["size"] == 10);
  CHECK(jt["cosetReps"] == ordered_json::array({4, 5, 6, 7, 8}));

  const ordered_json jd = to_json(decompose(T));
  CHECK(jd["tss"]["elements"] == ordered_json::array({6, 7, 10, 11}));
  REQUIRE(jd["witnesses"].is_array());
  CHECK(jd["witnesses"].size() == 1);
  CHECK(jd["witnesses"][0]["kind"] == "skewAsymmetricPair");
}

TEST_CASE("csv rendering") {
  const CodeContext ctx = make_code_context(13, 17);
  const DefiningSet T = build_defining_set(make_consecutive_spec(17, 13, 2));
  const CheckMatrix H = parity_check_matrix(ctx, T);
  std::vector<EaqmdsRecord> recs = {
      eaqmds_record(T, H, bch_designed_distance(T), 1'000'000)};
  const std::string csv = records_csv(recs);
  CHECK(csv == "q,n,k,d,c,saturation,mdsVerified\n13,17,9,7,4,saturated,true\n");
}
