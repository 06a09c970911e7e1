#include "eaqmds/json_io.hpp"

#include <sstream>

namespace eaqmds {

std::string saturation_name(Saturation s) {
  switch (s) {
    case Saturation::Saturated: return "saturated";
    case Saturation::Slack: return "slack";
    case Saturation::Violated: return "violated";
  }
  return "?";
}

ordered_json mds_verified_json(const MinorVerdict& v) {
  switch (v.outcome) {
    case MinorOutcome::Mds: return true;
    case MinorOutcome::NotMds: return false;
    case MinorOutcome::Skipped: return "skipped";
  }
  return nullptr;
}

ordered_json to_json(const CyclotomicCoset& c) {
  return {{"rep", c.representative}, {"elements", c.elements}};
}

ordered_json to_json(const DefiningSet& t) {
  return {{"n", t.n},
          {"q", t.q},
          {"cosetReps", t.coset_reps},
          {"elements", t.elements},
          {"size", t.size()}};
}

ordered_json to_json(const Decomposition& d) {
  ordered_json wit = ordered_json::array();
  for (const DecompositionWitness& w : d.witnesses)
    wit.push_back({{"kind", w.kind == CosetClass::SkewSymmetric
                                ? "skewSymmetric"
                                : "skewAsymmetricPair"},
                   {"rep", w.rep},
                   {"partnerRep", w.partner_rep}});
  return {{"tss", to_json(d.tss)}, {"tsas", to_json(d.tsas)},
          {"witnesses", wit}};
}

ordered_json to_json(const EbitReport& e) {
  return {{"gramRank", e.gram_rank}, {"tssSize", e.tss_size},
          {"agree", e.agree}};
}

ordered_json to_json(const MinorVerdict& v) {
  ordered_json j;
  switch (v.outcome) {
    case MinorOutcome::Mds: j["verdict"] = "mds"; break;
    case MinorOutcome::NotMds: j["verdict"] = "notMds"; break;
    case MinorOutcome::Skipped: j["verdict"] = "skipped"; break;
  }
  if (v.outcome == MinorOutcome::NotMds) j["witness"] = v.witness;
  j["cost"] = v.cost;
  return j;
}

ordered_json to_json(const EaqmdsRecord& r) {
  ordered_json j;
  j["q"] = r.q;
  j["n"] = r.n;
  j["k"] = r.k;
  j["d"] = r.d;
  j["c"] = r.c;
  j["saturation"] = saturation_name(r.saturation);
  j["mdsVerified"] = mds_verified_json(r.minor);
  j["ebits"] = to_json(r.ebits);
  j["minor"] = to_json(r.minor);
  return j;
}

ordered_json to_json(const DiscrepancyReport& r) {
  return {{"kind", r.kind},
          {"instance", r.instance},
          {"published", r.published},
          {"computed", r.computed},
          {"witness", r.witness}};
}

ordered_json to_json(const ClaimCheck& c) {
  return {{"source", c.source},
          {"instance", c.instance},
          {"claim", c.claim},
          {"computed", c.computed},
          {"confirmed", c.confirmed}};
}

ordered_json to_json(const FamilyParams& p) {
  ordered_json j;
  j["family"] = family_tag_name(p.family);
  j["l"] = p.l;
  j["m"] = p.m;
  j["a"] = p.a;
  j["q"] = p.q;
  j["n"] = p.n;
  j["s"] = p.s;
  if (p.family == FamilyTag::F2) {
    j["t"] = p.t;
    j["residue"] = p.residue;
  }
  return j;
}

ordered_json to_json(const RangeClaim& r) {
  return {{"source", r.source},
          {"dMin", r.d_min},
          {"dMax", r.d_max},
          {"kMin", r.k_min},
          {"kMax", r.k_max}};
}

ordered_json to_json(const CProfileEntry& e) {
  ordered_json j;
  j["k"] = e.k;
  j["tssSize"] = e.tss_size;
  if (e.gram_rank >= 0) j["gramRank"] = e.gram_rank;
  return j;
}

ordered_json to_json(const PredictedTss& p) {
  ordered_json j;
  j["integral"] = p.integral;
  if (!p.integral) {
    j["note"] = p.note;
    return j;
  }
  j["indices"] = p.indices;
  ordered_json cosets = ordered_json::array();
  for (const CyclotomicCoset& c : p.cosets) cosets.push_back(c.elements);
  j["cosets"] = cosets;
  return j;
}

ordered_json to_json(const FamilyResult& r) {
  ordered_json j;
  j["params"] = to_json(r.params);
  j["computedRange"] = to_json(r.computed_range);
  ordered_json tss = ordered_json::array();
  for (const CyclotomicCoset& c : r.computed_tss) tss.push_back(c.elements);
  j["computedTss"] = tss;
  j["predictedTss"] = to_json(r.predicted);
  ordered_json prof = ordered_json::array();
  for (const CProfileEntry& e : r.profile) prof.push_back(to_json(e));
  j["profile"] = prof;
  ordered_json recs = ordered_json::array();
  for (const EaqmdsRecord& rec : r.records) recs.push_back(to_json(rec));
  j["records"] = recs;
  ordered_json claims = ordered_json::array();
  for (const ClaimCheck& c : r.claims) claims.push_back(to_json(c));
  j["claims"] = claims;
  ordered_json reps = ordered_json::array();
  for (const DiscrepancyReport& rep : r.reports) reps.push_back(to_json(rep));
  j["reports"] = reps;
  return j;
}

ordered_json to_json(const SweepResult& r) {
  ordered_json j;
  j["family"] = family_tag_name(r.family);
  ordered_json inst = ordered_json::array();
  for (const FamilyResult& f : r.instances) inst.push_back(to_json(f));
  j["instances"] = inst;
  ordered_json skips = ordered_json::array();
  for (const SweepSkip& s : r.skips)
    skips.push_back({{"l", s.l}, {"m", s.m}, {"reason", s.reason}});
  j["skips"] = skips;
  return j;
}

ordered_json to_json(const TableCell& c) {
  return {{"printed", c.printed}, {"computed", c.computed},
          {"match", c.match}};
}

ordered_json to_json(const TableRowResult& r) {
  ordered_json j;
  j["l"] = r.l;
  j["m"] = r.m;
  j["q"] = r.q;
  j["cells"] = {{"n", to_json(r.n)},
                {"kOffset", to_json(r.k_offset)},
                {"subscript", to_json(r.subscript)},
                {"dRange", to_json(r.d_range)}};
  return j;
}

ordered_json to_json(const TableResult& r) {
  ordered_json j;
  j["which"] = r.which;
  ordered_json rows = ordered_json::array();
  for (const TableRowResult& row : r.rows) rows.push_back(to_json(row));
  j["rows"] = rows;
  ordered_json claims = ordered_json::array();
  for (const ClaimCheck& c : r.claims) claims.push_back(to_json(c));
  j["claims"] = claims;
  ordered_json reps = ordered_json::array();
  for (const DiscrepancyReport& rep : r.reports) reps.push_back(to_json(rep));
  j["reports"] = reps;
  return j;
}

ordered_json to_json(const CyclicCodeSpec& s) {
  ordered_json j;
  j["n"] = s.n;
  j["q"] = s.q;
  j["definingSet"] = to_json(s.T);
  j["generator"] = s.g.coeffs;
  j["dimension"] = s.dimension;
  j["delta"] = s.delta;
  return j;
}

std::string records_csv(const std::vector<EaqmdsRecord>& records) {
  std::ostringstream os;
  os << "q,n,k,d,c,saturation,mdsVerified\n";
  for (const EaqmdsRecord& r : records) {
    const ordered_json mv = mds_verified_json(r.minor);
    os << r.q << "," << r.n << "," << r.k << "," << r.d << "," << r.c << ","
       << saturation_name(r.saturation) << ","
       << (mv.is_string() ? mv.get<std::string>()
                          : (mv.get<bool>() ? "true" : "false"))
       << "\n";
  }
  return os.str();
}

}  // namespace eaqmds
