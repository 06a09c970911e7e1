#pragma once

/**
 * @file json_io.hpp
 * @brief Serialization of every result type to a stable JSON layout, plus
 *        the flat CSV record format.
 *
 * Field order is fixed (ordered maps throughout) so identical runs emit
 * byte-identical output.
 */

#include <string>

#include "json.hpp"

#include "eaqmds/cyclic.hpp"
#include "eaqmds/families.hpp"

namespace eaqmds {

inline constexpr const char* kVersion = "0.1.0";

using nlohmann::ordered_json;

std::string saturation_name(Saturation s);
/// true | false | "skipped".
ordered_json mds_verified_json(const MinorVerdict& v);

ordered_json to_json(const CyclotomicCoset& c);
ordered_json to_json(const DefiningSet& t);
ordered_json to_json(const Decomposition& d);
ordered_json to_json(const EbitReport& e);
ordered_json to_json(const MinorVerdict& v);
ordered_json to_json(const EaqmdsRecord& r);
ordered_json to_json(const DiscrepancyReport& r);
ordered_json to_json(const ClaimCheck& c);
ordered_json to_json(const FamilyParams& p);
ordered_json to_json(const RangeClaim& r);
ordered_json to_json(const CProfileEntry& e);
ordered_json to_json(const PredictedTss& p);
ordered_json to_json(const FamilyResult& r);
ordered_json to_json(const SweepResult& r);
ordered_json to_json(const TableCell& c);
ordered_json to_json(const TableRowResult& r);
ordered_json to_json(const TableResult& r);
ordered_json to_json(const CyclicCodeSpec& s);

/// Header q,n,k,d,c,saturation,mdsVerified plus one line per record.
std::string records_csv(const std::vector<EaqmdsRecord>& records);

}  // namespace eaqmds
