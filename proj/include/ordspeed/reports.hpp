#ifndef ORDSPEED_REPORTS_HPP
#define ORDSPEED_REPORTS_HPP

#include <json.hpp>

#include "ordspeed/enumeration.hpp"
#include "ordspeed/jfamily.hpp"
#include "ordspeed/speeds.hpp"
#include "ordspeed/structures.hpp"

namespace ordspeed {

using Json = nlohmann::json;

// Counts serialize as decimal strings: JSON numbers lose precision past 2^53.
Json to_json(const BigInt& v);
Json to_json(const OrderedGraph& g);
Json to_json(const LoopedOrderedGraph& g);
Json to_json(const BlockPartition& p);
Json to_json(const IrreducibleDecomposition& d);
Json to_json(const StructureWitness& w);
Json to_json(const Certificate& c);
Json to_json(const SpeedSequence& seq);
Json to_json(const RegimeClassification& r);
Json to_json(const GrowthReport& r);
Json to_json(const JClass& c);
Json to_json(const WitnessSetReport& r);

// Speed-sequence rows from JSON (array of {"n","count","exact"} rows, or an
// object with a "rows" field) or CSV ("n,count[,exact]", optional header).
SpeedSequence parse_speed_sequence(const std::string& text);

}  // namespace ordspeed

#endif
