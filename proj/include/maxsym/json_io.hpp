#pragma once

#include <nlohmann/json.hpp>

#include "maxsym/spectrum.hpp"

namespace maxsym {

using nlohmann::json;

json to_json(const Permutation& p);
Permutation permutation_from_json(const json& j);

json to_json(const PermGroup& G);  // degree + generators
GroupPtr group_from_json(const json& j, long long cap = kDefaultGroupCap);

json to_json(const NamedGroupSpec& spec);
NamedGroupSpec group_spec_from_json(const json& j);

json to_json(const AbstractSignature& sig);
AbstractSignature signature_from_json(const json& j);

json to_json(const Fingerprint& fp);
json to_json(const CensusResult& res);

json to_json(const EpiWitness& w);

json to_json(const RealizedGraphOfGroups& spec);
RealizedGraphOfGroups realized_from_json(const json& j, long long cap = kDefaultGroupCap);

json to_json(const GenusReport& report);
json to_json(const SpectrumEntry& entry);
json to_json(const BoundSet& bounds);
json to_json(const AmalgamRecord& record);
json to_json(const WitnessFamilyResult& result);

std::string spectrum_csv(const std::vector<SpectrumEntry>& entries);

}  // namespace maxsym
