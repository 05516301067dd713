#pragma once

#include <qcontig/verify.hpp>

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace qcontig {

using json = nlohmann::ordered_json;

json to_json(const cplx& z);  // [re, im]
json to_json(const ParamSet<cplx>& p);
json to_json(const PrecisionPolicy& p);
json to_json(const Relation& r);
json to_json(const VerificationReport& r);
json to_json(const LimitReport& r);

// {"seed", "policy", "relations": [...], "summary"}; no timing fields, so equal
// inputs give byte-identical output.
json campaign_json(const std::vector<VerificationReport>& reports, const CampaignOptions& opt);
// relation_id,samples,max_residual,pass
std::string campaign_csv(const std::vector<VerificationReport>& reports);

json catalog_json(const std::vector<const Relation*>& relations);

// Writes to a sibling temporary file, then renames it over `path`.
void write_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace qcontig
