#pragma once

// JSON views of results; every report carries the field metadata.

#include <json.hpp>

#include "verify.hpp"

namespace syl {

using json = nlohmann::json;

json field_json(const Field& f, bool with_ext);
json family_json(const FamilyParams& fam);
json presentation_json(const Presentation& pres);
json ed_json(const EdResult& e);
json certificate_json(const Certificate& c);
json verify_json(const VerifyReport& v);
json center_json(const Presentation& pres);
json orbits_json(const Presentation& pres);
json stabilizer_json(const Presentation& pres, const Vec& b);

}  // namespace syl
