#pragma once

#include "singequiv/claims.hpp"
#include "singequiv/dsg.hpp"
#include "singequiv/extension.hpp"
#include "singequiv/harness.hpp"
#include "singequiv/quiver.hpp"

#include <json.hpp>

#include <string>

namespace singequiv::report {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "singequiv-report/1";

Json to_json(const Bounded& b);
Json to_json(const Multiplicity& m);
Json to_json(const std::vector<Multiplicity>& ms);
Json to_json(const ValidationReport& r);
Json to_json(const HomologicalReport& h);
Json to_json(const HereditaryCertificate& c, const Algebra& a);
Json to_json(const TheoremReport& t, const Algebra& a);
Json to_json(const PeelCertificate& c);
Json to_json(const DsgHomReport& d);
Json to_json(const ShadowReport& s);
Json to_json(const ExampleReport& e);
Json to_json(const HarnessReport& h);
Json algebra_summary(const Algebra& a);

// 64-bit FNV-1a of the input text, hex.
std::string digest(const std::string& text);

}  // namespace singequiv::report
