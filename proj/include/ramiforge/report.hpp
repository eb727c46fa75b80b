#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "ramiforge/parametricity.hpp"
#include "ramiforge/prescriber.hpp"
#include "ramiforge/sweep.hpp"

namespace ramiforge {

std::string fnv1a64(const std::string& data);

nlohmann::json envelope(const std::string& command,
                        const std::vector<std::pair<std::string, std::string>>& inputs,
                        uint64_t seed, nlohmann::json result,
                        const std::vector<std::string>& caveats);

nlohmann::json to_json(const PrimeVerdict& v);
nlohmann::json to_json(const Recipe& r);
nlohmann::json to_json(const InertiaPrediction& p);
nlohmann::json to_json(const WitnessReport& w);
nlohmann::json to_json(const DivisorReport& d);
nlohmann::json to_json(const CertifyReport& c);
nlohmann::json to_json(const VerifyReport& v);
nlohmann::json to_json(const ClosureReport& c);
nlohmann::json to_json(const HypothesisVerdict& v);
nlohmann::json to_json(const CorollaryVerdict& v);
nlohmann::json to_json(const AgreementReport& a);

/* Inverse of to_json(Recipe); also accepts a full report envelope whose
 * result field holds the recipe. */
Recipe recipe_from_json(const nlohmann::json& j);

std::string tsv_row(const std::vector<std::string>& cells);

}  // namespace ramiforge
