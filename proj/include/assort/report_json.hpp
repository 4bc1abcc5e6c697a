#pragma once

#include "assort/axioms.hpp"
#include "assort/matrix.hpp"
#include "assort/rational.hpp"
#include "assort/search.hpp"

#include <json.hpp>

namespace assort {

// Insertion-ordered JSON keeps reports byte-stable across runs.
using Json = nlohmann::ordered_json;

// Rationals serialize as lowest-terms "p/q" strings so exactness survives
// the trip through JSON; decimal renderings are advisory extras.
Json to_json(const Rational& value);
Json to_json(const MatchingMatrix& m);
Json to_json(const AxiomReport& report);
Json to_json(const AxiomTally& tally);
Json to_json(const SuiteReport& report);
Json to_json(const SampleConfig& config);
Json to_json(const CounterexampleCertificate& certificate);
Json to_json(const RecoveredParams& params);
Json to_json(const CharacterizationReport& report);
Json to_json(const AffineReplay& replay);
Json to_json(const ReproReport& report);

} // namespace assort
