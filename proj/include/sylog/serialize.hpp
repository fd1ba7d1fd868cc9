#pragma once
// JSON (de)serialization for proofs and nets.  Reports written by the CLI
// round-trip through these and are replayed by the independent checkers,
// so a verified report certifies the verdict it records.

#include <json.hpp>

#include "sylog/cmll.hpp"
#include "sylog/rll.hpp"
#include "sylog/syll.hpp"

namespace sylog {

nlohmann::json syll_proof_to_json(const SyllProofPtr& p);
SyllProofPtr syll_proof_from_json(const nlohmann::json& j);

nlohmann::json rll_proof_to_json(const RllProofPtr& p);
RllProofPtr rll_proof_from_json(const nlohmann::json& j);

// CMLL formulas are stored structurally (occurrence tags included) so
// translated proofs and their axiom links survive the round trip.
nlohmann::json cmll_formula_to_json(const CmllPtr& f);
CmllPtr cmll_formula_from_json(const nlohmann::json& j);

nlohmann::json cmll_proof_to_json(const CmllProofPtr& p);
CmllProofPtr cmll_proof_from_json(const nlohmann::json& j);

nlohmann::json net_to_json(const ProofNet& net);

}  // namespace sylog
