#pragma once

#include <json.hpp>

#include "incore/closure.hpp"
#include "incore/core.hpp"
#include "incore/derivation.hpp"
#include "incore/machine_infinity.hpp"
#include "incore/operator_laws.hpp"

namespace incore {

// JSON renderings of the analysis results. Keys are emitted sorted, so the
// documents are byte-stable; shapes are described under schema/.

nlohmann::json to_json(const FormulaSet& s);
nlohmann::json to_json(const Index& i);
nlohmann::json to_json(const std::optional<Index>& i);
nlohmann::json to_json(const DerivationSequence& seq);
nlohmann::json to_json(const KappaResult& k);
nlohmann::json to_json(const CoreVerdict& v);
nlohmann::json to_json(const ClosureTrace& t, const DeductionSystem& sys);
nlohmann::json to_json(const SupportEnumeration& e);
nlohmann::json to_json(const Classification& c);
nlohmann::json to_json(const EquivalenceReport& r);
nlohmann::json to_json(const LawReport& r);
nlohmann::json to_json(const GuardVerdict& g);

const char* termination_name(Termination::Kind k);

}  // namespace incore
