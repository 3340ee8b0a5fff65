#pragma once

#include <nlohmann/json.hpp>

#include "addbase/basis.hpp"
#include "addbase/essentia.hpp"
#include "addbase/intset.hpp"
#include "addbase/oracle.hpp"

namespace addbase {

// JSON encodings with stable field names. Objects use nlohmann's sorted
// keys, so dumps are byte-identical for equal values.

void to_json(nlohmann::json& j, const PeriodicSet& s);
void to_json(nlohmann::json& j, const BasisReport& r);
void to_json(nlohmann::json& j, const EssentialSubset& p);
void to_json(nlohmann::json& j, const EssentialityVerdict& v);
void to_json(nlohmann::json& j, const CoprimeReport& r);
void to_json(nlohmann::json& j, const ProofTrace& t);
void to_json(nlohmann::json& j, const SumsetWindow& w);
void to_json(nlohmann::json& j, const EmpiricalOrder& e);

/// {"exceptional":[...],"modulus":m,"residues":[...],"threshold":N0},
/// canonicalized. Throws ParseError on missing or mistyped fields.
PeriodicSet set_from_json(const nlohmann::json& j);

}  // namespace addbase
