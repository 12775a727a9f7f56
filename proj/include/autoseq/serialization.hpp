#pragma once

#include <json.hpp>
#include <string>

#include "autoseq/character.hpp"
#include "autoseq/classifier.hpp"
#include "autoseq/dfao.hpp"
#include "autoseq/sequence_spec.hpp"

namespace autoseq {

using Json = nlohmann::json;

/// 0, or {"scale": "a/b", "phase": "c/d"}. Parsing also accepts integers.
Json value_to_json(const Value& v);
Value value_from_json(const Json& j);

/// {"base", "initial", "states": [{"id", "output", "delta"}]}.
Json dfao_to_json(const Dfao& d);
Dfao dfao_from_json(const Json& j);

/// {"modulus", "phases": {"residue": "c/d"}}.
Json character_to_json(const DirichletCharacter& chi);
DirichletCharacter character_from_json(const Json& j);

/// {"p", "f1": {"preperiod", "period"}, "f2": {"kind", ...}}. The kinds
/// "periodic" (modulus, character_index), "periodic_table" (period, values)
/// and "finite" (prime_powers {"q^e": value}) are read; tables and finite
/// supports are written.
Json spec_to_json(const TheoremFormSpec& spec);
TheoremFormSpec spec_from_json(const Json& j);

Json mult_spec_to_json(const MultSpec& f2);
Json eventually_periodic_to_json(const EventuallyPeriodicSeq& f1);
Json dense_to_json(const DenseData& dense);

/// Reads a whole file; throws ParseError.
Json read_json_file(const std::string& path);

/// Graphviz rendering; edges between the same pair of states are merged.
std::string dfao_to_dot(const Dfao& d, const std::string& name = "dfao");

}  // namespace autoseq
