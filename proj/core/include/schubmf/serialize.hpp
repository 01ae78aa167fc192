#pragma once

#include "schubmf/classifier.hpp"
#include "schubmf/lr.hpp"
#include "schubmf/partition.hpp"
#include "schubmf/witness.hpp"

#include <json.hpp>

#include <string>

namespace schubmf {

/// One term per line, `coefficient * nu`, keys in ascending lexicographic
/// order of padded part sequences. Empty string for the zero expansion.
std::string to_text(const Expansion& e);

/// {"frame":[rows,cols],"terms":[{"nu":[...],"coeff":n},...]}
nlohmann::json to_json(const Expansion& e);

/// {"outcome":...,"reason":...,"case":...,"demolished":{...}} with the
/// reason/case fields present only when applicable.
nlohmann::json to_json(const Verdict& v);

/// Grid rows top to bottom, "." for inner cells, entries for skew cells,
/// space separated.
std::string filling_grid(const LrFilling& f);

/// {"shape":{"inner":[...],"outer":[...]},"entries":[[...],...]}
nlohmann::json to_json(const LrFilling& f);

/// {"nu":[...],"fillings":[...],"notes":[...]}
nlohmann::json to_json(const MultiplicityWitness& w);

nlohmann::json to_json(const Partition& p);

} // namespace schubmf
