#pragma once

#include "json.hpp"

#include "lss/classifier.hpp"
#include "lss/groebner.hpp"
#include "lss/ideal_forge.hpp"
#include "lss/posmatch.hpp"
#include "lss/witness.hpp"

namespace lss {

/// {"layout": "block", "symbol": "y", "rows": n, "cols": d, "auxiliary": [...]}
/// for matrix layouts; plain spaces list "names" instead of rows and cols.
nlohmann::json to_json(const VariableSpace& space);
SpacePtr space_from_json(const nlohmann::json& j);

/// {"parts": [[edge, ...], ...], "certificates": [{"vertex": "num/den", ...}, ...],
///  "exact": bool, "lower": int, "upper": int}. Edge indices refer to the
/// canonical edge order; certificate keys are 1-based vertex labels.
nlohmann::json to_json(const PmdResult& r);
/// Throws ParseError on malformed input. n is the vertex count.
PmdResult pmd_result_from_json(const nlohmann::json& j, int n);

/// {"property": "ci", "d": 2, "verdict": "TRUE",
///  "justifications": [{"rule": ..., "cite": ..., "evidence": ...}]}
nlohmann::json to_json(const Classification& c);
Classification classification_from_json(const nlohmann::json& j);

nlohmann::json to_json(const AsymBounds& b);

/// {"provenance": ..., "space": {...}, "generators": [{"text": ..., "terms": [...]}]}
nlohmann::json to_json(const GeneratorSet& g);
GeneratorSet generator_set_from_json(const nlohmann::json& j);

nlohmann::json to_json(const GroebnerBasis& gb);

/// Witness polynomial, verdict, both colon ideals, separating element and timing.
nlohmann::json to_json(const WitnessReport& r);

}  // namespace lss
