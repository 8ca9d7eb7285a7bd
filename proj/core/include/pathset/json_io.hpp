#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "pathset/presentation.hpp"

namespace pathset {

struct ParsedPresentation {
    Presentation presentation;
    std::vector<std::string> warnings;
};

/**
 * Presentation JSON:
 *   {"p":3,"start":0,"vertices":[0,1],"edges":[[0,0,0],[0,0,1]],
 *    "alphabet":null,"digit_map":null,"names":{"0":"v0"}}
 * `alphabet` is null or an integer array, `digit_map` null or an object
 * {"<symbol>": digit}, `names` an object {"<vertex>": string}; the last
 * three may be omitted. Unknown keys are rejected. Parallel duplicate edges
 * are dropped with a warning.
 */
ParsedPresentation presentation_from_json(const nlohmann::json& j);
ParsedPresentation presentation_from_string(std::string_view text);

/// Keys in the fixed order p, start, vertices, edges, alphabet, digit_map, names.
nlohmann::ordered_json presentation_to_json(const Presentation& pres);
/// Compact single-line form of presentation_to_json.
std::string presentation_to_string(const Presentation& pres);

}  // namespace pathset
