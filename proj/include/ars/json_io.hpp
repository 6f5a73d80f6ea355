#pragma once

#include <json.hpp>

#include "ars/coherence.hpp"
#include "ars/confluence.hpp"
#include "ars/core.hpp"
#include "ars/decomposition.hpp"
#include "ars/generic_system.hpp"
#include "ars/svk.hpp"

namespace ars {

using Json = nlohmann::json;

// System format: {"vertices": [ids...], "edges": [{"id","src","dst"}...]}.
Json system_to_json(const RewritingSystem& system);
GenericFiniteSystem system_from_json(const Json& j);

// Chain/cycle format: {"start": id, "steps": [{"edge": id, "dir": "fwd"|"bwd"}...]}.
// Loading resolves edge ids against the system and validates the walk.
Json chain_to_json(const Chain& chain);
Chain chain_from_json(const Json& j, const RewritingSystem& system);
Cycle cycle_from_json(const Json& j, const RewritingSystem& system);

Json span_to_json(const Span& span);
Json cospan_to_json(const ExtendedCospan& cospan);

Json report_to_json(const ConfluenceReport& report);
Json trace_to_json(const DecompositionTrace& trace);
Json verdict_to_json(const CoherenceVerdict& verdict);

// Labelling format:
//   {"target": {"kind": "permutation"|"free_group"|"table", ...},
//    "objects": {vertex: object, ...},       // optional for one-object targets
//    "morphisms": {edge: literal, ...}}
// Morphism literals are one-line permutations, signed-generator words, or
// table morphism ids, depending on the target kind.
EdgeLabelling labelling_from_json(const Json& j);

TableGroupoid table_groupoid_from_json(const Json& j);

// Instance format:
//   {"groupoid_b": <table>, "groupoid_c": <table>,
//    "elements": [ids...], "f": {elt: obj}, "g": {elt: obj}}
SvkInstance svk_instance_from_json(const Json& j);

Json parse_json_text(const std::string& text);  // wraps parse errors as ParseError

}  // namespace ars
