#ifndef STELLAR_IO_HPP
#define STELLAR_IO_HPP

#include <string>

#include <json.hpp>

#include "stellar/barycentric.hpp"
#include "stellar/connectivity.hpp"
#include "stellar/core.hpp"
#include "stellar/invariants.hpp"
#include "stellar/moves.hpp"

namespace stellar {

/// Field order in emitted objects is fixed, so equal data serializes to
/// equal bytes.
using Json = nlohmann::ordered_json;

// Facet text format: one facet per line, base-10 labels separated by single
// spaces; lines starting with '#' and blank lines ignored.
Complex parse_complex(const std::string& text);
std::string serialize_complex(const Complex& c);

Complex read_complex_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// Move records: {"kind": ..., "face": [...], "new": v, "removed": v,
// "edge": [a,b]}, absent fields omitted, field order as listed.
Json move_to_json(const Move& m);
Move move_from_json(const Json& j);

// Sequence files: {"complexes": [facet lists], "moves": [move records]}.
Json sequence_to_json(const MoveSequence& seq);
MoveSequence sequence_from_json(const Json& j);

// Plan serialization: list of steps {"edge":[u,w],"new":v,"face":[...]}.
Json plan_to_json(const BacktrackPlan& plan);
BacktrackPlan plan_from_json(const Json& steps, Complex source);

Json face_to_json(const Face& f);
Face face_from_json(const Json& j);
Json facets_to_json(const Complex& c);
Complex facets_from_json(const Json& j);

/// f, h, gamma (when defined), closed forms, flagness and missing faces.
Json invariants_to_json(const Complex& c);

}  // namespace stellar

#endif  // STELLAR_IO_HPP
