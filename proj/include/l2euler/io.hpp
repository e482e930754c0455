/* Presentation files and the structured record stream.
 *
 * A presentation file is a JSON document:
 *
 *   {
 *     "name": "trefoil",
 *     "generators": ["x", "y"],
 *     "relators": ["x y x y^-1 x^-1 y^-1"],
 *     "quotient": {"kind": "abelian", "rank": 1, "images": [[1], [1]]},
 *     "phi": [1],
 *     "expected_norm": 1,
 *     "genus": 1
 *   }
 *
 * "quotient" may also be the string "abelianization" (free part computed
 * from the relator exponent matrix), or a polyZ quotient
 *   {"kind": "polyZ", "k": 2, "twist": [[1,1],[1,2]],
 *    "images": [{"v": [1,0], "m": 0}, ...]}
 * with "phi": {"c": 1}.  Closed inputs add "dual_generators", one word per
 * relator.
 *
 * Structured output is one JSON object per line with a versioned "schema"
 * field; emission is canonical (sorted keys), so records round-trip
 * byte-identically.
 */
#ifndef L2EULER_IO_HPP
#define L2EULER_IO_HPP

#include "l2euler/euler.hpp"

#include <optional>
#include <string>

namespace l2euler {

struct PresentationFile {
    std::string name;
    Presentation presentation;
    QuotientSpec quotient;
    PhiSpec phi;
    std::optional<std::vector<FreeWord>> dual_generators;
    std::optional<long long> expected_norm;
    std::optional<long long> genus;

    bool closed() const { return dual_generators.has_value(); }
};

PresentationFile parse_presentation_file(const std::string& json_text);
PresentationFile load_presentation_file(const std::string& path);

struct RunRecord {
    std::string input;
    std::string command;
    bool ok = false;
    std::optional<EulerResult> result;
    std::string error_kind;     // "input" | "non_acyclic" | "size_guard"
    std::string error_message;
    double wall_ms = 0.0;
    std::string extra;          // command-specific payload, serialized JSON
};

std::string record_to_json(const RunRecord& r);

// Parses a record line and re-emits it canonically (round-trip identity).
std::string reemit_record(const std::string& line);

std::string library_version();

}  // namespace l2euler

#endif
