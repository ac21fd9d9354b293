#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gdifs/classify.hpp"
#include "gdifs/graph.hpp"
#include "json.hpp"

namespace gdifs {

// JSON spec:
//   {"vertices": ["u", "v"],
//    "edges": [{"id": "e1", "from": "u", "to": "u", "ratio": "1/4",
//               "offset": "0", "reflect": false}, ...],
//    "metadata": {"name": ..., "description": ...}}
// An edge points from i(e) to t(e); its map places a copy of F_{to} inside
// F_{from}. Rationals are strings "p" or "p/q".
struct SpecDocument {
  std::vector<std::string> vertices;
  std::vector<EdgeSpec> edges;
  std::optional<std::string> name;
  std::optional<std::string> description;
};

// Throws SpecError on malformed JSON or fields.
SpecDocument parse_spec_document(std::string_view text);
// Builds and validates: SpecError, StructuralError or ValidationError.
GraphIFS load_spec(std::string_view text);
GraphIFS load_spec_file(const std::string& path);

// Canonical text: sorted keys, canonical rationals, two-space indent.
std::string dump_spec(const GraphIFS& ifs, const std::optional<std::string>& name = std::nullopt,
                      const std::optional<std::string>& description = std::nullopt);

nlohmann::json certificate_to_json(const GraphIFS& ifs, const Certificate& cert);
// Names in `j` are resolved against `ifs`; throws SpecError on bad fields.
Certificate certificate_from_json(const GraphIFS& ifs, const nlohmann::json& j);

}  // namespace gdifs
