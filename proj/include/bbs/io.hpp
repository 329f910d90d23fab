#pragma once

// State documents and JSON serialization.
//
//   {"n":5, "mode":"basic", "state":"55432.....542....2"}
//   {"n":4, "mode":"inhom", "sites":[{"capacity":3, "counts":[1,0,2,0]}, ...], "tail_capacity":1}
//
// Plain text input (no leading '{') is read as an ASCII basic path.

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "bbs/separation.hpp"
#include "bbs/verify.hpp"

namespace bbs {

using Json = nlohmann::json;
using AnyPath = std::variant<BasicPath, InhomPath>;

struct StateDocument {
  Alphabet alphabet;
  AnyPath state;
  /// Number of explicit cells in the input, used to pad rendered rows.
  int width = 0;

  bool is_basic() const { return std::holds_alternative<BasicPath>(state); }
};

/// JSON when the first non-blank character is '{', ASCII otherwise.
/// For ASCII input without `n`, the alphabet is the largest letter present (at least 2).
/// An explicit `n` must agree with the document's own "n" field.
StateDocument parse_state_document(std::string_view text, std::optional<int> n = std::nullopt);

StateDocument state_document_from_json(const Json& j);
Json to_json(const StateDocument& doc);

/// A path as it appears inside other JSON: an ASCII string when possible,
/// otherwise a letter array (basic) or a site list (inhomogeneous).
Json path_to_json(const BasicPath& p);
Json path_to_json(const InhomPath& p);

/// {"monochrome": ..., "word": "55432542", "steps": [{"s":0, "state":..., "removed":2}, ...]}
Json to_json(const SeparationRecord<BasicPath>& rec);
Json to_json(const SeparationRecord<InhomPath>& rec);

/// {"relation":..., "domain":N, "result":"pass"|"fail", "counterexample":..., "elapsed_ms":...}
Json to_json(const RelationReport& report);

/// One-line human form of a state: ASCII for basic paths, '|'-rows otherwise.
std::string render_state(const AnyPath& p, int width = 0);

}  // namespace bbs
