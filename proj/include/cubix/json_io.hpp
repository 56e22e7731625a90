#pragma once

#include <string>
#include <variant>

#include "json.hpp"

#include "cubix/classical.hpp"
#include "cubix/structure.hpp"

namespace cubix {

inline constexpr int format_version = 1;

/// On-disk structure plus its free-form meta block. The meta block is
/// preserved verbatim on a round trip; its "validated" flag is trusted when
/// loading, so checkers can be skipped for documents we wrote ourselves.
struct StructureDocument {
  std::variant<SingleSetStructure, ClassicalStructure> value;
  nlohmann::json meta = nlohmann::json::object();

  bool is_single_set() const {
    return std::holds_alternative<SingleSetStructure>(value);
  }
  SingleSetStructure& single_set();
  const SingleSetStructure& single_set() const;
  ClassicalStructure& classical();
  const ClassicalStructure& classical() const;
};

/// Document layout (format_version 1): "kind" is "single-set" or
/// "classical"; "cells" lists names (flat, or one list per level); total
/// tables are objects keyed "i,sign" / "i" (or "k,i,sign" / "k,i") whose
/// entry maps send a source cell index to a target index; partial
/// composition tables list only defined pairs as "x|y" keys. Malformed input
/// raises ParseError naming the offending key; a classical document with a
/// non-injective degeneracy is rejected outright.
StructureDocument from_json(const nlohmann::json& j);
nlohmann::json to_json(const StructureDocument& doc);

StructureDocument parse_document(const std::string& text,
                                 const std::string& origin = "<string>");
StructureDocument load_document(const std::string& path);

/// Two-space indented dump with a trailing newline; key order is canonical,
/// so equal documents serialize byte-for-byte equal.
std::string dump_document(const StructureDocument& doc);
void save_document(const StructureDocument& doc, const std::string& path);

}  // namespace cubix
