#pragma once

// Text formats: group expressions and morphism documents.
//
// Group grammar (whitespace-insensitive):
//   expr  := term ('+' term)* | '0'
//   term  := block ('^' INT)?
//   block := 'R' | 'Z' | 'T' | 'Z/' INT
//
// Morphism document (format-version "1"):
//   {
//     "format-version": "1",
//     "domain": "Z + R",
//     "codomain": "Z + R",
//     "entries": [
//       [{"kind": "int", "value": "-1"}, {"kind": "zero", "value": "0"}],
//       [{"kind": "real", "value": "3/2"}, {"kind": "real", "value": "2"}]
//     ]
//   }
// Entry kinds are zero, real, int, circle and mod; mod entries also carry
// "modulus". Rows follow the codomain blocks, columns the domain blocks.

#include "lca/group.hpp"

#include <string>
#include <string_view>

namespace lca {

/// Throws ParseError (SyntaxError with offset, or ValueError for Z/0).
GroupExpr parse_group(std::string_view text);

/// Throws ParseError for malformed JSON or fields, Error(TagMismatch) when an
/// entry's kind or modulus disagrees with the hom table.
HomMatrix parse_morphism_document(std::string_view text);

/// Canonical document text, newline-terminated.
std::string serialize_morphism(const HomMatrix &m);

/// Human-readable matrix with aligned columns, newline-terminated.
std::string pretty_morphism(const HomMatrix &m);

/// Hom-group descriptor of every slot, rows indexed by codomain blocks.
std::string hom_grid(const GroupExpr &domain, const GroupExpr &codomain);

std::string_view entry_kind_name(HomKind kind);

} // namespace lca
