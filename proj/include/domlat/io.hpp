/** @file io.hpp
 *  @brief File formats and rendering: Burmeister .cxt, arrow-annotated
 *  csv cross tables, json with theorem provenance, and DOT diagrams.
 *
 *  The .cxt layout is fixed byte for byte: line 1 "B", line 2 a context
 *  name, line 3 |G|, line 4 |M|, then |G| object-name lines, |M|
 *  attribute-name lines, then |G| rows of 'X'/'.' characters of length
 *  |M|, all terminated by '\n'.  Partition names use the canonical comma
 *  rendering, so every writer here is deterministic.
 */

#ifndef DOMLAT_IO_HPP
#define DOMLAT_IO_HPP

#include <string>
#include <vector>

#include "domlat/closure.hpp"
#include "domlat/context.hpp"
#include "domlat/theorems.hpp"

namespace domlat {

std::string render_cxt(const FormalContext& ctx, const std::string& name);
FormalContext parse_cxt(const std::string& text);

/// Cross table with cells "X", "<->", "<-", "->" or empty; labels are
/// quoted because the canonical partition rendering contains commas.
std::string render_csv(const FormalContext& ctx, const ArrowRelations& arrows,
                       const std::string& corner);

/// Objects, attributes, incidence rows ('X'/'.' strings) and the three
/// arrow lists with their theorem sources and parameters.
std::string render_context_json(int n, const FormalContext& ctx);

/// Sorted `<g> <kind> <m>` lines; with_sources appends the theorem tags.
std::string render_arrow_lines(const FormalContext& ctx, const ArrowRelations& arrows);
std::string render_arrow_lines(const std::vector<PredictedArrow>& arrows);

/// Partition list / count / cover listing for the enumerate command.
std::string render_enumeration(int n, bool with_covers, bool as_json, int lattice_cap);

/// DOT digraph of the full lattice: solid cover edges drawn downward,
/// dashed green open-head edges for up-arrows, dashed red filled-head
/// edges for down-arrows, one dir=both edge per double arrow.  Node shape
/// encodes irreducibility (box join-only, diamond meet-only, Msquare
/// doubly, ellipse neither).
std::string render_dot(int n, bool with_arrows, int lattice_cap);

std::string render_closures(int n, const std::string& generator);

} // namespace domlat

#endif
