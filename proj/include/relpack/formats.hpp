#pragma once

#include <string>
#include <string_view>

#include "relpack/graph.hpp"
#include "relpack/rational.hpp"

namespace relpack {

// graph6, bit-exact per the nauty format definition. Accepts an optional
// ">>graph6<<" header and at most one trailing newline; everything else is
// rejected with a ParseError carrying the byte offset.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

// sparse6 is parse-only (ingestion convenience). Duplicate edges collapse;
// pairs decoding to loops are ignored, since the standard 1-padding can
// produce them on power-of-two vertex counts.
Graph parse_sparse6(std::string_view text);

// Fixture grammar: C<n> | K<n> | P<n> | E<n> | petersen.
Graph parse_shorthand(std::string_view text);

// First line "n <count>", then one "u v" line per edge, 0-based.
Graph parse_edgelist(std::string_view text);

// Detection order: shorthand grammar, sparse6 (':' or sparse6 header),
// edge-list ("n " prefix), otherwise graph6.
Graph parse_graph_text(std::string_view text);

// Turns literal backslash-n sequences into newlines, for edge lists passed
// as single shell arguments.
std::string unescape_cli_text(std::string_view text);

}  // namespace relpack
