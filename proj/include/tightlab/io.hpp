#ifndef TIGHTLAB_IO_HPP
#define TIGHTLAB_IO_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "tightlab/hypergraph.hpp"
#include "tightlab/tight.hpp"

namespace tl {

using Json = nlohmann::ordered_json;

Json set_to_json(VertexSet s);
VertexSet set_from_json(const Json& j, int n);
Json rational_to_json(const Rational& r);
/// Accepts "p/q" strings and plain integers.
Rational rational_from_json(const Json& j);

/// {"n": n, "k": k, "edges": [[...], ...]} with edges in canonical order.
Json hypergraph_to_json(const Hypergraph& h);
BuildResult hypergraph_from_json(const Json& j);

/// First line "n k", then one edge per line. Blank lines and lines starting
/// with '#' are skipped.
std::string hypergraph_to_text(const Hypergraph& h);
BuildResult hypergraph_from_text(std::string_view text);

/// Detects JSON by a leading '{', otherwise reads the text format.
BuildResult parse_hypergraph(std::string_view text);
BuildResult load_hypergraph(const std::string& path);
void save_hypergraph(const std::string& path, const Hypergraph& h);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

/// {"closed": bool, "vertices": [...]}
Json walk_to_json(const TightWalk& w);
/// Reads the fields only; run validate_walk against a host afterwards.
TightWalk walk_from_json(const Json& j);

}  // namespace tl

#endif
