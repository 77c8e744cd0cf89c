#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "starcluster/hypergraph.hpp"

namespace starcluster {

enum class FileFormat { Text, Json };

/**
 * Text format: one edge per line as whitespace-separated vertex ids; '#'
 * starts a comment; blank lines are ignored; an optional header line
 * "vertices: <id list>" declares vertices beyond those appearing in edges
 * (isolated ones). Both reader and writer round-trip exactly.
 */
Hypergraph read_text(std::istream& in);
Hypergraph read_text(const std::string& content);
void write_text(std::ostream& out, const Hypergraph& h);
std::string to_text(const Hypergraph& h);

/// JSON format: {"vertices": [...], "edges": [[...], ...]}.
Hypergraph hypergraph_from_json(const nlohmann::json& j);
nlohmann::json hypergraph_to_json(const Hypergraph& h);

/// Reads a file in the given format. Throws ParseError on malformed content
/// or unreadable paths.
Hypergraph read_hypergraph_file(const std::string& path, FileFormat format);
void write_hypergraph_file(const std::string& path, const Hypergraph& h, FileFormat format);

}  // namespace starcluster
