#include "starcluster/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace starcluster {

namespace {

Vertex parse_vertex(const std::string& token, int line_no) {
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(token, &used);
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line_no) + ": bad vertex id '" + token + "'");
  }
  if (used != token.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": bad vertex id '" + token + "'");
  }
  if (value < 0 || value > 1'000'000'000L) {
    throw ParseError("line " + std::to_string(line_no) + ": vertex id out of range '" + token + "'");
  }
  return static_cast<Vertex>(value);
}

}  // namespace

Hypergraph read_text(std::istream& in) {
  std::vector<Vertex> vertices;
  EdgeList edges;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first)) continue;  // blank or comment-only line

    bool header = false;
    if (first == "vertices:") {
      header = true;
    } else if (first == "vertices") {
      std::string colon;
      if (tokens >> colon && colon == ":") {
        header = true;
      } else {
        throw ParseError("line " + std::to_string(line_no) + ": bad header");
      }
    }

    std::vector<Vertex> ids;
    if (!header) ids.push_back(parse_vertex(first, line_no));
    std::string token;
    while (tokens >> token) ids.push_back(parse_vertex(token, line_no));

    if (header) {
      vertices.insert(vertices.end(), ids.begin(), ids.end());
    } else {
      edges.push_back(std::move(ids));
    }
  }
  try {
    return Hypergraph(std::move(vertices), std::move(edges));
  } catch (const Error& e) {
    throw ParseError(std::string("invalid hypergraph: ") + e.what());
  }
}

Hypergraph read_text(const std::string& content) {
  std::istringstream in(content);
  return read_text(in);
}

void write_text(std::ostream& out, const Hypergraph& h) {
  out << "vertices:";
  for (Vertex v : h.vertices()) out << ' ' << v;
  out << '\n';
  for (const Edge& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << '\n';
  }
}

std::string to_text(const Hypergraph& h) {
  std::ostringstream out;
  write_text(out, h);
  return out.str();
}

Hypergraph hypergraph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges")) {
    throw ParseError("expected an object with 'vertices' and 'edges'");
  }
  try {
    auto vertices = j.at("vertices").get<std::vector<Vertex>>();
    auto edges = j.at("edges").get<EdgeList>();
    return Hypergraph(std::move(vertices), std::move(edges));
  } catch (const Error& e) {
    throw ParseError(std::string("invalid hypergraph: ") + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad hypergraph JSON: ") + e.what());
  }
}

nlohmann::json hypergraph_to_json(const Hypergraph& h) {
  return nlohmann::json{{"vertices", h.vertices()}, {"edges", h.edges()}};
}

Hypergraph read_hypergraph_file(const std::string& path, FileFormat format) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  if (format == FileFormat::Text) return read_text(in);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("bad JSON in '" + path + "': " + e.what());
  }
  return hypergraph_from_json(j);
}

void write_hypergraph_file(const std::string& path, const Hypergraph& h, FileFormat format) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open '" + path + "' for writing");
  if (format == FileFormat::Text) {
    write_text(out, h);
  } else {
    out << hypergraph_to_json(h).dump(2) << '\n';
  }
}

}  // namespace starcluster
