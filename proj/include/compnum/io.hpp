// Copyright 2026 The compnum Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "compnum/graph.hpp"
#include "json.hpp"

namespace compnum {

using Json = nlohmann::ordered_json;

/// Malformed or schema-violating input document.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace io {

inline Json to_json(const Vertex& v) {
  if (v.is_integer()) return Json(v.integer());
  return Json(v.name());
}

inline Vertex vertex_from_json(const Json& j) {
  if (j.is_number_integer()) return Vertex(j.get<std::int64_t>());
  if (j.is_string()) return Vertex(j.get<std::string>());
  throw ParseError("vertex identifier must be an integer or a string, got " + j.dump());
}

template <typename Range>
Json vertex_array(const Range& vertices) {
  Json out = Json::array();
  for (const auto& v : vertices) out.push_back(to_json(v));
  return out;
}

inline std::vector<Vertex> vertices_from_json(const Json& j, std::string_view what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<Vertex> out;
  for (const auto& item : j) out.push_back(vertex_from_json(item));
  return out;
}

inline std::vector<std::pair<Vertex, Vertex>> pairs_from_json(const Json& j, std::string_view what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2) {
      throw ParseError(std::string(what) + " entries must be 2-element arrays, got " + item.dump());
    }
    out.emplace_back(vertex_from_json(item[0]), vertex_from_json(item[1]));
  }
  return out;
}

/// Parses text, reporting syntax errors with line and column.
inline Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("JSON syntax error at line " + std::to_string(line) + ", column " +
                     std::to_string(col) + ": " + e.what());
  }
}

inline const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

inline Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back(Json::array({to_json(a), to_json(b)}));
  Json out;
  out["vertices"] = vertex_array(g.vertices());
  out["edges"] = std::move(edges);
  return out;
}

inline Json to_json(const Digraph& d) {
  Json arcs = Json::array();
  for (const auto& [a, b] : d.arcs()) arcs.push_back(Json::array({to_json(a), to_json(b)}));
  Json out;
  out["vertices"] = vertex_array(d.vertices());
  out["arcs"] = std::move(arcs);
  return out;
}

/// Schema errors surface as ParseError, simplicity violations as GraphError.
inline Graph graph_from_json(const Json& j) {
  auto vertices = vertices_from_json(require(j, "vertices"), "vertices");
  auto edges = pairs_from_json(require(j, "edges"), "edges");
  return Graph::build(std::move(vertices), edges);
}

inline Digraph digraph_from_json(const Json& j) {
  auto vertices = vertices_from_json(require(j, "vertices"), "vertices");
  auto arcs = pairs_from_json(require(j, "arcs"), "arcs");
  return Digraph::build(std::move(vertices), arcs);
}

inline Graph parse_graph(std::string_view text) { return graph_from_json(parse_json_text(text)); }
inline Digraph parse_digraph(std::string_view text) { return digraph_from_json(parse_json_text(text)); }

inline std::string dot_id(const Vertex& v) {
  std::string out = "\"";
  for (char c : v.str()) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

inline std::string to_dot(const Graph& g, std::string_view name = "G") {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (const auto& v : g.vertices()) os << "  " << dot_id(v) << ";\n";
  for (const auto& [a, b] : g.edges()) os << "  " << dot_id(a) << " -- " << dot_id(b) << ";\n";
  os << "}\n";
  return os.str();
}

inline std::string to_dot(const Digraph& d, std::string_view name = "D") {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (const auto& v : d.vertices()) os << "  " << dot_id(v) << ";\n";
  for (const auto& [a, b] : d.arcs()) os << "  " << dot_id(a) << " -> " << dot_id(b) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace io
}  // namespace compnum
