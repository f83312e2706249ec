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

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <utility>
#include <variant>

namespace compnum {

/// Opaque vertex identifier: a small integer or a string name.
///
/// Integers order before strings; integers compare numerically and strings
/// lexicographically. Every algorithm in the library breaks ties by this
/// order, which makes enumeration output and certificates reproducible.
class Vertex {
 public:
  Vertex(int id) : id_(static_cast<std::int64_t>(id)) {}
  Vertex(std::int64_t id) : id_(id) {}
  Vertex(std::string name) : id_(std::move(name)) {}
  Vertex(const char* name) : id_(std::string(name)) {}

  bool is_integer() const noexcept { return id_.index() == 0; }
  std::int64_t integer() const { return std::get<0>(id_); }
  const std::string& name() const { return std::get<1>(id_); }

  std::string str() const {
    return is_integer() ? std::to_string(integer()) : name();
  }

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
  friend bool operator==(const Vertex&, const Vertex&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Vertex& v) {
    return os << v.str();
  }

 private:
  std::variant<std::int64_t, std::string> id_;
};

/// Undirected edge; normalized so that first < second.
using Edge = std::pair<Vertex, Vertex>;
/// Directed arc (tail, head).
using Arc = std::pair<Vertex, Vertex>;

inline Edge make_edge(Vertex a, Vertex b) {
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

inline std::string to_string(const Edge& e) {
  return e.first.str() + "-" + e.second.str();
}

}  // namespace compnum

template <>
struct std::hash<compnum::Vertex> {
  std::size_t operator()(const compnum::Vertex& v) const noexcept {
    if (v.is_integer()) return std::hash<std::int64_t>{}(v.integer());
    return std::hash<std::string>{}(v.name()) ^ 0x9e3779b97f4a7c15ULL;
  }
};
