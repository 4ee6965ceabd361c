// Copyright 2026 The tjoin Authors
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

#include <optional>
#include <string>
#include <vector>

#include "tjoin/join.hpp"

namespace tjoin {

/// A graft with a name for every dense vertex index.
struct GraftDocument {
  std::vector<std::string> names;
  Graft graft;
  std::string comment;
  std::optional<std::uint64_t> seed;

  Vertex vertex(const std::string& name) const;
  VertexSet vertices(const std::vector<std::string>& names) const;
  const std::string& name(Vertex v) const { return names[static_cast<std::size_t>(v)]; }
  /// "ab" when both ends have one-character names, "a-b" otherwise.
  std::string edge_label(EdgeId e) const;
  std::vector<std::string> names_of(VertexSet x) const;
  std::vector<std::string> labels_of(const EdgeSet& f) const;
  /// "{a,c}", or "∅" for the empty set.
  std::string format(VertexSet x) const;
};

/// Parses the structured-text form:
///   {"vertices": [...], "edges": [[u, v], ...], "terminals": [...],
///    "metadata": {"comment": "...", "seed": 7}}
/// Repeated edge pairs become parallel edges. Throws ParseError, ParityError,
/// SizeCap, or DisconnectedError unless `allow_disconnected`.
GraftDocument parse_document(const std::string& text, bool allow_disconnected = false);
GraftDocument load_document(const std::string& path, bool allow_disconnected = false);

std::string to_text(const GraftDocument& doc);
void save_document(const GraftDocument& doc, const std::string& path);

/// Names "a".."z" for up to 26 vertices, "v0".."v{n-1}" beyond.
std::vector<std::string> default_names(int n);

}  // namespace tjoin
