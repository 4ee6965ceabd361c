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

#include "tjoin/document.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "tjoin/error.hpp"

namespace tjoin {

namespace {

using nlohmann::ordered_json;

std::vector<std::string> string_list(const ordered_json& doc, const char* key) {
  if (!doc.contains(key)) fail(ErrorCode::kParse, std::string("missing '") + key + "'");
  const ordered_json& list = doc.at(key);
  if (!list.is_array()) fail(ErrorCode::kParse, std::string("'") + key + "' must be an array");
  std::vector<std::string> out;
  for (const ordered_json& item : list) {
    if (!item.is_string()) fail(ErrorCode::kParse, std::string("'") + key + "' must hold names");
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

Vertex GraftDocument::vertex(const std::string& n) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == n) return static_cast<Vertex>(i);
  fail(ErrorCode::kInvalidArgument, "unknown vertex '" + n + "'");
}

VertexSet GraftDocument::vertices(const std::vector<std::string>& list) const {
  VertexSet out;
  for (const std::string& n : list) out.insert(static_cast<std::size_t>(vertex(n)));
  return out;
}

std::string GraftDocument::edge_label(EdgeId e) const {
  const Edge& ed = graft.graph().edge(e);
  const std::string& u = name(ed.u);
  const std::string& v = name(ed.v);
  return u.size() == 1 && v.size() == 1 ? u + v : u + "-" + v;
}

std::vector<std::string> GraftDocument::names_of(VertexSet x) const {
  std::vector<std::string> out;
  x.for_each([&](int v) { out.push_back(name(v)); });
  return out;
}

std::vector<std::string> GraftDocument::labels_of(const EdgeSet& f) const {
  std::vector<std::string> out;
  f.for_each([&](int e) { out.push_back(edge_label(e)); });
  return out;
}

std::string GraftDocument::format(VertexSet x) const {
  if (x.empty()) return "∅";
  std::string out = "{";
  bool first = true;
  x.for_each([&](int v) {
    if (!first) out += ',';
    out += name(v);
    first = false;
  });
  return out + "}";
}

GraftDocument parse_document(const std::string& text, bool allow_disconnected) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    fail(ErrorCode::kParse, e.what());
  }
  if (!doc.is_object()) fail(ErrorCode::kParse, "document must be an object");
  GraftDocument out;
  out.names = string_list(doc, "vertices");
  const int n = static_cast<int>(out.names.size());
  if (n == 0) fail(ErrorCode::kParse, "no vertices");
  if (n > Multigraph::kMaxVertices)
    fail(ErrorCode::kSizeCap, "more than " + std::to_string(Multigraph::kMaxVertices) + " vertices");
  std::map<std::string, Vertex> index;
  for (int i = 0; i < n; ++i)
    if (!index.emplace(out.names[static_cast<std::size_t>(i)], i).second)
      fail(ErrorCode::kParse, "duplicate vertex '" + out.names[static_cast<std::size_t>(i)] + "'");
  auto lookup = [&](const ordered_json& item) {
    if (!item.is_string()) fail(ErrorCode::kParse, "vertex names must be strings");
    const auto it = index.find(item.get<std::string>());
    if (it == index.end()) fail(ErrorCode::kParse, "unknown vertex '" + item.get<std::string>() + "'");
    return it->second;
  };
  if (!doc.contains("edges") || !doc.at("edges").is_array()) fail(ErrorCode::kParse, "'edges' must be an array");
  Multigraph g(n);
  for (const ordered_json& e : doc.at("edges")) {
    if (!e.is_array() || e.size() != 2) fail(ErrorCode::kParse, "edges are pairs of names");
    const Vertex u = lookup(e[0]);
    const Vertex v = lookup(e[1]);
    if (u == v) fail(ErrorCode::kParse, "self-loop at '" + out.names[static_cast<std::size_t>(u)] + "'");
    g.add_edge(u, v);
  }
  if (!doc.contains("terminals") || !doc.at("terminals").is_array())
    fail(ErrorCode::kParse, "'terminals' must be an array");
  VertexSet t;
  for (const ordered_json& v : doc.at("terminals")) t.insert(static_cast<std::size_t>(lookup(v)));
  if (doc.contains("metadata")) {
    const ordered_json& meta = doc.at("metadata");
    if (!meta.is_object()) fail(ErrorCode::kParse, "'metadata' must be an object");
    if (meta.contains("comment")) {
      if (!meta.at("comment").is_string()) fail(ErrorCode::kParse, "'comment' must be a string");
      out.comment = meta.at("comment").get<std::string>();
    }
    if (meta.contains("seed")) {
      if (!meta.at("seed").is_number_unsigned()) fail(ErrorCode::kParse, "'seed' must be a non-negative integer");
      out.seed = meta.at("seed").get<std::uint64_t>();
    }
  }
  out.graft = Graft(std::move(g), t, !allow_disconnected);
  return out;
}

GraftDocument load_document(const std::string& path, bool allow_disconnected) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kParse, "cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_document(text.str(), allow_disconnected);
}

std::string to_text(const GraftDocument& doc) {
  ordered_json out;
  out["vertices"] = doc.names;
  ordered_json edges = ordered_json::array();
  for (const Edge& e : doc.graft.graph().edges()) edges.push_back({doc.name(e.u), doc.name(e.v)});
  out["edges"] = std::move(edges);
  out["terminals"] = doc.names_of(doc.graft.terminals());
  if (!doc.comment.empty() || doc.seed) {
    ordered_json meta = ordered_json::object();
    if (!doc.comment.empty()) meta["comment"] = doc.comment;
    if (doc.seed) meta["seed"] = *doc.seed;
    out["metadata"] = std::move(meta);
  }
  return out.dump(2) + "\n";
}

void save_document(const GraftDocument& doc, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::kInvalidArgument, "cannot write '" + path + "'");
  out << to_text(doc);
}

std::vector<std::string> default_names(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i)
    out.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + i)) : "v" + std::to_string(i));
  return out;
}

}  // namespace tjoin
