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

#include "tjoin/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "tjoin/decomposition.hpp"
#include "tjoin/document.hpp"
#include "tjoin/error.hpp"
#include "tjoin/harness.hpp"
#include "tjoin/rootlize.hpp"

namespace tjoin::cli {

namespace {

using nlohmann::ordered_json;

std::string joined(const std::vector<std::string>& items) {
  if (items.empty()) return "∅";
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i == 0 ? "" : ", ") + items[i];
  return out;
}

std::vector<std::string> split_names(const std::string& list) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(list);
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

void emit(std::ostream& out, const ordered_json& doc) { out << doc.dump(2) << '\n'; }

ordered_json edge_ids(const EdgeSet& f) {
  ordered_json out = ordered_json::array();
  f.for_each([&](int e) { out.push_back(e); });
  return out;
}

struct Common {
  std::string file;
  bool json = false;
  bool allow_disconnected = false;
};

void add_common(CLI::App* sub, Common& c, bool file_required = true) {
  auto* opt = sub->add_option("file", c.file, "graft document");
  if (file_required) opt->required();
  sub->add_flag("--json", c.json, "emit a machine-readable object");
  sub->add_flag("--allow-disconnected", c.allow_disconnected, "accept a disconnected graph");
}

GraftDocument load(const Common& c) { return load_document(c.file, c.allow_disconnected); }

int solve(const Common& c, std::ostream& out) {
  const GraftDocument doc = load(c);
  const DecompositionAtlas atlas(doc.graft);
  if (c.json) {
    ordered_json j;
    j["nu"] = atlas.nu();
    j["join"] = doc.labels_of(atlas.min_join());
    j["join_ids"] = edge_ids(atlas.min_join());
    j["allowed"] = doc.labels_of(atlas.allowed());
    j["allowed_ids"] = edge_ids(atlas.allowed());
    emit(out, j);
  } else {
    out << "nu = " << atlas.nu() << "; join = " << joined(doc.labels_of(atlas.min_join()))
        << "; allowed = " << joined(doc.labels_of(atlas.allowed())) << '\n';
  }
  return kExitOk;
}

int dist(const Common& c, const std::string& root_name, const std::string& from_name, std::ostream& out) {
  const GraftDocument doc = load(c);
  const DecompositionAtlas atlas(doc.graft);
  const Vertex root = doc.vertex(root_name);
  const DistanceProfile p = atlas.profile(root);
  const int n = doc.graft.vertex_count();
  if (c.json) {
    ordered_json j;
    j["root"] = root_name;
    ordered_json d = ordered_json::object();
    for (Vertex v = 0; v < n; ++v) d[doc.name(v)] = p[v];
    j["distances"] = std::move(d);
    ordered_json levels = ordered_json::array();
    for (int i = p.min_level(); i <= p.max_level(); ++i)
      if (!p.level(i).empty()) levels.push_back({{"index", i}, {"vertices", doc.names_of(p.level(i))}});
    j["levels"] = std::move(levels);
    if (!from_name.empty()) {
      const Vertex from = doc.vertex(from_name);
      const PathWitness& path = atlas.distances().path(root, from);
      ordered_json names = ordered_json::array();
      for (Vertex v : path.vertices) names.push_back(doc.name(v));
      j["from"] = from_name;
      j["distance"] = p[from];
      j["path"] = std::move(names);
    }
    emit(out, j);
    return kExitOk;
  }
  out << "vertex\tdistance\n";
  for (Vertex v = 0; v < n; ++v) out << doc.name(v) << '\t' << p[v] << '\n';
  for (int i = p.min_level(); i <= p.max_level(); ++i)
    if (!p.level(i).empty()) out << "level " << i << ": " << doc.format(p.level(i)) << '\n';
  if (!from_name.empty()) {
    const Vertex from = doc.vertex(from_name);
    std::string path;
    for (Vertex v : atlas.distances().path(root, from).vertices) path += (path.empty() ? "" : "-") + doc.name(v);
    out << "dist(" << root_name << "," << from_name << ") = " << p[from] << " via " << path << '\n';
  }
  return kExitOk;
}

int decompose(const Common& c, const std::string& root_name, std::ostream& out) {
  const GraftDocument doc = load(c);
  const DecompositionAtlas atlas(doc.graft);
  const Vertex root = doc.vertex(root_name);
  const DistanceProfile p = atlas.profile(root);
  const DistanceComponentFamily family = distance_components(p, doc.graft.graph());
  const Trisection t = atlas.trisection(root);
  if (c.json) {
    ordered_json j;
    j["root"] = root_name;
    ordered_json comps = ordered_json::array();
    for (const DistanceComponent& k : family.all())
      comps.push_back({{"index", k.index}, {"vertices", doc.names_of(k.vertices)}, {"capital", k.capital}});
    j["components"] = std::move(comps);
    j["trisection"] = {{"initial", doc.names_of(t.initial)},
                       {"A", doc.names_of(t.a)},
                       {"D", doc.names_of(t.d)},
                       {"C", doc.names_of(t.c)}};
    emit(out, j);
    return kExitOk;
  }
  for (const DistanceComponent& k : family.all())
    out << "level " << k.index << ": " << doc.format(k.vertices) << (k.capital ? " capital" : "") << '\n';
  out << "A=" << doc.format(t.a) << ", D=" << doc.format(t.d) << ", C=" << doc.format(t.c) << '\n';
  return kExitOk;
}

int kl(const Common& c, std::ostream& out) {
  const GraftDocument doc = load(c);
  const DecompositionAtlas atlas(doc.graft);
  if (c.json) {
    ordered_json j;
    ordered_json fcs = ordered_json::array();
    for (const VertexSet& s : atlas.factor_components()) fcs.push_back(doc.names_of(s));
    ordered_json classes = ordered_json::array();
    for (const VertexSet& s : atlas.kl().classes) classes.push_back(doc.names_of(s));
    j["factor_components"] = std::move(fcs);
    j["classes"] = std::move(classes);
    emit(out, j);
    return kExitOk;
  }
  out << "factor-components:";
  for (const VertexSet& s : atlas.factor_components()) out << ' ' << doc.format(s);
  out << "\nclasses:";
  for (const VertexSet& s : atlas.kl().classes) out << ' ' << doc.format(s);
  out << '\n';
  return kExitOk;
}

int critical(const Common& c, const std::string& name, std::ostream& out) {
  const GraftDocument doc = load(c);
  const DecompositionAtlas atlas(doc.graft);
  const VertexSet s = atlas.kl().class_of(doc.vertex(name));
  const VertexSet crit = atlas.critical_set(s);
  if (c.json) {
    ordered_json j;
    j["class"] = doc.names_of(s);
    j["critical"] = doc.names_of(crit);
    emit(out, j);
  } else {
    out << "class = " << doc.format(s) << "; critical = " << doc.format(crit) << '\n';
  }
  return kExitOk;
}

std::string fresh_name(const std::vector<std::string>& taken, std::string base) {
  while (std::find(taken.begin(), taken.end(), base) != taken.end()) base += '\'';
  return base;
}

int rootlize_cmd(const Common& c, const std::string& mount, const std::string& emit_path, std::ostream& out) {
  const GraftDocument doc = load(c);
  const Rootlization rl = rootlize(doc.graft, doc.vertices(split_names(mount)));
  GraftDocument ext;
  ext.names = doc.names;
  ext.names.push_back(fresh_name(ext.names, "r"));
  ext.names.push_back(fresh_name(ext.names, "s"));
  ext.graft = rl.extended;
  ext.comment = "rootlization at " + doc.format(rl.mount);
  if (emit_path.empty()) {
    out << to_text(ext);
    return kExitOk;
  }
  save_document(ext, emit_path);
  if (c.json) {
    ordered_json j;
    j["path"] = emit_path;
    j["root"] = ext.name(rl.root);
    j["attachment"] = ext.name(rl.attachment);
    j["vertices"] = ext.graft.vertex_count();
    j["edges"] = ext.graft.edge_count();
    emit(out, j);
  } else {
    out << "wrote " << emit_path << ": " << ext.graft.vertex_count() << " vertices, " << ext.graft.edge_count()
        << " edges\n";
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string checks;
  int enumerate = 0;
  int random = 0;
  std::uint64_t seed = 1;
  int max_vertices = 0;
  int max_edges = 0;
  int threads = 1;
  bool literal_fact1 = false;
  bool timing = false;
};

int verify(const Common& c, const VerifyArgs& v, std::ostream& out) {
  using namespace harness;
  std::vector<std::string> ids = v.checks.empty() ? registry() : split_names(v.checks);
  for (const std::string& id : ids)
    if (!is_registered(id)) fail(ErrorCode::kInvalidArgument, "unknown check '" + id + "'");
  CheckOptions options;
  options.literal_fact1 = v.literal_fact1;
  const int modes = (c.file.empty() ? 0 : 1) + (v.enumerate > 0 ? 1 : 0) + (v.random > 0 ? 1 : 0);
  if (modes != 1) fail(ErrorCode::kInvalidArgument, "give exactly one of FILE, --enumerate N, --random COUNT");

  if (!c.file.empty()) {
    const GraftDocument doc = load(c);
    const std::vector<CheckReport> reports = run_checks(doc.graft, ids, options);
    bool failed = false;
    ordered_json list = ordered_json::array();
    for (const CheckReport& r : reports) {
      failed = failed || r.verdict == Verdict::kFail;
      if (c.json) {
        ordered_json item{{"check", r.check_id}, {"verdict", to_string(r.verdict)}, {"cases", r.cases}};
        if (!r.witness.empty()) item["witness"] = r.witness;
        list.push_back(std::move(item));
      } else {
        out << r.check_id << ": " << to_string(r.verdict) << " (" << r.cases << " cases)";
        if (!r.witness.empty()) out << " " << r.witness;
        out << '\n';
      }
    }
    if (c.json) {
      ordered_json j;
      j["instance"] = describe(doc.graft);
      j["ok"] = !failed;
      j["checks"] = std::move(list);
      emit(out, j);
    } else {
      out << (failed ? "FAIL" : "OK") << '\n';
    }
    return failed ? kExitFailure : kExitOk;
  }

  InstanceSpec spec;
  if (v.enumerate > 0) {
    spec.kind = GeneratorKind::kEnumerate;
    spec.max_vertices = v.enumerate;
    spec.max_edges = v.max_edges > 0 ? v.max_edges : 8;
  } else {
    spec.kind = GeneratorKind::kRandom;
    spec.count = v.random;
    spec.seed = v.seed;
    spec.max_vertices = v.max_vertices > 0 ? v.max_vertices : 10;
    spec.max_edges = v.max_edges > 0 ? v.max_edges : 14;
  }
  const SuiteSummary summary = run_suite(spec, ids, options, std::max(1, v.threads));
  out << (c.json ? summary.to_json(v.timing) + "\n" : summary.to_text(v.timing));
  return summary.any_fail() ? kExitFailure : kExitOk;
}

struct GenArgs {
  bool random = false;
  std::uint64_t seed = 1;
  int vertices = 6;
  int edges = 8;
  bool allow_parallel = false;
};

int gen(const GenArgs& a, std::ostream& out) {
  if (!a.random) fail(ErrorCode::kInvalidArgument, "only --random generation is supported");
  if (a.vertices < 1 || a.vertices > Multigraph::kMaxVertices)
    fail(ErrorCode::kSizeCap, "vertex count out of range");
  if (a.edges < a.vertices - 1) fail(ErrorCode::kInvalidArgument, "too few edges for a connected graph");
  harness::InstanceSpec spec;
  spec.kind = harness::GeneratorKind::kRandom;
  spec.min_vertices = a.vertices;
  spec.max_vertices = a.vertices;
  spec.max_edges = a.edges;
  spec.allow_parallel = a.allow_parallel;
  spec.seed = a.seed;
  GraftDocument doc;
  doc.graft = harness::random_graft(spec, 0);
  doc.names = default_names(doc.graft.vertex_count());
  doc.comment = "random bipartite graft";
  doc.seed = a.seed;
  out << to_text(doc);
  return kExitOk;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

int export_cmd(const Common& c, const std::string& root_name, const std::string& format, std::ostream& out) {
  if (format != "dot") fail(ErrorCode::kInvalidArgument, "unsupported format '" + format + "'");
  const GraftDocument doc = load(c);
  const DecompositionAtlas atlas(doc.graft);
  const Vertex root = doc.vertex(root_name);
  const DistanceProfile p = atlas.profile(root);
  std::ostringstream dot;
  dot << "graph graft {\n  rankdir=TB;\n";
  for (int i = p.min_level(); i <= p.max_level(); ++i) {
    if (p.level(i).empty()) continue;
    dot << "  { rank=same;";
    p.level(i).for_each([&](int v) { dot << ' ' << quoted(doc.name(v)) << ';'; });
    dot << " }  // level " << i << '\n';
  }
  for (Vertex v = 0; v < doc.graft.vertex_count(); ++v) {
    dot << "  " << quoted(doc.name(v)) << " [label=" << quoted(doc.name(v) + " (" + std::to_string(p[v]) + ")");
    if (doc.graft.terminals().contains(static_cast<std::size_t>(v))) dot << ", shape=doublecircle";
    if (v == root) dot << ", style=filled";
    dot << "];\n";
  }
  for (const Edge& e : doc.graft.graph().edges()) {
    dot << "  " << quoted(doc.name(e.u)) << " -- " << quoted(doc.name(e.v));
    if (atlas.min_join().contains(static_cast<std::size_t>(e.id))) dot << " [style=bold, color=red]";
    dot << ";\n";
  }
  dot << "}\n";
  if (c.json) {
    ordered_json j;
    j["format"] = format;
    j["root"] = root_name;
    j["source"] = dot.str();
    emit(out, j);
  } else {
    out << dot.str();
  }
  return kExitOk;
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse:
      return kExitParse;
    case ErrorCode::kParity:
      return kExitParity;
    case ErrorCode::kSizeCap:
      return kExitSizeCap;
    case ErrorCode::kStructureViolation:
      return kExitStructure;
    default:
      return kExitFailure;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"minimum T-joins and distance decompositions of grafts", "tjoin"};
  app.require_subcommand(1);

  Common common;
  std::string root;
  std::string from;
  std::string class_of;
  std::string mount;
  std::string emit_path;
  std::string format = "dot";
  VerifyArgs verify_args;
  GenArgs gen_args;
  bool gen_json = false;

  auto* solve_cmd = app.add_subcommand("solve", "minimum join, nu and allowed edges");
  add_common(solve_cmd, common);
  auto* dist_cmd = app.add_subcommand("dist", "distance profile from a root");
  add_common(dist_cmd, common);
  dist_cmd->add_option("--root", root, "root vertex")->required();
  dist_cmd->add_option("--from", from, "also report one distance with its path");
  auto* decompose_cmd = app.add_subcommand("decompose", "distance components and trisection");
  add_common(decompose_cmd, common);
  decompose_cmd->add_option("--root", root, "root vertex")->required();
  auto* kl_cmd = app.add_subcommand("kl", "factor-components and KL classes");
  add_common(kl_cmd, common);
  auto* critical_cmd = app.add_subcommand("critical", "critical set of a KL class");
  add_common(critical_cmd, common);
  critical_cmd->add_option("--class-of", class_of, "vertex naming the class")->required();
  auto* rootlize_sub = app.add_subcommand("rootlize", "extend the graft at a mount");
  add_common(rootlize_sub, common);
  rootlize_sub->add_option("--mount", mount, "comma-separated mount vertices")->required();
  rootlize_sub->add_option("--emit", emit_path, "write the extended document here");
  auto* verify_cmd = app.add_subcommand("verify", "run the property checks");
  add_common(verify_cmd, common, false);
  verify_cmd->add_option("--checks", verify_args.checks, "comma-separated check ids");
  verify_cmd->add_option("--enumerate", verify_args.enumerate, "exhaustive family up to N vertices");
  verify_cmd->add_option("--random", verify_args.random, "number of random grafts");
  verify_cmd->add_option("--seed", verify_args.seed, "random seed");
  verify_cmd->add_option("--max-vertices", verify_args.max_vertices, "vertex bound for random grafts");
  verify_cmd->add_option("--max-edges", verify_args.max_edges, "edge bound");
  verify_cmd->add_option("--threads", verify_args.threads, "worker threads");
  verify_cmd->add_flag("--literal-fact1", verify_args.literal_fact1, "test the uncorrected sign");
  verify_cmd->add_flag("--timing", verify_args.timing, "include wall-clock figures");
  auto* gen_cmd = app.add_subcommand("gen", "emit a random graft document");
  gen_cmd->add_flag("--random", gen_args.random, "random bipartite graft")->required();
  gen_cmd->add_option("--seed", gen_args.seed, "random seed");
  gen_cmd->add_option("--vertices", gen_args.vertices, "vertex count");
  gen_cmd->add_option("--edges", gen_args.edges, "edge bound");
  gen_cmd->add_flag("--allow-parallel", gen_args.allow_parallel, "allow parallel edges");
  gen_cmd->add_flag("--json", gen_json, "accepted for uniformity; the document is already structured");
  auto* export_sub = app.add_subcommand("export", "graph drawing source");
  add_common(export_sub, common);
  export_sub->add_option("--root", root, "root vertex")->required();
  export_sub->add_option("--format", format, "output format")->check(CLI::IsMember({"dot"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (solve_cmd->parsed()) return solve(common, out);
    if (dist_cmd->parsed()) return dist(common, root, from, out);
    if (decompose_cmd->parsed()) return decompose(common, root, out);
    if (kl_cmd->parsed()) return kl(common, out);
    if (critical_cmd->parsed()) return critical(common, class_of, out);
    if (rootlize_sub->parsed()) return rootlize_cmd(common, mount, emit_path, out);
    if (verify_cmd->parsed()) return verify(common, verify_args, out);
    if (gen_cmd->parsed()) return gen(gen_args, out);
    if (export_sub->parsed()) return export_cmd(common, root, format, out);
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return exit_code(e.code());
  }
  return kExitFailure;
}

}  // namespace tjoin::cli
