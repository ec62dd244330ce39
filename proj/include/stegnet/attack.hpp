#pragma once

// Minimum-cost edge removal disconnecting an encoder set S from a decoder
// set T. Two reductions to single-pair min-cut: attach a super-source and
// super-sink with prohibitively heavy edges, or contract S and T each to a
// single vertex, merging parallel edges by weight addition.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "stegnet/flow.hpp"
#include "stegnet/graph.hpp"

namespace stegnet {

struct TerminalSpec {
  std::set<VertexId> encoders;  // S
  std::set<VertexId> decoders;  // T
};

inline void validate_terminal_spec(const Graph& g, const TerminalSpec& spec) {
  if (spec.encoders.empty()) throw Error("encoder set must be non-empty");
  if (spec.decoders.empty()) throw Error("decoder set must be non-empty");
  for (const auto& set : {spec.encoders, spec.decoders})
    for (const VertexId& v : set)
      if (!g.has_vertex(v))
        throw Error("unknown vertex '" + v + "' in terminal spec");
  for (const VertexId& v : spec.encoders)
    if (spec.decoders.count(v))
      throw Error("encoder and decoder sets must be disjoint (shared vertex '" +
                  v + "')");
}

// `base` if unused, else base_1, base_2, ...
inline VertexId fresh_vertex_id(const Graph& g, const std::string& base,
                                const std::set<VertexId>& reserved = {}) {
  auto taken = [&](const VertexId& id) {
    return g.has_vertex(id) || reserved.count(id) > 0;
  };
  if (!taken(base)) return base;
  for (int i = 1;; ++i) {
    VertexId candidate = base + "_" + std::to_string(i);
    if (!taken(candidate)) return candidate;
  }
}

enum class CutMethod { SuperTerminal, Contraction };

inline std::string_view cut_method_name(CutMethod m) {
  return m == CutMethod::SuperTerminal ? "super-terminal" : "contraction";
}

struct CutPlan {
  std::vector<EdgeKey> removed_edges;  // original edges, canonical order
  Weight total_cost = 0.0;
  CutMethod method = CutMethod::Contraction;
};

struct SuperAugmentation {
  Graph graph;
  VertexId super_source;
  VertexId super_sink;
  Weight terminal_edge_weight;  // weight of every inserted edge
};

/// Copy of g plus a super-source adjacent to all encoders and a super-sink
/// adjacent to all decoders. The inserted edges weigh one more than the
/// total original edge weight, so no minimum cut can afford them.
inline SuperAugmentation augment_super(const Graph& g,
                                       const TerminalSpec& spec) {
  validate_terminal_spec(g, spec);
  SuperAugmentation aug;
  aug.graph = g;
  aug.super_source = fresh_vertex_id(g, "v_s");
  aug.super_sink = fresh_vertex_id(g, "v_t", {aug.super_source});
  aug.terminal_edge_weight = total_edge_weight(g) + 1.0;
  aug.graph.add_vertex(aug.super_source);
  aug.graph.add_vertex(aug.super_sink);
  for (const VertexId& s : spec.encoders)
    aug.graph.add_edge(aug.super_source, s, aug.terminal_edge_weight);
  for (const VertexId& t : spec.decoders)
    aug.graph.add_edge(t, aug.super_sink, aug.terminal_edge_weight);
  return aug;
}

// Contracted-graph edge -> original edges merged into it. A contracted
// edge's weight is the sum of its origins' weights; edges internal to S
// or to T appear nowhere.
using ContractionMap = std::map<EdgeKey, std::vector<EdgeKey>>;

struct ContractionResult {
  Graph graph;
  VertexId super_source;
  VertexId super_sink;
  ContractionMap origins;
};

/// Replaces S and T each by a single vertex. Edges internal to a terminal
/// set are dropped; an edge with exactly one endpoint in S (resp. T) is
/// redirected to the S-vertex (resp. T-vertex); parallel results merge by
/// adding weights. Vertices outside S u T are kept as-is.
inline ContractionResult contract(const Graph& g, const TerminalSpec& spec) {
  validate_terminal_spec(g, spec);
  ContractionResult res;
  res.super_source = fresh_vertex_id(g, "v_s");
  res.super_sink = fresh_vertex_id(g, "v_t", {res.super_source});

  auto in_s = [&](const VertexId& v) { return spec.encoders.count(v) > 0; };
  auto in_t = [&](const VertexId& v) { return spec.decoders.count(v) > 0; };
  auto image = [&](const VertexId& v) -> const VertexId& {
    if (in_s(v)) return res.super_source;
    if (in_t(v)) return res.super_sink;
    return v;
  };

  res.graph.add_vertex(res.super_source);
  res.graph.add_vertex(res.super_sink);
  for (const auto& [id, w] : g.vertices())
    if (!in_s(id) && !in_t(id)) res.graph.add_vertex(id, w);

  std::map<EdgeKey, Weight> merged;
  for (const auto& [key, w] : g.edges()) {
    const auto& [u, v] = key;
    if ((in_s(u) && in_s(v)) || (in_t(u) && in_t(v))) continue;
    EdgeKey target = edge_key(image(u), image(v));
    merged[target] += w;
    res.origins[target].push_back(key);
  }
  for (const auto& [key, w] : merged)
    res.graph.add_edge(key.first, key.second, w);
  return res;
}

/// Minimum-cost removal plan disconnecting S from T. Builds the reduced
/// graph for `method`, solves the single-pair minimum cut, and maps the
/// cut back to original edges. Both methods yield equal total cost.
inline CutPlan plan_cut(const Graph& g, const TerminalSpec& spec,
                        CutMethod method = CutMethod::Contraction) {
  validate_terminal_spec(g, spec);
  CutPlan plan;
  plan.method = method;

  std::set<EdgeKey> removed;
  if (method == CutMethod::SuperTerminal) {
    SuperAugmentation aug = augment_super(g, spec);
    FlowNetwork net(aug.graph, aug.super_source, aug.super_sink);
    CutResult cut = min_cut(net);
    for (const EdgeKey& e : cut.cut_edges) {
      if (e.first == aug.super_source || e.first == aug.super_sink ||
          e.second == aug.super_source || e.second == aug.super_sink)
        throw Error("internal error: artificial edge in minimum cut");
      removed.insert(e);
    }
  } else {
    ContractionResult con = contract(g, spec);
    FlowNetwork net(con.graph, con.super_source, con.super_sink);
    CutResult cut = min_cut(net);
    for (const EdgeKey& e : cut.cut_edges)
      for (const EdgeKey& origin : con.origins.at(e)) removed.insert(origin);
  }

  plan.removed_edges.assign(removed.begin(), removed.end());
  for (const EdgeKey& e : plan.removed_edges)
    plan.total_cost += g.edge_weight(e.first, e.second);
  return plan;
}

/// True iff deleting `removed` leaves no encoder-to-decoder path.
inline bool verify_disconnection(const Graph& g, const TerminalSpec& spec,
                                 const std::vector<EdgeKey>& removed) {
  validate_terminal_spec(g, spec);
  std::set<EdgeKey> gone;
  for (const EdgeKey& e : removed) {
    if (!g.has_edge(e.first, e.second))
      throw Error("removed edge '" + e.first + " " + e.second +
                  "' not in graph");
    gone.insert(edge_key(e.first, e.second));
  }

  std::set<VertexId> seen(spec.encoders.begin(), spec.encoders.end());
  std::vector<VertexId> queue(spec.encoders.begin(), spec.encoders.end());
  while (!queue.empty()) {
    VertexId u = queue.back();
    queue.pop_back();
    for (const auto& [v, w] : g.adjacent(u)) {
      if (gone.count(edge_key(u, v))) continue;
      if (seen.insert(v).second) queue.push_back(v);
    }
  }
  for (const VertexId& t : spec.decoders)
    if (seen.count(t)) return false;
  return true;
}

}  // namespace stegnet
