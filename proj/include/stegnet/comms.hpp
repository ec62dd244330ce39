#pragma once

// Low-risk communication planning: minimum-weight edge subsets connecting
// terminal sets. Exact shortest path and MST for the two special cases,
// metric-closure 2-approximation in between, and the translation from
// multiplicative success probabilities to additive weights.

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "stegnet/graph.hpp"

namespace stegnet {

enum class SteinerVariant { ShortestPath, Mst, MetricClosure2Approx };

inline std::string_view steiner_variant_name(SteinerVariant v) {
  switch (v) {
    case SteinerVariant::ShortestPath:
      return "shortest-path";
    case SteinerVariant::Mst:
      return "mst";
    default:
      return "metric-closure-2approx";
  }
}

struct SteinerPlan {
  std::vector<EdgeKey> edges;  // canonical order, each edge once
  Weight total_weight = 0.0;
  std::set<VertexId> terminals;
  SteinerVariant variant = SteinerVariant::MetricClosure2Approx;
};

/// A graph whose edge weights are success probabilities in (0, 1].
struct ProbGraph {
  Graph graph;

  explicit ProbGraph(Graph g) : graph(std::move(g)) {
    for (const auto& [key, p] : graph.edges())
      if (!(p > 0.0 && p <= 1.0))
        throw Error("edge probability " + format_weight(p) + " on '" +
                    key.first + " " + key.second + "' outside (0, 1]");
  }
};

/// Same topology with each probability p replaced by -ln(p), so additive
/// path sums compare in the opposite order of probability products.
inline Graph prob_to_additive(const ProbGraph& pg) {
  Graph out;
  for (const auto& [id, w] : pg.graph.vertices()) out.add_vertex(id, w);
  for (const auto& [key, p] : pg.graph.edges())
    out.add_edge(key.first, key.second, -std::log(p));
  return out;
}

namespace detail {

struct DijkstraTree {
  std::map<VertexId, double> dist;
  std::map<VertexId, VertexId> parent;
};

// Label-setting; settles equal-distance vertices in lexicographic order.
inline DijkstraTree dijkstra(const Graph& g, const VertexId& source) {
  DijkstraTree tree;
  std::set<std::pair<double, VertexId>> frontier;
  tree.dist[source] = 0.0;
  frontier.insert({0.0, source});
  while (!frontier.empty()) {
    auto [d, u] = *frontier.begin();
    frontier.erase(frontier.begin());
    for (const auto& [v, w] : g.adjacent(u)) {
      double candidate = d + w;
      auto it = tree.dist.find(v);
      if (it == tree.dist.end() || candidate < it->second) {
        if (it != tree.dist.end()) frontier.erase({it->second, v});
        tree.dist[v] = candidate;
        tree.parent[v] = u;
        frontier.insert({candidate, v});
      }
    }
  }
  return tree;
}

inline std::vector<EdgeKey> path_edges(const DijkstraTree& tree,
                                       const VertexId& from,
                                       const VertexId& to) {
  std::vector<EdgeKey> edges;
  for (VertexId v = to; v != from; v = tree.parent.at(v))
    edges.push_back(edge_key(tree.parent.at(v), v));
  return edges;
}

struct UnionFind {
  std::map<VertexId, VertexId> parent;

  VertexId find(const VertexId& v) {
    auto it = parent.find(v);
    if (it == parent.end()) {
      parent[v] = v;
      return v;
    }
    if (it->second == v) return v;
    VertexId root = find(it->second);
    parent[v] = root;
    return root;
  }

  bool unite(const VertexId& a, const VertexId& b) {
    VertexId ra = find(a), rb = find(b);
    if (ra == rb) return false;
    parent[ra] = rb;
    return true;
  }
};

}  // namespace detail

/// Minimum-weight path from s to t; empty plan when s == t.
inline SteinerPlan shortest_path_plan(const Graph& g, const VertexId& s,
                                      const VertexId& t) {
  g.adjacent(s);
  g.adjacent(t);
  SteinerPlan plan;
  plan.variant = SteinerVariant::ShortestPath;
  plan.terminals = {s, t};
  if (s == t) return plan;

  detail::DijkstraTree tree = detail::dijkstra(g, s);
  auto it = tree.dist.find(t);
  if (it == tree.dist.end())
    throw InfeasibleError("no path from '" + s + "' to '" + t + "'");
  auto edges = detail::path_edges(tree, s, t);
  std::sort(edges.begin(), edges.end());
  plan.edges = std::move(edges);
  plan.total_weight = it->second;
  return plan;
}

/// Minimum spanning tree via sorted edge processing (weight, then
/// lexicographic endpoints). Rejects disconnected graphs.
inline SteinerPlan mst_plan(const Graph& g) {
  SteinerPlan plan;
  plan.variant = SteinerVariant::Mst;
  for (const auto& [id, w] : g.vertices()) plan.terminals.insert(id);

  std::vector<std::pair<Weight, EdgeKey>> order;
  for (const auto& [key, w] : g.edges()) order.push_back({w, key});
  std::sort(order.begin(), order.end());

  detail::UnionFind components;
  for (const auto& [w, key] : order) {
    if (components.unite(key.first, key.second)) {
      plan.edges.push_back(key);
      plan.total_weight += w;
    }
  }
  if (!g.vertices().empty() && plan.edges.size() + 1 != g.vertex_count())
    throw InfeasibleError("graph is disconnected; no spanning tree exists");
  std::sort(plan.edges.begin(), plan.edges.end());
  return plan;
}

/// Minimum-weight edge subset connecting `terminals`. Two terminals reduce
/// to the shortest path, all vertices to the MST; otherwise the classic
/// metric-closure construction, whose weight is at most twice the optimum:
/// MST of the terminal-distance complete graph, expanded to original
/// edges, deduplicated, then pruned of non-terminal leaves.
inline SteinerPlan steiner_plan(const Graph& g,
                                const std::set<VertexId>& terminals) {
  if (terminals.empty()) throw Error("terminal set must be non-empty");
  for (const VertexId& t : terminals) g.adjacent(t);

  if (terminals.size() == 1)
    return shortest_path_plan(g, *terminals.begin(), *terminals.begin());
  if (terminals.size() == 2)
    return shortest_path_plan(g, *terminals.begin(), *std::next(terminals.begin()));
  if (terminals.size() == g.vertex_count()) return mst_plan(g);

  // Shortest-path trees from every terminal; also the reachability check.
  std::map<VertexId, detail::DijkstraTree> trees;
  for (const VertexId& t : terminals) trees.emplace(t, detail::dijkstra(g, t));
  for (const VertexId& a : terminals)
    for (const VertexId& b : terminals)
      if (!trees.at(a).dist.count(b))
        throw InfeasibleError("terminals '" + a + "' and '" + b +
                              "' are not connected");

  // MST over the metric closure of the terminal set.
  std::vector<std::pair<double, EdgeKey>> closure;
  for (auto a = terminals.begin(); a != terminals.end(); ++a)
    for (auto b = std::next(a); b != terminals.end(); ++b)
      closure.push_back({trees.at(*a).dist.at(*b), edge_key(*a, *b)});
  std::sort(closure.begin(), closure.end());

  detail::UnionFind components;
  std::set<EdgeKey> chosen;
  for (const auto& [d, key] : closure)
    if (components.unite(key.first, key.second))
      for (const EdgeKey& e : detail::path_edges(trees.at(key.first),
                                                 key.first, key.second))
        chosen.insert(e);

  // Prune non-terminal leaves.
  std::map<VertexId, int> degree;
  for (const EdgeKey& e : chosen) {
    ++degree[e.first];
    ++degree[e.second];
  }
  bool pruned = true;
  while (pruned) {
    pruned = false;
    for (auto it = chosen.begin(); it != chosen.end();) {
      const auto& [u, v] = *it;
      bool u_leaf = degree[u] == 1 && !terminals.count(u);
      bool v_leaf = degree[v] == 1 && !terminals.count(v);
      if (u_leaf || v_leaf) {
        --degree[u];
        --degree[v];
        it = chosen.erase(it);
        pruned = true;
      } else {
        ++it;
      }
    }
  }

  SteinerPlan plan;
  plan.variant = SteinerVariant::MetricClosure2Approx;
  plan.terminals = terminals;
  plan.edges.assign(chosen.begin(), chosen.end());
  for (const EdgeKey& e : plan.edges)
    plan.total_weight += g.edge_weight(e.first, e.second);
  return plan;
}

/// Feasible plan letting every sender reach all of its decoders: the union
/// of per-sender Steiner plans over {sender} u decoders, each distinct
/// edge counted once. Feasible for the group objective, not necessarily
/// optimal.
inline SteinerPlan comms_plan(
    const Graph& g,
    const std::map<VertexId, std::set<VertexId>>& decoders_by_sender) {
  std::size_t decoder_total = 0;
  for (const auto& [s, ts] : decoders_by_sender) decoder_total += ts.size();
  if (decoder_total == 0)
    throw Error("at least one sender must have a non-empty decoder set");

  std::vector<SteinerPlan> parts;
  for (const auto& [sender, decoders] : decoders_by_sender) {
    std::set<VertexId> terminals = decoders;
    terminals.insert(sender);
    try {
      parts.push_back(steiner_plan(g, terminals));
    } catch (const InfeasibleError&) {
      throw InfeasibleError("sender '" + sender +
                            "' cannot reach all of its decoders");
    }
  }
  if (parts.size() == 1) return parts.front();

  SteinerPlan plan;
  plan.variant = SteinerVariant::MetricClosure2Approx;
  std::set<EdgeKey> edges;
  for (const SteinerPlan& part : parts) {
    plan.terminals.insert(part.terminals.begin(), part.terminals.end());
    edges.insert(part.edges.begin(), part.edges.end());
  }
  plan.edges.assign(edges.begin(), edges.end());
  for (const EdgeKey& e : plan.edges)
    plan.total_weight += g.edge_weight(e.first, e.second);
  return plan;
}

}  // namespace stegnet
