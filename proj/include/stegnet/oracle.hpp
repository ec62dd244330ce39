#pragma once

// Brute-force reference solvers for cross-checking the optimized paths.
// Deliberately plain enumerations of the definitions; kept independent of
// the flow, dominator and comms implementations.

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "stegnet/attack.hpp"
#include "stegnet/graph.hpp"

namespace stegnet {

struct OracleBudget {
  std::size_t max_vertices;
  std::size_t max_edges;
};

inline constexpr OracleBudget kCutOracleBudget{12, ~std::size_t{0}};
inline constexpr OracleBudget kMwdsOracleBudget{16, ~std::size_t{0}};
inline constexpr OracleBudget kSteinerOracleBudget{9, 14};

namespace detail {

inline void check_budget(const Graph& g, OracleBudget budget,
                         const char* what) {
  if (g.vertex_count() > budget.max_vertices)
    throw BudgetError(std::string(what) + ": graph has " +
                      std::to_string(g.vertex_count()) +
                      " vertices, oracle budget is " +
                      std::to_string(budget.max_vertices));
  if (g.edge_count() > budget.max_edges)
    throw BudgetError(std::string(what) + ": graph has " +
                      std::to_string(g.edge_count()) +
                      " edges, oracle budget is " +
                      std::to_string(budget.max_edges));
}

}  // namespace detail

/// Minimum crossing weight over every vertex bipartition with S on the
/// source side and T on the other.
inline Weight oracle_min_cut(const Graph& g, const TerminalSpec& spec,
                             OracleBudget budget = kCutOracleBudget) {
  detail::check_budget(g, budget, "oracle_min_cut");
  validate_terminal_spec(g, spec);

  std::vector<VertexId> free_vertices;
  for (const auto& [id, w] : g.vertices())
    if (!spec.encoders.count(id) && !spec.decoders.count(id))
      free_vertices.push_back(id);

  struct IndexedEdge {
    const VertexId* a;
    const VertexId* b;
    Weight w;
  };
  std::vector<IndexedEdge> edges;
  for (const auto& [key, w] : g.edges())
    edges.push_back({&key.first, &key.second, w});

  Weight best = -1.0;
  std::uint64_t count = std::uint64_t{1} << free_vertices.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::set<VertexId> source_side(spec.encoders.begin(),
                                   spec.encoders.end());
    for (std::size_t i = 0; i < free_vertices.size(); ++i)
      if (mask >> i & 1) source_side.insert(free_vertices[i]);
    Weight crossing = 0.0;
    for (const IndexedEdge& e : edges)
      if (source_side.count(*e.a) != source_side.count(*e.b)) crossing += e.w;
    if (best < 0.0 || crossing < best) best = crossing;
  }
  return best;
}

/// Minimum total vertex weight over all dominating subsets; a subset
/// dominates iff the union of its closed neighborhoods is every vertex.
inline Weight oracle_mwds(const Graph& g,
                          OracleBudget budget = kMwdsOracleBudget) {
  detail::check_budget(g, budget, "oracle_mwds");

  std::size_t n = g.vertex_count();
  std::vector<Weight> weight;
  std::vector<std::uint64_t> closed;
  std::map<VertexId, std::size_t> index;
  for (const auto& [v, w] : g.vertices()) {
    index[v] = weight.size();
    weight.push_back(w);
  }
  closed.assign(n, 0);
  for (const auto& [v, w] : g.vertices()) {
    std::size_t i = index.at(v);
    closed[i] |= std::uint64_t{1} << i;
    for (const auto& [u, ew] : g.adjacent(v))
      closed[i] |= std::uint64_t{1} << index.at(u);
  }

  std::uint64_t full = n == 0 ? 0 : (std::uint64_t{1} << n) - 1;
  Weight best = -1.0;
  for (std::uint64_t mask = 0; mask <= full; ++mask) {
    std::uint64_t covered = 0;
    Weight total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) {
        covered |= closed[i];
        total += weight[i];
      }
    }
    if (covered == full && (best < 0.0 || total < best)) best = total;
    if (n == 0) break;
  }
  return best < 0.0 ? 0.0 : best;
}

/// Minimum total weight over all edge subsets whose subgraph connects
/// every terminal.
inline Weight oracle_steiner(const Graph& g,
                             const std::set<VertexId>& terminals,
                             OracleBudget budget = kSteinerOracleBudget) {
  detail::check_budget(g, budget, "oracle_steiner");
  if (terminals.empty()) throw Error("terminal set must be non-empty");
  for (const VertexId& t : terminals) g.adjacent(t);
  if (terminals.size() == 1) return 0.0;

  std::vector<EdgeKey> edges;
  std::vector<Weight> weights;
  for (const auto& [key, w] : g.edges()) {
    edges.push_back(key);
    weights.push_back(w);
  }

  Weight best = -1.0;
  std::uint64_t count = std::uint64_t{1} << edges.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::map<VertexId, VertexId> parent;
    auto find = [&](VertexId v) {
      while (true) {
        auto it = parent.find(v);
        if (it == parent.end() || it->second == v) return v;
        v = it->second;
      }
    };
    Weight total = 0.0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (!(mask >> i & 1)) continue;
      total += weights[i];
      VertexId ra = find(edges[i].first), rb = find(edges[i].second);
      parent[ra] = rb;
      parent.emplace(rb, rb);
    }
    if (best >= 0.0 && total >= best) continue;
    VertexId root = find(*terminals.begin());
    bool connected = true;
    for (const VertexId& t : terminals)
      if (find(t) != root) {
        connected = false;
        break;
      }
    if (connected) best = total;
  }
  if (best < 0.0)
    throw InfeasibleError("terminals are not connected by any edge subset");
  return best;
}

}  // namespace stegnet
