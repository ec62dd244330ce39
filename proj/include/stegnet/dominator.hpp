#pragma once

// Minimum-weight dominating set selection for neighbor-only broadcast:
// exact branch-and-bound for small graphs, weight-per-coverage greedy
// otherwise, plus the 0/1 action-vector view of a vertex selection.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "stegnet/graph.hpp"

namespace stegnet {

// 1 = encoder (dominating-set member), 0 = decoder.
using ActionVector = std::map<VertexId, int>;

enum class MwdsMethod { Exact, Greedy };

inline std::string_view mwds_method_name(MwdsMethod m) {
  return m == MwdsMethod::Exact ? "exact" : "greedy";
}

struct DominatingSet {
  std::set<VertexId> members;
  Weight total_weight = 0.0;
  MwdsMethod method = MwdsMethod::Exact;
};

inline void validate_subset(const Graph& g, const std::set<VertexId>& d) {
  for (const VertexId& v : d)
    if (!g.has_vertex(v)) throw Error("unknown vertex '" + v + "'");
}

/// True iff every vertex outside `d` has a neighbor in `d`. Isolated
/// vertices must therefore be members.
inline bool is_dominating(const Graph& g, const std::set<VertexId>& d) {
  validate_subset(g, d);
  for (const auto& [v, w] : g.vertices()) {
    if (d.count(v)) continue;
    bool covered = false;
    for (const auto& [u, ew] : g.adjacent(v)) {
      if (d.count(u)) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

inline ActionVector action_vector(const Graph& g,
                                  const std::set<VertexId>& d) {
  validate_subset(g, d);
  ActionVector actions;
  for (const auto& [v, w] : g.vertices()) actions[v] = d.count(v) ? 1 : 0;
  return actions;
}

/// Neighbor-cover constraint at every vertex: the actions of v's
/// neighbors must sum to at least 1 - action(v). Holds everywhere iff
/// the 1-vertices form a dominating set.
inline bool satisfies_action_constraint(const Graph& g,
                                        const ActionVector& actions) {
  if (actions.size() != g.vertex_count())
    throw Error("action vector must cover every vertex exactly once");
  for (const auto& [v, a] : actions) {
    if (a != 0 && a != 1) throw Error("actions must be 0 or 1");
    int neighbor_sum = 0;
    for (const auto& [u, w] : g.adjacent(v)) neighbor_sum += actions.at(u);
    if (neighbor_sum < 1 - a) return false;
  }
  return true;
}

inline constexpr std::size_t kMwdsExactLimit = 30;

namespace detail {

// Lexicographically smaller member set over lex-indexed bit masks: at the
// lowest differing index, the smaller set is the one containing it.
inline bool lex_smaller_mask(std::uint64_t a, std::uint64_t b) {
  std::uint64_t diff = a ^ b;
  if (diff == 0) return false;
  std::uint64_t lowest = diff & (~diff + 1);
  return (a & lowest) != 0;
}

struct MwdsSearch {
  std::size_t n = 0;
  std::uint64_t full = 0;
  std::vector<double> weight;
  std::vector<std::uint64_t> cover;  // closed neighborhood masks

  double best_weight = 0.0;
  std::uint64_t best_mask = 0;

  static constexpr double kTieTol = 1e-9;

  // Amortized bound: each uncovered vertex pays at least the cheapest
  // per-new-coverage rate any remaining candidate could offer it.
  double lower_bound(std::uint64_t uncovered, std::uint64_t available,
                     bool& feasible) const {
    feasible = true;
    double bound = 0.0;
    for (std::size_t u = 0; u < n; ++u) {
      if (!(uncovered >> u & 1)) continue;
      std::uint64_t candidates = cover[u] & available;
      if (candidates == 0) {
        feasible = false;
        return 0.0;
      }
      double best_rate = -1.0;
      for (std::size_t c = 0; c < n; ++c) {
        if (!(candidates >> c & 1)) continue;
        double rate =
            weight[c] / static_cast<double>(__builtin_popcountll(cover[c] & uncovered));
        if (best_rate < 0.0 || rate < best_rate) best_rate = rate;
      }
      bound += best_rate;
    }
    return bound;
  }

  void offer(std::uint64_t mask, double w) {
    if (w < best_weight - kTieTol ||
        (w <= best_weight + kTieTol && lex_smaller_mask(mask, best_mask))) {
      best_weight = w;
      best_mask = mask;
    }
  }

  void search(std::size_t idx, std::uint64_t chosen, std::uint64_t covered,
              double chosen_weight) {
    if (covered == full) {
      // Weights are positive, so excluding the rest is optimal here.
      offer(chosen, chosen_weight);
      return;
    }
    if (idx == n) return;

    std::uint64_t available = full & ~((std::uint64_t{1} << idx) - 1);
    bool feasible = true;
    double bound =
        chosen_weight + lower_bound(full & ~covered, available, feasible);
    if (!feasible || bound > best_weight + kTieTol) return;
    if (bound > best_weight - kTieTol) {
      // No strict improvement possible; only an equal-weight set that is
      // lexicographically smaller can still displace the incumbent, and
      // that requires the decided prefix not to exceed the incumbent's.
      std::uint64_t prefix = (std::uint64_t{1} << idx) - 1;
      std::uint64_t inc_prefix = best_mask & prefix;
      if (chosen != inc_prefix && !lex_smaller_mask(chosen, inc_prefix))
        return;
    }

    std::uint64_t bit = std::uint64_t{1} << idx;
    search(idx + 1, chosen | bit, covered | cover[idx],
           chosen_weight + weight[idx]);
    search(idx + 1, chosen, covered, chosen_weight);
  }
};

}  // namespace detail

/// Greedy approximation: repeatedly take the vertex with the smallest
/// weight per newly covered vertex (a vertex covers itself and its
/// neighbors), ties to the lexicographically smallest id. Always feasible.
inline DominatingSet mwds_greedy(const Graph& g) {
  DominatingSet result;
  result.method = MwdsMethod::Greedy;

  std::set<VertexId> covered;
  while (covered.size() < g.vertex_count()) {
    VertexId best;
    double best_w = 0.0;
    std::size_t best_new = 0;
    for (const auto& [v, w] : g.vertices()) {
      if (result.members.count(v)) continue;
      std::size_t newly = covered.count(v) ? 0 : 1;
      for (const auto& [u, ew] : g.adjacent(v))
        if (!covered.count(u)) ++newly;
      if (newly == 0) continue;
      // w / newly < best_w / best_new, cross-multiplied; first seen wins ties.
      if (best_new == 0 || w * static_cast<double>(best_new) <
                               best_w * static_cast<double>(newly)) {
        best = v;
        best_w = w;
        best_new = newly;
      }
    }
    result.members.insert(best);
    result.total_weight += best_w;
    covered.insert(best);
    for (const auto& [u, ew] : g.adjacent(best)) covered.insert(u);
  }
  return result;
}

/// Globally minimum-weight dominating set by branch-and-bound over
/// inclusion decisions in lexicographic vertex order; among equal-weight
/// optima returns the lexicographically smallest member set. Graphs
/// larger than `size_limit` vertices are rejected.
inline DominatingSet mwds_exact(const Graph& g,
                                std::size_t size_limit = kMwdsExactLimit) {
  if (g.vertex_count() > std::min<std::size_t>(size_limit, 64))
    throw BudgetError("graph has " + std::to_string(g.vertex_count()) +
                      " vertices, above the exact solver limit of " +
                      std::to_string(size_limit) + "; use the greedy method");

  detail::MwdsSearch s;
  s.n = g.vertex_count();
  s.full = s.n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << s.n) - 1;

  std::vector<VertexId> ids;
  std::map<VertexId, std::size_t> index;
  for (const auto& [v, w] : g.vertices()) {
    index[v] = ids.size();
    ids.push_back(v);
    s.weight.push_back(w);
  }
  s.cover.assign(s.n, 0);
  for (std::size_t i = 0; i < s.n; ++i) {
    s.cover[i] |= std::uint64_t{1} << i;
    for (const auto& [u, w] : g.adjacent(ids[i]))
      s.cover[i] |= std::uint64_t{1} << index.at(u);
  }

  // Greedy incumbent gives the search a finite starting bound.
  DominatingSet greedy = mwds_greedy(g);
  s.best_weight = greedy.total_weight;
  for (const VertexId& v : greedy.members)
    s.best_mask |= std::uint64_t{1} << index.at(v);

  s.search(0, 0, 0, 0.0);

  DominatingSet result;
  result.method = MwdsMethod::Exact;
  for (std::size_t i = 0; i < s.n; ++i) {
    if (s.best_mask >> i & 1) {
      result.members.insert(ids[i]);
      result.total_weight += s.weight[i];
    }
  }
  return result;
}

}  // namespace stegnet
