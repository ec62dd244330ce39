#pragma once

// Directed capacitated view of an undirected graph, max-flow by shortest
// augmenting paths or blocking flows, and minimum-cut extraction from
// source-side residual reachability.

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "stegnet/graph.hpp"

namespace stegnet {

// Saturation / residual-usability tolerance. Bundled fixtures use integer
// weights, so this never decides a test; it guards real-weight instances.
inline constexpr double kFlowTol = 1e-9;

enum class FlowAlgorithm { AugmentingPath, BlockingFlow };

inline std::string_view flow_algorithm_name(FlowAlgorithm a) {
  return a == FlowAlgorithm::AugmentingPath ? "augmenting-path"
                                            : "blocking-flow";
}

struct Arc {
  Weight capacity = 0.0;
  double flow = 0.0;  // kept in [0, capacity]
};

/// Flow network over a Graph: every undirected edge (u,v,w) becomes the
/// arc pair u->v and v->u, each with capacity w. Opposing flows are
/// cancelled on push, so at most one arc of a pair carries flow.
class FlowNetwork {
 public:
  FlowNetwork(const Graph& g, const VertexId& source, const VertexId& sink)
      : source_(source), sink_(sink) {
    if (!g.has_vertex(source)) throw Error("unknown vertex '" + source + "'");
    if (!g.has_vertex(sink)) throw Error("unknown vertex '" + sink + "'");
    if (source == sink) throw Error("source and sink must differ");
    for (const auto& [id, w] : g.vertices()) {
      vertices_.insert(id);
      out_[id];  // ensure entry
    }
    for (const auto& [key, w] : g.edges()) {
      arcs_[{key.first, key.second}] = Arc{w, 0.0};
      arcs_[{key.second, key.first}] = Arc{w, 0.0};
      out_[key.first].push_back(key.second);
      out_[key.second].push_back(key.first);
    }
    for (auto& [id, heads] : out_) std::sort(heads.begin(), heads.end());
  }

  const VertexId& source() const { return source_; }
  const VertexId& sink() const { return sink_; }
  const std::set<VertexId>& vertices() const { return vertices_; }
  const std::map<std::pair<VertexId, VertexId>, Arc>& arcs() const {
    return arcs_;
  }
  const std::vector<VertexId>& out_neighbors(const VertexId& v) const {
    return out_.at(v);
  }

  // Residual capacity of direction u->v: unused forward capacity plus
  // whatever flow on v->u could be undone.
  double residual(const VertexId& u, const VertexId& v) const {
    const Arc& fwd = arcs_.at({u, v});
    const Arc& rev = arcs_.at({v, u});
    return fwd.capacity - fwd.flow + rev.flow;
  }

  // Route `amount` along u->v, cancelling opposing flow first.
  void push(const VertexId& u, const VertexId& v, double amount) {
    Arc& fwd = arcs_[{u, v}];
    Arc& rev = arcs_[{v, u}];
    double cancelled = std::min(rev.flow, amount);
    rev.flow -= cancelled;
    fwd.flow += amount - cancelled;
  }

  void reset_flows() {
    for (auto& [key, arc] : arcs_) arc.flow = 0.0;
  }

  double flow_value() const {
    double out = 0.0;
    for (const VertexId& v : out_.at(source_)) out += arcs_.at({source_, v}).flow;
    return out;
  }

  // inflow - outflow; zero (within tolerance) everywhere but the terminals.
  double vertex_imbalance(const VertexId& v) const {
    double balance = 0.0;
    for (const VertexId& u : out_.at(v)) {
      balance += arcs_.at({u, v}).flow;
      balance -= arcs_.at({v, u}).flow;
    }
    return balance;
  }

 private:
  VertexId source_;
  VertexId sink_;
  std::set<VertexId> vertices_;
  std::map<std::pair<VertexId, VertexId>, Arc> arcs_;
  std::map<VertexId, std::vector<VertexId>> out_;
};

inline FlowNetwork to_flow_network(const Graph& g, const VertexId& source,
                                   const VertexId& sink) {
  return FlowNetwork(g, source, sink);
}

struct FlowResult {
  double value = 0.0;
  std::map<std::pair<VertexId, VertexId>, double> arc_flows;
  FlowAlgorithm algorithm = FlowAlgorithm::BlockingFlow;
};

struct CutResult {
  std::set<VertexId> source_side;
  std::vector<EdgeKey> cut_edges;  // canonical (min, max) order
  Weight weight = 0.0;
};

namespace detail {

// Shortest augmenting paths by arc count; BFS explores neighbors in
// lexicographic order, so among equal-length paths the lexicographically
// smallest vertex sequence is augmented first.
inline double max_flow_augmenting(FlowNetwork& net) {
  double total = 0.0;
  for (;;) {
    std::map<VertexId, VertexId> parent;
    parent.emplace(net.source(), net.source());
    std::deque<VertexId> queue{net.source()};
    bool found = false;
    while (!queue.empty() && !found) {
      VertexId u = queue.front();
      queue.pop_front();
      for (const VertexId& v : net.out_neighbors(u)) {
        if (parent.count(v) || net.residual(u, v) <= kFlowTol) continue;
        parent.emplace(v, u);
        if (v == net.sink()) {
          found = true;
          break;
        }
        queue.push_back(v);
      }
    }
    if (!found) break;

    double bottleneck = std::numeric_limits<double>::infinity();
    for (VertexId v = net.sink(); v != net.source(); v = parent.at(v))
      bottleneck = std::min(bottleneck, net.residual(parent.at(v), v));
    for (VertexId v = net.sink(); v != net.source(); v = parent.at(v))
      net.push(parent.at(v), v, bottleneck);
    total += bottleneck;
  }
  return total;
}

// Level graph + blocking flow (Dinic), arcs scanned in lexicographic order.
inline double max_flow_blocking(FlowNetwork& net) {
  double total = 0.0;
  for (;;) {
    std::map<VertexId, int> level;
    level.emplace(net.source(), 0);
    std::deque<VertexId> queue{net.source()};
    while (!queue.empty()) {
      VertexId u = queue.front();
      queue.pop_front();
      for (const VertexId& v : net.out_neighbors(u)) {
        if (level.count(v) || net.residual(u, v) <= kFlowTol) continue;
        level.emplace(v, level.at(u) + 1);
        queue.push_back(v);
      }
    }
    if (!level.count(net.sink())) break;

    std::map<VertexId, std::size_t> next_arc;
    std::function<double(const VertexId&, double)> augment =
        [&](const VertexId& u, double limit) -> double {
      if (u == net.sink()) return limit;
      const auto& heads = net.out_neighbors(u);
      for (std::size_t& i = next_arc[u]; i < heads.size(); ++i) {
        const VertexId& v = heads[i];
        auto lv = level.find(v);
        if (lv == level.end() || lv->second != level.at(u) + 1) continue;
        double r = net.residual(u, v);
        if (r <= kFlowTol) continue;
        double pushed = augment(v, std::min(limit, r));
        if (pushed > kFlowTol) {
          net.push(u, v, pushed);
          return pushed;
        }
      }
      return 0.0;
    };

    for (;;) {
      double pushed =
          augment(net.source(), std::numeric_limits<double>::infinity());
      if (pushed <= kFlowTol) break;
      total += pushed;
    }
  }
  return total;
}

}  // namespace detail

/// Computes a maximum flow; flows are left on the network for residual
/// inspection. Both algorithms yield the same value.
inline FlowResult max_flow(FlowNetwork& net,
                           FlowAlgorithm algorithm = FlowAlgorithm::BlockingFlow) {
  net.reset_flows();
  FlowResult result;
  result.algorithm = algorithm;
  result.value = algorithm == FlowAlgorithm::AugmentingPath
                     ? detail::max_flow_augmenting(net)
                     : detail::max_flow_blocking(net);
  for (const auto& [key, arc] : net.arcs()) result.arc_flows[key] = arc.flow;
  return result;
}

/// Vertices reachable from the source through arcs with positive residual
/// capacity; depth-first with lexicographic child ordering. With a maximum
/// flow in place this is the source side of the canonical minimum cut.
inline std::set<VertexId> residual_reachable(const FlowNetwork& net) {
  std::set<VertexId> reached;
  std::function<void(const VertexId&)> visit = [&](const VertexId& u) {
    reached.insert(u);
    for (const VertexId& v : net.out_neighbors(u))
      if (!reached.count(v) && net.residual(u, v) > kFlowTol) visit(v);
  };
  visit(net.source());
  return reached;
}

/// Max-flow then residual reachability; the cut edges are exactly the
/// original undirected edges crossing (A, V \ A). Source-side-minimal,
/// hence canonical among minimum cuts.
inline CutResult min_cut(FlowNetwork& net,
                         FlowAlgorithm algorithm = FlowAlgorithm::BlockingFlow) {
  max_flow(net, algorithm);
  CutResult cut;
  cut.source_side = residual_reachable(net);
  for (const auto& [key, arc] : net.arcs()) {
    if (key.first >= key.second) continue;  // visit each edge pair once
    bool a_in = cut.source_side.count(key.first) > 0;
    bool b_in = cut.source_side.count(key.second) > 0;
    if (a_in != b_in) {
      cut.cut_edges.push_back(key);
      cut.weight += arc.capacity;
    }
  }
  return cut;
}

}  // namespace stegnet
