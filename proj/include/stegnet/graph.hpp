#pragma once

// Weighted undirected steganographer-network graph: vertex/edge model,
// SGN text format, neighbor queries, deterministic random instances.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace stegnet {

using VertexId = std::string;
using Weight = double;

// Unordered vertex pair, stored normalized (first <= second).
using EdgeKey = std::pair<VertexId, VertexId>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input document error; carries the 1-based line number.
struct ParseError : Error {
  int line;
  ParseError(int line_no, const std::string& msg)
      : Error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

// Requested connection does not exist (no path, unreachable terminals).
struct InfeasibleError : Error {
  using Error::Error;
};

// Instance exceeds a solver or oracle size ceiling.
struct BudgetError : Error {
  using Error::Error;
};

inline bool valid_vertex_id(std::string_view id) {
  if (id.empty()) return false;
  for (char c : id) {
    bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
              (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

inline EdgeKey edge_key(const VertexId& a, const VertexId& b) {
  return a < b ? EdgeKey{a, b} : EdgeKey{b, a};
}

// Shortest decimal form that parses back to the same double ("1", "2.5").
inline std::string format_weight(Weight w) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, w);
  return std::string(buf, res.ptr);
}

/// Immutable-after-construction undirected graph with positive vertex
/// weights and non-negative edge weights. At most one edge per vertex
/// pair, no self-loops. All iteration orders are lexicographic.
class Graph {
 public:
  Graph() = default;

  void add_vertex(const VertexId& id, Weight weight = 1.0) {
    if (!valid_vertex_id(id))
      throw Error("invalid vertex id '" + id + "'");
    if (!std::isfinite(weight) || weight <= 0.0)
      throw Error("vertex weight must be positive and finite");
    if (!vertices_.emplace(id, weight).second)
      throw Error("duplicate vertex id '" + id + "'");
    adjacency_.emplace(id, std::map<VertexId, Weight>{});
  }

  void add_edge(const VertexId& a, const VertexId& b, Weight weight) {
    if (!has_vertex(a)) throw Error("unknown vertex '" + a + "'");
    if (!has_vertex(b)) throw Error("unknown vertex '" + b + "'");
    if (a == b) throw Error("self-loop at vertex '" + a + "'");
    if (!std::isfinite(weight) || weight < 0.0)
      throw Error("edge weight must be non-negative and finite");
    if (!edges_.emplace(edge_key(a, b), weight).second)
      throw Error("duplicate edge '" + a + " " + b + "'");
    adjacency_[a].emplace(b, weight);
    adjacency_[b].emplace(a, weight);
  }

  bool has_vertex(const VertexId& id) const { return vertices_.count(id) > 0; }

  bool has_edge(const VertexId& a, const VertexId& b) const {
    return edges_.count(edge_key(a, b)) > 0;
  }

  Weight vertex_weight(const VertexId& id) const {
    auto it = vertices_.find(id);
    if (it == vertices_.end()) throw Error("unknown vertex '" + id + "'");
    return it->second;
  }

  Weight edge_weight(const VertexId& a, const VertexId& b) const {
    auto it = edges_.find(edge_key(a, b));
    if (it == edges_.end())
      throw Error("unknown edge '" + a + " " + b + "'");
    return it->second;
  }

  const std::map<VertexId, Weight>& vertices() const { return vertices_; }
  const std::map<EdgeKey, Weight>& edges() const { return edges_; }

  // Neighbor -> edge weight, lexicographic order.
  const std::map<VertexId, Weight>& adjacent(const VertexId& id) const {
    auto it = adjacency_.find(id);
    if (it == adjacency_.end()) throw Error("unknown vertex '" + id + "'");
    return it->second;
  }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool operator==(const Graph&) const = default;

 private:
  std::map<VertexId, Weight> vertices_;
  std::map<EdgeKey, Weight> edges_;
  std::map<VertexId, std::map<VertexId, Weight>> adjacency_;
};

inline std::vector<VertexId> neighbors(const Graph& g, const VertexId& v) {
  std::vector<VertexId> out;
  for (const auto& [u, w] : g.adjacent(v)) out.push_back(u);
  return out;
}

// Breadth-first reachability, neighbors explored in lexicographic order.
// has_path(g, v, v) is true (the empty path).
inline bool has_path(const Graph& g, const VertexId& from, const VertexId& to) {
  g.adjacent(to);  // validate
  if (from == to) return true;
  std::set<VertexId> seen{from};
  std::deque<VertexId> queue{from};
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    for (const auto& [v, w] : g.adjacent(u)) {
      if (v == to) return true;
      if (seen.insert(v).second) queue.push_back(v);
    }
  }
  return false;
}

inline Weight total_edge_weight(const Graph& g) {
  Weight total = 0.0;
  for (const auto& [key, w] : g.edges()) total += w;
  return total;
}

struct ParseOptions {
  // Declare edge endpoints (weight 1) that never appear on a `v` line.
  bool auto_declare_vertices = false;
};

namespace detail {

inline std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

inline bool parse_finite(std::string_view token, double& out) {
  auto res = std::from_chars(token.data(), token.data() + token.size(), out);
  return res.ec == std::errc{} && res.ptr == token.data() + token.size() &&
         std::isfinite(out);
}

inline Weight parse_positive_weight(std::string_view token, int line_no) {
  double w;
  if (!parse_finite(token, w) || w <= 0.0)
    throw ParseError(line_no, "non-positive or non-finite weight '" +
                                  std::string(token) + "'");
  return w;
}

}  // namespace detail

/// Parses an SGN document:
///   # comment
///   v <id> [weight]        vertex, weight defaults to 1
///   e <id1> <id2> <weight> undirected edge
/// Lines may appear in any order; an edge's endpoints must be declared
/// somewhere in the file unless opts.auto_declare_vertices is set.
inline Graph parse_graph(std::string_view text, ParseOptions opts = {}) {
  // Collect lines with 1-based numbers; the final line may lack '\n'.
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      if (pos < text.size()) lines.push_back(text.substr(pos));
      break;
    }
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }

  Graph g;
  struct PendingEdge {
    int line;
    std::string_view a, b, weight;
  };
  std::vector<PendingEdge> pending;

  for (std::size_t i = 0; i < lines.size(); ++i) {
    int line_no = static_cast<int>(i) + 1;
    auto fields = detail::split_fields(lines[i]);
    if (fields.empty() || fields[0].front() == '#') continue;
    if (fields[0] == "v") {
      if (fields.size() != 2 && fields.size() != 3)
        throw ParseError(line_no, "malformed vertex line");
      VertexId id(fields[1]);
      if (!valid_vertex_id(id))
        throw ParseError(line_no, "invalid vertex id '" + id + "'");
      Weight w = fields.size() == 3
                     ? detail::parse_positive_weight(fields[2], line_no)
                     : 1.0;
      if (g.has_vertex(id))
        throw ParseError(line_no, "duplicate vertex id '" + id + "'");
      g.add_vertex(id, w);
    } else if (fields[0] == "e") {
      if (fields.size() != 4)
        throw ParseError(line_no, "malformed edge line");
      pending.push_back({line_no, fields[1], fields[2], fields[3]});
    } else {
      throw ParseError(line_no, "malformed line");
    }
  }

  for (const auto& pe : pending) {
    VertexId a(pe.a), b(pe.b);
    for (const VertexId* id : {&a, &b}) {
      if (!valid_vertex_id(*id))
        throw ParseError(pe.line, "invalid vertex id '" + *id + "'");
      if (!g.has_vertex(*id)) {
        if (!opts.auto_declare_vertices)
          throw ParseError(pe.line,
                           "edge references undeclared vertex '" + *id + "'");
        g.add_vertex(*id);
      }
    }
    if (a == b) throw ParseError(pe.line, "self-loop at vertex '" + a + "'");
    if (g.has_edge(a, b))
      throw ParseError(pe.line, "duplicate edge '" + a + " " + b + "'");
    g.add_edge(a, b, detail::parse_positive_weight(pe.weight, pe.line));
  }
  return g;
}

/// Canonical document: vertices sorted by id, then edges sorted by
/// (min endpoint, max endpoint). parse_graph(serialize_graph(g)) == g.
inline std::string serialize_graph(const Graph& g) {
  std::string out;
  for (const auto& [id, w] : g.vertices())
    out += "v " + id + " " + format_weight(w) + "\n";
  for (const auto& [key, w] : g.edges())
    out += "e " + key.first + " " + key.second + " " + format_weight(w) + "\n";
  return out;
}

/// Seeded Erdos-Renyi-style instance; byte-stable across platforms.
/// The draw sequence is fixed (see README): one mt19937_64 stream,
/// units u = (next() >> 11) * 2^-53; for each index pair i < j in order,
/// an edge exists when u < p, and a present edge's weight is a second
/// draw mapped to lo + u * (hi - lo). Vertex ids are v0..v{n-1}.
inline Graph random_graph(std::size_t n, double p, Weight lo, Weight hi,
                          std::uint64_t seed) {
  if (n < 1) throw Error("random_graph: vertex count must be >= 1");
  if (!(p >= 0.0 && p <= 1.0))
    throw Error("random_graph: edge probability must be in [0, 1]");
  if (!std::isfinite(lo) || !std::isfinite(hi) || lo <= 0.0 || hi < lo)
    throw Error("random_graph: invalid weight range");

  std::mt19937_64 rng(seed);
  auto unit = [&rng] {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };

  Graph g;
  std::vector<VertexId> ids;
  ids.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    ids.push_back("v" + std::to_string(i));
    g.add_vertex(ids.back());
  }
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (unit() < p) g.add_edge(ids[i], ids[j], lo + unit() * (hi - lo));
  return g;
}

}  // namespace stegnet
