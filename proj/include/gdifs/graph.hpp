#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gdifs/similarity.hpp"

namespace gdifs {

using VertexId = std::size_t;
using EdgeId = std::size_t;

inline constexpr std::uint64_t kDefaultPathCap = 1'000'000;

// Edge e from i(e) = `from` to t(e) = `to`. Its map sends the copy of the unit
// interval at `to` into the copy at `from`, i.e. against the edge direction.
struct Edge {
  std::string id;
  VertexId from = 0;
  VertexId to = 0;
  Similarity map;
};

// Name-based edge description used to build a graph.
struct EdgeSpec {
  std::string id;
  std::string from;
  std::string to;
  Similarity map;
};

// A finite path as a sequence of edge indices. Whether it is consecutive is a
// property relative to a graph; see GraphIFS::is_consecutive.
struct Path {
  std::vector<EdgeId> edges;

  std::size_t length() const { return edges.size(); }
  bool empty() const { return edges.empty(); }
  Path concat(const Path& tail) const;
  bool has_prefix(const Path& prefix) const;

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;
};

// Directed-graph IFS on the line. Immutable after build(). Vertices and edges
// keep their declaration order, which is also the order used for every
// lexicographic enumeration.
class GraphIFS {
 public:
  // Throws StructuralError on duplicate vertex/edge ids, or on an edge naming
  // an undeclared vertex.
  static GraphIFS build(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<EdgeId>& out_edges(VertexId u) const { return out_.at(u); }
  const std::string& vertex_name(VertexId u) const { return vertices_.at(u); }

  // Name lookups; throw ArgumentError for unknown names.
  VertexId vertex(std::string_view name) const;
  EdgeId edge_id(std::string_view id) const;
  Path path(const std::vector<std::string>& edge_ids) const;

  bool is_consecutive(const Path& p) const;
  VertexId initial(const Path& p) const;
  VertexId terminal(const Path& p) const;
  // v1 v2 ... v_{k+1} = i(e1) t(e1) ... t(ek).
  std::vector<VertexId> vertex_list(const Path& p) const;
  bool attached(const Path& p, VertexId v) const;
  std::vector<std::string> edge_ids(const Path& p) const;
  std::string path_str(const Path& p) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> out_;
};

enum class IssueKind { NotStronglyConnected, OutDegree, RatioRange, HullContainment };

struct ValidationIssue {
  IssueKind kind;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  std::vector<std::string> messages() const;
};

ValidationReport validate_graph(const GraphIFS& ifs);
// Throws ValidationError carrying the report when validation fails.
void require_valid(const GraphIFS& ifs);

bool strongly_connected(const GraphIFS& ifs);

// |E^k_u|, saturating at UINT64_MAX.
std::uint64_t count_paths(const GraphIFS& ifs, VertexId u, unsigned k);

// E^k_u in lexicographic order. Throws ResourceError when |E^k_u| > cap.
std::vector<Path> paths_from(const GraphIFS& ifs, VertexId u, unsigned k,
                             std::uint64_t cap = kDefaultPathCap);

// Every simple cycle once, rotated to start at its smallest vertex, sorted.
std::vector<Path> simple_cycles(const GraphIFS& ifs);

bool is_simple_cycle(const GraphIFS& ifs, const Path& p);
bool is_simple_path(const GraphIFS& ifs, const Path& p);

// Shortest u->w path by BFS, ties broken by edge order. Throws ArgumentError
// if u == w; nullopt if w is unreachable.
std::optional<Path> simple_path(const GraphIFS& ifs, VertexId u, VertexId w);

// S_e1 o S_e2 o ... o S_ek. Throws ArgumentError for an empty or
// non-consecutive path.
Similarity path_similarity(const GraphIFS& ifs, const Path& p);

struct EndpointFlags {
  bool contains_zero = false;
  bool contains_one = false;
};

// Whether 0 and 1 belong to each component F_u. Throws UnsupportedError when
// any edge map reflects.
std::vector<EndpointFlags> endpoint_fixed_check(const GraphIFS& ifs);

// {0,1} in every F_u and every level-1 hull inside [0,1].
bool defined_on_unit_interval(const GraphIFS& ifs);

// 64-bit FNV-1a over a canonical rendering of vertices and edges, as 16 hex
// digits. Identifies the subject of a certificate.
std::string graph_digest(const GraphIFS& ifs);

}  // namespace gdifs
