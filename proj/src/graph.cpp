#include "gdifs/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <set>
#include <unordered_map>

#include "gdifs/errors.hpp"

namespace gdifs {

Path Path::concat(const Path& tail) const {
  Path out = *this;
  out.edges.insert(out.edges.end(), tail.edges.begin(), tail.edges.end());
  return out;
}

bool Path::has_prefix(const Path& prefix) const {
  return prefix.edges.size() <= edges.size() &&
         std::equal(prefix.edges.begin(), prefix.edges.end(), edges.begin());
}

GraphIFS GraphIFS::build(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges) {
  GraphIFS g;
  std::unordered_map<std::string, VertexId> index;
  for (VertexId v = 0; v < vertices.size(); ++v) {
    if (!index.emplace(vertices[v], v).second) {
      throw StructuralError("duplicate vertex id \"" + vertices[v] + "\"");
    }
  }
  g.vertices_ = std::move(vertices);
  g.out_.resize(g.vertices_.size());
  std::set<std::string> seen_edges;
  for (const EdgeSpec& spec : edges) {
    if (!seen_edges.insert(spec.id).second) {
      throw StructuralError("duplicate edge id \"" + spec.id + "\"");
    }
    auto from = index.find(spec.from);
    auto to = index.find(spec.to);
    if (from == index.end() || to == index.end()) {
      const std::string& bad = from == index.end() ? spec.from : spec.to;
      throw StructuralError("edge \"" + spec.id + "\" references undeclared vertex \"" + bad +
                            "\"");
    }
    g.out_[from->second].push_back(g.edges_.size());
    g.edges_.push_back(Edge{spec.id, from->second, to->second, spec.map});
  }
  return g;
}

VertexId GraphIFS::vertex(std::string_view name) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end()) throw ArgumentError("unknown vertex \"" + std::string(name) + "\"");
  return static_cast<VertexId>(it - vertices_.begin());
}

EdgeId GraphIFS::edge_id(std::string_view id) const {
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    if (edges_[e].id == id) return e;
  }
  throw ArgumentError("unknown edge \"" + std::string(id) + "\"");
}

Path GraphIFS::path(const std::vector<std::string>& edge_ids) const {
  Path p;
  for (const auto& id : edge_ids) p.edges.push_back(edge_id(id));
  return p;
}

bool GraphIFS::is_consecutive(const Path& p) const {
  if (p.empty()) return false;
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    if (p.edges[i] >= edges_.size()) return false;
    if (i > 0 && edges_[p.edges[i - 1]].to != edges_[p.edges[i]].from) return false;
  }
  return true;
}

VertexId GraphIFS::initial(const Path& p) const { return edges_.at(p.edges.front()).from; }
VertexId GraphIFS::terminal(const Path& p) const { return edges_.at(p.edges.back()).to; }

std::vector<VertexId> GraphIFS::vertex_list(const Path& p) const {
  std::vector<VertexId> out;
  if (p.empty()) return out;
  out.push_back(initial(p));
  for (EdgeId e : p.edges) out.push_back(edges_.at(e).to);
  return out;
}

bool GraphIFS::attached(const Path& p, VertexId v) const {
  const auto vl = vertex_list(p);
  return std::find(vl.begin(), vl.end(), v) != vl.end();
}

std::vector<std::string> GraphIFS::edge_ids(const Path& p) const {
  std::vector<std::string> out;
  out.reserve(p.edges.size());
  for (EdgeId e : p.edges) out.push_back(edges_.at(e).id);
  return out;
}

std::string GraphIFS::path_str(const Path& p) const {
  std::string s;
  for (EdgeId e : p.edges) {
    if (!s.empty()) s += ' ';
    s += edges_.at(e).id;
  }
  return s;
}

std::vector<std::string> ValidationReport::messages() const {
  std::vector<std::string> out;
  for (const auto& i : issues) out.push_back(i.message);
  return out;
}

namespace {

std::vector<bool> reachable(const GraphIFS& ifs, VertexId start, bool reverse) {
  std::vector<bool> seen(ifs.vertex_count(), false);
  std::deque<VertexId> queue{start};
  seen[start] = true;
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop_front();
    for (const Edge& e : ifs.edges()) {
      const VertexId a = reverse ? e.to : e.from;
      const VertexId b = reverse ? e.from : e.to;
      if (a == x && !seen[b]) {
        seen[b] = true;
        queue.push_back(b);
      }
    }
  }
  return seen;
}

}  // namespace

bool strongly_connected(const GraphIFS& ifs) {
  if (ifs.vertex_count() == 0) return false;
  const auto fwd = reachable(ifs, 0, false);
  const auto bwd = reachable(ifs, 0, true);
  return std::all_of(fwd.begin(), fwd.end(), [](bool b) { return b; }) &&
         std::all_of(bwd.begin(), bwd.end(), [](bool b) { return b; });
}

ValidationReport validate_graph(const GraphIFS& ifs) {
  ValidationReport report;
  if (!strongly_connected(ifs)) {
    report.issues.push_back({IssueKind::NotStronglyConnected, "graph is not strongly connected"});
  }
  for (VertexId u = 0; u < ifs.vertex_count(); ++u) {
    if (ifs.out_edges(u).size() < 2) {
      report.issues.push_back(
          {IssueKind::OutDegree, "vertex \"" + ifs.vertex_name(u) + "\" has out-degree " +
                                     std::to_string(ifs.out_edges(u).size()) + " < 2"});
    }
  }
  for (const Edge& e : ifs.edges()) {
    const Rational& r = e.map.ratio();
    if (r.sign() <= 0 || r >= Rational(1)) {
      report.issues.push_back({IssueKind::RatioRange,
                               "edge \"" + e.id + "\" ratio " + r.str() + " not in (0,1)"});
    }
    const Interval hull = e.map.image(unit_interval());
    if (!unit_interval().contains(hull)) {
      report.issues.push_back({IssueKind::HullContainment,
                               "edge \"" + e.id + "\" image [" + hull.lo.str() + ", " +
                                   hull.hi.str() + "] leaves [0,1]"});
    }
  }
  return report;
}

void require_valid(const GraphIFS& ifs) {
  const auto report = validate_graph(ifs);
  if (!report.ok()) {
    std::string what = "invalid graph IFS:";
    for (const auto& i : report.issues) what += " " + i.message + ";";
    throw ValidationError(what, report.messages());
  }
}

std::uint64_t count_paths(const GraphIFS& ifs, VertexId u, unsigned k) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  // counts[v] = number of length-j paths from v; j grows from 0 to k.
  std::vector<std::uint64_t> counts(ifs.vertex_count(), 1);
  for (unsigned j = 0; j < k; ++j) {
    std::vector<std::uint64_t> next(ifs.vertex_count(), 0);
    for (VertexId v = 0; v < ifs.vertex_count(); ++v) {
      for (EdgeId e : ifs.out_edges(v)) {
        const std::uint64_t add = counts[ifs.edge(e).to];
        next[v] = (kMax - next[v] < add) ? kMax : next[v] + add;
      }
    }
    counts = std::move(next);
  }
  return counts.at(u);
}

std::vector<Path> paths_from(const GraphIFS& ifs, VertexId u, unsigned k, std::uint64_t cap) {
  if (k == 0) throw ArgumentError("paths_from: k must be >= 1");
  if (u >= ifs.vertex_count()) throw ArgumentError("paths_from: unknown vertex");
  const std::uint64_t n = count_paths(ifs, u, k);
  if (n > cap) {
    throw ResourceError("paths_from: |E^" + std::to_string(k) + "| = " + std::to_string(n) +
                            " exceeds cap " + std::to_string(cap),
                        n);
  }
  std::vector<Path> out;
  out.reserve(static_cast<std::size_t>(n));
  Path cur;
  std::function<void(VertexId)> walk = [&](VertexId v) {
    if (cur.length() == k) {
      out.push_back(cur);
      return;
    }
    for (EdgeId e : ifs.out_edges(v)) {
      cur.edges.push_back(e);
      walk(ifs.edge(e).to);
      cur.edges.pop_back();
    }
  };
  walk(u);
  return out;
}

std::vector<Path> simple_cycles(const GraphIFS& ifs) {
  std::vector<Path> out;
  const std::size_t n = ifs.vertex_count();
  std::vector<bool> on_path(n, false);
  Path cur;
  // Cycles whose smallest vertex is `root` are found by walking only through
  // vertices greater than root, so each appears exactly once, already in its
  // canonical rotation.
  for (VertexId root = 0; root < n; ++root) {
    std::function<void(VertexId)> walk = [&](VertexId v) {
      for (EdgeId e : ifs.out_edges(v)) {
        const VertexId t = ifs.edge(e).to;
        if (t == root) {
          cur.edges.push_back(e);
          out.push_back(cur);
          cur.edges.pop_back();
        } else if (t > root && !on_path[t]) {
          on_path[t] = true;
          cur.edges.push_back(e);
          walk(t);
          cur.edges.pop_back();
          on_path[t] = false;
        }
      }
    };
    on_path[root] = true;
    walk(root);
    on_path[root] = false;
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_simple_cycle(const GraphIFS& ifs, const Path& p) {
  if (!ifs.is_consecutive(p) || ifs.initial(p) != ifs.terminal(p)) return false;
  auto vl = ifs.vertex_list(p);
  vl.pop_back();
  std::sort(vl.begin(), vl.end());
  return std::adjacent_find(vl.begin(), vl.end()) == vl.end();
}

bool is_simple_path(const GraphIFS& ifs, const Path& p) {
  if (!ifs.is_consecutive(p)) return false;
  auto vl = ifs.vertex_list(p);
  std::sort(vl.begin(), vl.end());
  return std::adjacent_find(vl.begin(), vl.end()) == vl.end();
}

std::optional<Path> simple_path(const GraphIFS& ifs, VertexId u, VertexId w) {
  if (u == w) throw ArgumentError("simple_path: endpoints must differ");
  if (u >= ifs.vertex_count() || w >= ifs.vertex_count()) {
    throw ArgumentError("simple_path: unknown vertex");
  }
  constexpr EdgeId kNone = std::numeric_limits<EdgeId>::max();
  std::vector<EdgeId> via(ifs.vertex_count(), kNone);
  std::vector<bool> seen(ifs.vertex_count(), false);
  std::deque<VertexId> queue{u};
  seen[u] = true;
  while (!queue.empty() && !seen[w]) {
    const VertexId x = queue.front();
    queue.pop_front();
    for (EdgeId e : ifs.out_edges(x)) {
      const VertexId t = ifs.edge(e).to;
      if (!seen[t]) {
        seen[t] = true;
        via[t] = e;
        queue.push_back(t);
      }
    }
  }
  if (!seen[w]) return std::nullopt;
  Path p;
  for (VertexId x = w; x != u; x = ifs.edge(via[x]).from) p.edges.push_back(via[x]);
  std::reverse(p.edges.begin(), p.edges.end());
  return p;
}

Similarity path_similarity(const GraphIFS& ifs, const Path& p) {
  if (!ifs.is_consecutive(p)) {
    throw ArgumentError("path_similarity: path \"" + ifs.path_str(p) + "\" is not consecutive");
  }
  Similarity s = ifs.edge(p.edges.front()).map;
  for (std::size_t i = 1; i < p.edges.size(); ++i) s = s.compose(ifs.edge(p.edges[i]).map);
  return s;
}

namespace {

// Vertices from which an infinite path exists using only edges in `keep`.
std::vector<bool> reaches_cycle(const GraphIFS& ifs, const std::vector<bool>& keep) {
  // Repeatedly strip vertices with no kept out-edge into a surviving vertex;
  // what survives can walk forever.
  std::vector<bool> alive(ifs.vertex_count(), true);
  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexId v = 0; v < ifs.vertex_count(); ++v) {
      if (!alive[v]) continue;
      bool has_next = false;
      for (EdgeId e : ifs.out_edges(v)) {
        if (keep[e] && alive[ifs.edge(e).to]) {
          has_next = true;
          break;
        }
      }
      if (!has_next) {
        alive[v] = false;
        changed = true;
      }
    }
  }
  return alive;
}

}  // namespace

std::vector<EndpointFlags> endpoint_fixed_check(const GraphIFS& ifs) {
  std::vector<bool> fixes_zero(ifs.edge_count());
  std::vector<bool> fixes_one(ifs.edge_count());
  for (EdgeId e = 0; e < ifs.edge_count(); ++e) {
    const Similarity& s = ifs.edge(e).map;
    if (s.reflects()) {
      throw UnsupportedError("endpoint check does not support reflecting edge \"" +
                             ifs.edge(e).id + "\"");
    }
    fixes_zero[e] = s(Rational(0)) == Rational(0);
    fixes_one[e] = s(Rational(1)) == Rational(1);
  }
  const auto zero = reaches_cycle(ifs, fixes_zero);
  const auto one = reaches_cycle(ifs, fixes_one);
  std::vector<EndpointFlags> out(ifs.vertex_count());
  for (VertexId v = 0; v < ifs.vertex_count(); ++v) out[v] = {zero[v], one[v]};
  return out;
}

bool defined_on_unit_interval(const GraphIFS& ifs) {
  for (const Edge& e : ifs.edges()) {
    if (e.map.reflects()) return false;
    if (!unit_interval().contains(e.map.image(unit_interval()))) return false;
  }
  const auto flags = endpoint_fixed_check(ifs);
  return std::all_of(flags.begin(), flags.end(),
                     [](const EndpointFlags& f) { return f.contains_zero && f.contains_one; });
}

std::string graph_digest(const GraphIFS& ifs) {
  std::string canon;
  for (const auto& v : ifs.vertices()) canon += "v " + v + "\n";
  for (const Edge& e : ifs.edges()) {
    canon += "e " + e.id + " " + ifs.vertex_name(e.from) + " " + ifs.vertex_name(e.to) + " " +
             e.map.ratio().str() + " " + e.map.offset().str() + (e.map.reflects() ? " r" : "") +
             "\n";
  }
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canon) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static const char* kHex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = kHex[h & 0xF];
  return out;
}

}  // namespace gdifs
