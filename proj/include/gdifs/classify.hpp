#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gdifs/attractor.hpp"
#include "gdifs/families.hpp"
#include "gdifs/gaps.hpp"
#include "gdifs/measure.hpp"

namespace gdifs {

enum class Verdict { NotStandardAttractor, StandardAttractor, Unknown };

// Which result produced a verdict. These tags are part of the certificate
// format.
enum class TheoremTag { P2M, P2Q, P2T, P2nv1 };

std::string to_string(Verdict v);
std::string to_string(TheoremTag t);
// Throw ArgumentError on unknown names.
Verdict parse_verdict(const std::string& s);
TheoremTag parse_theorem(const std::string& s);

// A simple cycle through w that avoids u, a simple path u -> w, and the union
// V' of both vertex lists (sorted).
struct Condition1Witness {
  VertexId w = 0;
  Path cycle;
  Path path;
  std::vector<VertexId> vprime;
};

// First simple cycle (canonical order) not attached to u, reached by the BFS
// path. nullopt iff every simple cycle passes through u.
std::optional<Condition1Witness> find_condition1_witness(const GraphIFS& ifs, VertexId u);

// A standard IFS for F_u. `sources` names the path behind each map; an edge
// id of the form "x>=y" is an identity edge standing for the containment
// of y's out-edges in x's (see rewrite_as_standard).
struct StandardRewrite {
  std::vector<Similarity> maps;
  std::vector<std::string> sources;
  bool containment_substituted = false;
};

// Maps for F_u when every simple cycle passes through u: paths of length n
// from u, each cut at its first return to u, deduplicated, with any path
// dropped whose proper prefix is also kept. Sorted by image position.
//
// When some cycle avoids u, vertices whose out-edges contain an exact copy of
// another vertex's out-edges are first collapsed onto that vertex through an
// identity edge; if cycles avoiding u remain, throws ArgumentError.
StandardRewrite rewrite_as_standard(const GraphIFS& ifs, VertexId u);
std::vector<Similarity> rewrite_standard_P2nv1(const GraphIFS& ifs, VertexId u);

// Hausdorff measure evidence for the two-vertex family, one entry per vertex
// (vertex 0 then vertex 1). Each h is read from whichever orientation of the
// family satisfies the measure conditions.
struct MeasureEvidence {
  Figure1Params params;
  Real s;
  std::vector<std::optional<Real>> h;
  std::vector<VertexId> required;
};

struct Certificate {
  std::string digest;
  VertexId vertex = 0;
  std::string vertex_name;
  Verdict verdict = Verdict::Unknown;
  TheoremTag theorem = TheoremTag::P2Q;
  unsigned depth = 0;

  StandardRewrite standard;
  std::optional<Condition1Witness> condition1;
  std::optional<Condition2Report> condition2;
  std::vector<SubsetRefutation> refutations;
  std::optional<MeasureEvidence> measure;
  std::optional<Figure1Params> figure1;

  bool reflected = false;
  bool minimal_edges_asserted = false;
  // First unmet condition; set only for Unknown.
  std::string unmet;
  std::vector<std::string> notes;
};

// Both vertices of the two-vertex family. NotStandardAttractor unless
// a == c and b == d, where the system collapses to a standard IFS.
std::pair<Certificate, Certificate> classify_P2M(const Figure1Params& p);

// Gap-comparison test. Throws ValidationError on an invalid graph.
Certificate classify_P2Q(const GraphIFS& ifs, VertexId u, unsigned depth, bool reflected = false);

// Measure test; only the two-vertex family has a computable measure here.
// Throws ValidationError on an invalid graph.
Certificate classify_P2T(const GraphIFS& ifs, VertexId u, unsigned depth,
                         bool minimal_edges_asserted, bool reflected = false);

struct ReplayResult {
  bool ok = true;
  std::vector<std::string> problems;
};

// Re-derives every evidence item of `cert` against `ifs`.
ReplayResult verify_certificate(const GraphIFS& ifs, const Certificate& cert);

}  // namespace gdifs
