#pragma once

// Cayley graphs Cay(D_2n, S) with generator-labeled edges. Vertices are the
// 2n group elements; g and h are adjacent iff h = s*g for some s in S.

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hamdec/dihedral.hpp"

namespace hamdec {

class ValidationError : public std::runtime_error {
 public:
  enum class Kind {
    kContainsIdentity,
    kNotInverseClosed,
    kNotGenerating,
    kDuplicateElement,
  };

  ValidationError(Kind kind, std::string message, std::string witness = "")
      : std::runtime_error(std::move(message)), kind(kind), witness(std::move(witness)) {}

  Kind kind;
  std::string witness;  // offending element token, when applicable
};

// Validated connection set: identity-free, inverse-closed, generating.
struct ConnectionSet {
  int n = 0;
  std::vector<GroupElement> elements;     // sorted by vertex index
  std::vector<GroupElement> rotations;    // S1 = S intersect <a>
  std::vector<GroupElement> reflections;  // S2 = S intersect b<a>
  std::vector<GroupElement> classes;      // canonical generator classes, sorted
};

ConnectionSet validate_connection_set(int n, std::vector<GroupElement> raw);

// Comma-separated element tokens, e.g. "r1,r6,s0". Rejects duplicates.
ConnectionSet parse_connection_set(int n, std::string_view csv);

// Canonical class of a generator: a reflection stands for itself; a rotation
// pair {s, s^-1} is represented by the exponent in [1, n/2].
GroupElement canonical_class(const GroupElement& s);

// Unordered endpoint pair as (smaller, larger) vertex index.
using EdgeKey = std::pair<int, int>;
EdgeKey edge_key(const GroupElement& u, const GroupElement& v);
std::string edge_token(int n, const EdgeKey& key);

struct LabeledEdge {
  GroupElement u, v;   // vertex_index(u) < vertex_index(v)
  GroupElement label;  // canonical generator class

  EdgeKey key() const { return {vertex_index(u), vertex_index(v)}; }
};

struct CayleyGraph {
  ConnectionSet set;
  std::vector<LabeledEdge> edges;           // sorted by key
  std::vector<std::vector<int>> incident;   // vertex index -> edge ids
  std::map<EdgeKey, int> edge_index;        // key -> edge id

  int n() const { return set.n; }
  int vertex_count() const { return 2 * set.n; }
  int degree(int vertex) const { return static_cast<int>(incident[vertex].size()); }
  const LabeledEdge* find_edge(const EdgeKey& key) const;
  bool adjacent(const GroupElement& u, const GroupElement& v) const;
};

CayleyGraph build_graph(const ConnectionSet& s);

// Closed vertex sequence; the last vertex is adjacent to the first.
struct Cycle {
  std::vector<GroupElement> vertices;

  int length() const { return static_cast<int>(vertices.size()); }
  friend bool operator==(const Cycle&, const Cycle&) = default;
};

// Rotates/reflects the sequence so it starts at the smallest vertex and its
// second vertex is the smaller of the two neighbors. Requires length >= 3
// and distinct vertices.
Cycle canonical_cycle(std::vector<GroupElement> vertices);

std::vector<EdgeKey> cycle_edge_keys(const Cycle& c);

// All edges of one generator class: n edges (a perfect matching) for a
// reflection, 2n edges for a rotation inverse pair.
std::vector<LabeledEdge> class_edges(const CayleyGraph& g, const GroupElement& cls);

// The two n-cycles traced by a rotation class with gcd(exponent, n) = 1, one
// per coset.
struct CosetCycles {
  Cycle on_rotations;    // within <a>
  Cycle on_reflections;  // within b<a>
};
CosetCycles coset_cycles(const CayleyGraph& g, const GroupElement& rotation_cls);

}  // namespace hamdec
