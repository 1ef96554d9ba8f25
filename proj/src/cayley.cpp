#include "hamdec/cayley.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace hamdec {

namespace {

void check_element_order(int n, const GroupElement& g, const char* where) {
  if (g.n != n) {
    throw std::invalid_argument(std::string(where) + ": element order " + std::to_string(g.n) +
                                " does not match n=" + std::to_string(n));
  }
}

}  // namespace

ConnectionSet validate_connection_set(int n, std::vector<GroupElement> raw) {
  if (n < 2) throw std::invalid_argument("connection set requires n >= 2");
  for (const auto& g : raw) check_element_order(n, g, "validate_connection_set");

  std::sort(raw.begin(), raw.end(), [](const GroupElement& a, const GroupElement& b) {
    return vertex_index(a) < vertex_index(b);
  });
  auto dup = std::adjacent_find(raw.begin(), raw.end());
  if (dup != raw.end()) {
    throw ValidationError(ValidationError::Kind::kDuplicateElement,
                          "duplicate element " + to_token(*dup), to_token(*dup));
  }

  for (const auto& g : raw) {
    if (is_identity(g)) {
      throw ValidationError(ValidationError::Kind::kContainsIdentity,
                            "connection set contains the identity", to_token(g));
    }
  }
  for (const auto& g : raw) {
    if (!std::binary_search(raw.begin(), raw.end(), inverse(g))) {
      throw ValidationError(ValidationError::Kind::kNotInverseClosed,
                            "inverse of " + to_token(g) + " missing", to_token(g));
    }
  }
  if (!generates(n, raw)) {
    throw ValidationError(ValidationError::Kind::kNotGenerating,
                          "connection set does not generate the group");
  }

  ConnectionSet out;
  out.n = n;
  out.elements = raw;
  std::set<GroupElement> classes;
  for (const auto& g : raw) {
    (g.reflected ? out.reflections : out.rotations).push_back(g);
    classes.insert(canonical_class(g));
  }
  out.classes.assign(classes.begin(), classes.end());
  std::sort(out.classes.begin(), out.classes.end(), [](const GroupElement& a, const GroupElement& b) {
    return vertex_index(a) < vertex_index(b);
  });
  return out;
}

ConnectionSet parse_connection_set(int n, std::string_view csv) {
  std::vector<GroupElement> elements;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    std::size_t comma = csv.find(',', pos);
    if (comma == std::string_view::npos) comma = csv.size();
    std::string_view token = csv.substr(pos, comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (token.empty()) {
      throw std::invalid_argument("empty element token in connection set '" + std::string(csv) + "'");
    }
    elements.push_back(parse_element(n, token));
    pos = comma + 1;
    if (comma == csv.size()) break;
  }
  return validate_connection_set(n, std::move(elements));
}

GroupElement canonical_class(const GroupElement& s) {
  if (is_identity(s)) throw std::invalid_argument("identity has no generator class");
  if (s.reflected) return s;
  return rotation(s.n, std::min(s.exponent, s.n - s.exponent));
}

EdgeKey edge_key(const GroupElement& u, const GroupElement& v) {
  if (u.n != v.n) throw std::invalid_argument("edge_key: mixed group orders");
  int a = vertex_index(u);
  int b = vertex_index(v);
  if (a == b) throw std::invalid_argument("edge_key: endpoints coincide");
  return {std::min(a, b), std::max(a, b)};
}

std::string edge_token(int n, const EdgeKey& key) {
  return to_token(element_at(n, key.first)) + "-" + to_token(element_at(n, key.second));
}

const LabeledEdge* CayleyGraph::find_edge(const EdgeKey& key) const {
  auto it = edge_index.find(key);
  return it == edge_index.end() ? nullptr : &edges[it->second];
}

bool CayleyGraph::adjacent(const GroupElement& u, const GroupElement& v) const {
  return find_edge(edge_key(u, v)) != nullptr;
}

CayleyGraph build_graph(const ConnectionSet& s) {
  CayleyGraph g;
  g.set = s;
  std::map<EdgeKey, LabeledEdge> by_key;
  for (int idx = 0; idx < 2 * s.n; ++idx) {
    GroupElement vertex = element_at(s.n, idx);
    for (const auto& gen : s.elements) {
      GroupElement other = multiply(gen, vertex);
      EdgeKey key = edge_key(vertex, other);
      if (by_key.contains(key)) continue;
      GroupElement u = element_at(s.n, key.first);
      GroupElement v = element_at(s.n, key.second);
      by_key.emplace(key, LabeledEdge{u, v, canonical_class(gen)});
    }
  }
  g.edges.reserve(by_key.size());
  g.incident.resize(2 * s.n);
  for (auto& [key, edge] : by_key) {
    int id = static_cast<int>(g.edges.size());
    g.edge_index.emplace(key, id);
    g.incident[key.first].push_back(id);
    g.incident[key.second].push_back(id);
    g.edges.push_back(std::move(edge));
  }
  return g;
}

Cycle canonical_cycle(std::vector<GroupElement> vertices) {
  const int len = static_cast<int>(vertices.size());
  if (len < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::set<int> indices;
  for (const auto& v : vertices) {
    check_element_order(vertices.front().n, v, "canonical_cycle");
    if (!indices.insert(vertex_index(v)).second) {
      throw std::invalid_argument("cycle repeats vertex " + to_token(v));
    }
  }
  int start = 0;
  for (int i = 1; i < len; ++i) {
    if (vertex_index(vertices[i]) < vertex_index(vertices[start])) start = i;
  }
  int succ = vertex_index(vertices[(start + 1) % len]);
  int pred = vertex_index(vertices[(start + len - 1) % len]);
  std::vector<GroupElement> out;
  out.reserve(len);
  if (succ < pred) {
    for (int i = 0; i < len; ++i) out.push_back(vertices[(start + i) % len]);
  } else {
    for (int i = 0; i < len; ++i) out.push_back(vertices[(start + len - i) % len]);
  }
  return Cycle{std::move(out)};
}

std::vector<EdgeKey> cycle_edge_keys(const Cycle& c) {
  std::vector<EdgeKey> keys;
  const int len = c.length();
  keys.reserve(len);
  for (int i = 0; i < len; ++i) {
    keys.push_back(edge_key(c.vertices[i], c.vertices[(i + 1) % len]));
  }
  return keys;
}

namespace {

const GroupElement& require_class(const CayleyGraph& g, const GroupElement& cls, const char* where) {
  for (const auto& c : g.set.classes) {
    if (c == cls) return c;
  }
  throw std::invalid_argument(std::string(where) + ": class " + to_token(cls) +
                              " not in connection set");
}

}  // namespace

std::vector<LabeledEdge> class_edges(const CayleyGraph& g, const GroupElement& cls) {
  require_class(g, cls, "class_edges");
  std::vector<LabeledEdge> out;
  for (const auto& e : g.edges) {
    if (e.label == cls) out.push_back(e);
  }
  return out;
}

CosetCycles coset_cycles(const CayleyGraph& g, const GroupElement& rotation_cls) {
  require_class(g, rotation_cls, "coset_cycles");
  if (rotation_cls.reflected) {
    throw std::invalid_argument("coset_cycles: reflection classes form matchings, not cycles");
  }
  const int n = g.n();
  if (n < 3) throw std::invalid_argument("coset_cycles: needs n >= 3");
  const int step = rotation_cls.exponent;
  if (std::gcd(step, n) != 1) {
    throw std::invalid_argument("coset_cycles: class " + to_token(rotation_cls) +
                                " does not generate the rotation subgroup");
  }
  std::vector<GroupElement> rot, refl;
  rot.reserve(n);
  refl.reserve(n);
  for (int m = 0; m < n; ++m) {
    rot.push_back(rotation(n, static_cast<long long>(m) * step));
    refl.push_back(reflection(n, static_cast<long long>(m) * step));
  }
  return CosetCycles{canonical_cycle(std::move(rot)), canonical_cycle(std::move(refl))};
}

}  // namespace hamdec
