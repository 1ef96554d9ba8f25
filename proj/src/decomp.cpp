#include "hamdec/decomp.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace hamdec {

EdgeSet symmetric_difference(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first < ib->first) {
      out.insert(out.end(), *ia++);
    } else if (ib->first < ia->first) {
      out.insert(out.end(), *ib++);
    } else {
      ++ia;
      ++ib;
    }
  }
  out.insert(ia, a.end());
  out.insert(ib, b.end());
  return out;
}

EdgeSet edge_set(const std::vector<LabeledEdge>& edges) {
  EdgeSet out;
  for (const auto& e : edges) out.emplace(e.key(), e.label);
  return out;
}

EdgeSet graph_edge_set(const CayleyGraph& g) { return edge_set(g.edges); }

EdgeSet cycle_edge_set(const Cycle& c, const CayleyGraph& g) {
  EdgeSet out;
  for (const auto& key : cycle_edge_keys(c)) {
    const LabeledEdge* e = g.find_edge(key);
    if (e == nullptr) {
      throw std::invalid_argument("cycle uses non-edge " + edge_token(g.n(), key));
    }
    out.emplace(key, e->label);
  }
  return out;
}

BasePlan choose_base_points(const std::vector<int>& exponents, int p) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) {
    throw std::invalid_argument("choose_base_points: p must be an odd prime");
  }
  const int s = static_cast<int>(exponents.size());
  if (s == 0) throw std::invalid_argument("choose_base_points: no exponents");
  for (int t = 0; t < s; ++t) {
    if (exponents[t] < 1 || exponents[t] > (p - 1) / 2) {
      throw std::invalid_argument("choose_base_points: exponent " +
                                  std::to_string(exponents[t]) + " outside [1,(p-1)/2]");
    }
    if (t > 0 && exponents[t] <= exponents[t - 1]) {
      throw std::invalid_argument("choose_base_points: exponents not strictly increasing");
    }
  }

  // Even-index squares nest inside [0,(p-1)/2], odd-index ones inside
  // [(p+1)/2, p-1]; for odd s the parity roles swap. Indices below are
  // 1-based as in m_t.
  std::vector<int> m(s);
  auto at = [&m](int t) -> int& { return m[t - 1]; };
  if (s % 2 == 0) {
    int k = s / 2;
    for (int h = 1; h <= k; ++h) at(2 * h) = k - h;
    for (int h = 1; h <= k; ++h) at(2 * h - 1) = (p + 1) / 2 + (k - h);
  } else {
    int k = (s - 1) / 2;
    for (int h = 0; h <= k; ++h) at(2 * h + 1) = k - h;
    for (int h = 1; h <= k; ++h) at(2 * h) = (p + 1) / 2 + (k - h);
  }

  for (int t = 0; t < s; ++t) {
    if (m[t] < 0 || m[t] + exponents[t] > p - 1) {
      throw std::logic_error("choose_base_points: interval wraps, t=" + std::to_string(t + 1));
    }
  }
  for (int t = 0; t < s; ++t) {
    for (int r = t + 1; r < s; ++r) {
      int lo1 = m[t], hi1 = m[t] + exponents[t];
      int lo2 = m[r], hi2 = m[r] + exponents[r];
      bool disjoint = hi1 < lo2 || hi2 < lo1;
      bool nested = (lo1 < lo2 && hi2 < hi1) || (lo2 < lo1 && hi1 < hi2);
      if (!disjoint && !nested) {
        throw std::logic_error("choose_base_points: intervals neither disjoint nor nested");
      }
    }
  }
  return BasePlan{exponents, std::move(m)};
}

std::optional<Cycle> try_assemble_cycle(int n, const EdgeSet& edges, int expected_length) {
  if (static_cast<int>(edges.size()) != expected_length) return std::nullopt;
  std::map<int, std::vector<int>> adj;
  for (const auto& [key, label] : edges) {
    adj[key.first].push_back(key.second);
    adj[key.second].push_back(key.first);
  }
  if (static_cast<int>(adj.size()) != expected_length) return std::nullopt;
  for (const auto& [v, nbrs] : adj) {
    if (nbrs.size() != 2) return std::nullopt;
  }
  int start = adj.begin()->first;
  std::vector<GroupElement> seq;
  seq.reserve(expected_length);
  int prev = -1;
  int cur = start;
  do {
    seq.push_back(element_at(n, cur));
    const auto& nbrs = adj[cur];
    int next = (nbrs[0] == prev) ? nbrs[1] : nbrs[0];
    prev = cur;
    cur = next;
  } while (cur != start && static_cast<int>(seq.size()) <= expected_length);
  if (cur != start || static_cast<int>(seq.size()) != expected_length) return std::nullopt;
  return canonical_cycle(std::move(seq));
}

Cycle join_cosets(const CayleyGraph& g, const GroupElement& rotation_cls, const Cycle& square) {
  if (square.length() != 4) {
    throw NotASingleCycle("surgery square must have length 4, got " +
                          std::to_string(square.length()));
  }
  for (const auto& key : cycle_edge_keys(square)) {
    if (g.find_edge(key) == nullptr) {
      throw NotASingleCycle("surgery square uses non-edge " + edge_token(g.n(), key));
    }
  }
  CosetCycles cc = coset_cycles(g, rotation_cls);
  EdgeSet both = cycle_edge_set(cc.on_rotations, g);
  for (const auto& e : cycle_edge_set(cc.on_reflections, g)) both.insert(e);
  EdgeSet merged = symmetric_difference(both, cycle_edge_set(square, g));
  auto cycle = try_assemble_cycle(g.n(), merged, 2 * g.n());
  if (!cycle) {
    throw NotASingleCycle("surgery on class " + to_token(rotation_cls) +
                          " did not produce a single cycle");
  }
  return *cycle;
}

namespace {

void require_odd_prime(int p, const char* where) {
  if (p < 3 || !is_prime(p)) {
    throw std::invalid_argument(std::string(where) + ": p=" + std::to_string(p) +
                                " is not an odd prime");
  }
}

// Folds an inverse-closed rotation set into sorted class exponents in
// [1, (p-1)/2], in powers of `base` (pass a^1 for the natural generator).
std::vector<int> folded_exponents(int p, const std::vector<GroupElement>& rotations,
                                  const GroupElement& base, const char* where) {
  std::set<int> reps;
  for (const auto& r : rotations) {
    if (r.reflected || is_identity(r)) {
      throw std::invalid_argument(std::string(where) + ": " + to_token(r) +
                                  " is not a nonidentity rotation");
    }
    int e = rotation_log(base, r);
    reps.insert(std::min(e, p - e));
  }
  if (2 * reps.size() != rotations.size()) {
    throw std::invalid_argument(std::string(where) + ": rotation set is not inverse-closed");
  }
  return {reps.begin(), reps.end()};
}

// The 4-cycle (base^m, base^(m+i), b*base^(m+i), b*base^m).
Cycle surgery_square(const GroupElement& base, const GroupElement& b, int m, int i) {
  GroupElement lo = power(base, m);
  GroupElement hi = power(base, m + i);
  return canonical_cycle({lo, hi, multiply(b, hi), multiply(b, lo)});
}

EdgeSet disjoint_union(const EdgeSet& a, const EdgeSet& b, const char* where) {
  EdgeSet out = a;
  for (const auto& e : b) {
    if (!out.insert(e).second) {
      throw std::logic_error(std::string(where) + ": edge sets unexpectedly overlap");
    }
  }
  return out;
}

}  // namespace

Decomposition decompose_one_reflection(int p, const std::vector<GroupElement>& s1,
                                       const GroupElement& b) {
  require_odd_prime(p, "decompose_one_reflection");
  if (!b.reflected || b.n != p) {
    throw std::invalid_argument("decompose_one_reflection: b must be a reflection of order p");
  }
  if (s1.empty()) {
    throw std::invalid_argument("decompose_one_reflection: rotation set must be nonempty");
  }
  GroupElement alpha = rotation(p, 1);
  std::vector<int> exps = folded_exponents(p, s1, alpha, "decompose_one_reflection");
  BasePlan plan = choose_base_points(exps, p);

  std::vector<GroupElement> elements = s1;
  elements.push_back(b);
  CayleyGraph graph = build_graph(validate_connection_set(p, std::move(elements)));

  EdgeSet matching = edge_set(class_edges(graph, b));
  Decomposition out;
  for (std::size_t t = 0; t < exps.size(); ++t) {
    Cycle square = surgery_square(alpha, b, plan.base_points[t], plan.exponents[t]);
    out.cycles.push_back(join_cosets(graph, rotation(p, plan.exponents[t]), square));
    out.cycle_routes.emplace_back(kRouteOneReflection);
    matching = symmetric_difference(matching, cycle_edge_set(square, graph));
  }
  if (static_cast<int>(matching.size()) != p) {
    throw std::logic_error("decompose_one_reflection: residual matching has wrong size");
  }
  out.matching = std::move(matching);
  out.matching_route = kRouteOneReflection;
  return out;
}

Decomposition decompose_all_reflections(int p, const std::vector<GroupElement>& s2) {
  require_odd_prime(p, "decompose_all_reflections");
  std::vector<GroupElement> refl = s2;
  std::sort(refl.begin(), refl.end());
  for (const auto& r : refl) {
    if (!r.reflected || r.n != p) {
      throw std::invalid_argument("decompose_all_reflections: " + to_token(r) +
                                  " is not a reflection of order p");
    }
  }
  if (refl.size() < 2 || std::adjacent_find(refl.begin(), refl.end()) != refl.end()) {
    throw std::invalid_argument("decompose_all_reflections: needs >= 2 distinct reflections");
  }

  CayleyGraph graph = build_graph(validate_connection_set(p, refl));
  Decomposition out;
  const int pairs = static_cast<int>(refl.size()) / 2;
  for (int t = 0; t < pairs; ++t) {
    EdgeSet merged = disjoint_union(edge_set(class_edges(graph, refl[2 * t])),
                                    edge_set(class_edges(graph, refl[2 * t + 1])),
                                    "decompose_all_reflections");
    auto cycle = try_assemble_cycle(p, merged, 2 * p);
    if (!cycle) {
      throw std::logic_error("decompose_all_reflections: pair " + to_token(refl[2 * t]) + "," +
                             to_token(refl[2 * t + 1]) + " did not trace a Hamilton cycle");
    }
    out.cycles.push_back(std::move(*cycle));
    out.cycle_routes.emplace_back(kRouteAllReflections);
  }
  if (refl.size() % 2 == 1) {
    out.matching = edge_set(class_edges(graph, refl.back()));
    out.matching_route = kRouteAllReflections;
  }
  return out;
}

Decomposition decompose_tetravalent(int n, int i, int j, int k) {
  if (n < 3) throw std::invalid_argument("decompose_tetravalent: n must be >= 3");
  if (i < 1 || i > n - 1 || j < 0 || k <= j || k > n - 1) {
    throw std::invalid_argument("decompose_tetravalent: need 1 <= i <= n-1 and 0 <= j < k <= n-1");
  }
  if (std::gcd(i, n) != 1 || std::gcd(k - j, n) != 1) {
    throw std::invalid_argument("decompose_tetravalent: gcd(i,n) and gcd(k-j,n) must be 1");
  }

  GroupElement a = rotation(n, i);
  GroupElement b = reflection(n, j);
  CayleyGraph graph = build_graph(
      validate_connection_set(n, {a, inverse(a), b, reflection(n, k)}));

  Cycle square = canonical_cycle({inverse(a), identity(n), b, multiply(b, inverse(a))});
  Decomposition out;
  out.cycles.push_back(join_cosets(graph, canonical_class(a), square));
  out.cycle_routes.emplace_back(kRouteTetravalent);

  EdgeSet rest = symmetric_difference(graph_edge_set(graph),
                                      cycle_edge_set(out.cycles.front(), graph));
  auto second = try_assemble_cycle(n, rest, 2 * n);
  if (!second) {
    throw std::logic_error("decompose_tetravalent: remaining edges are not a single cycle");
  }
  out.cycles.push_back(std::move(*second));
  out.cycle_routes.emplace_back(kRouteTetravalent);
  return out;
}

Decomposition decompose_two_reflections(int p, const std::vector<GroupElement>& s1,
                                        const GroupElement& b_in, const GroupElement& c_in) {
  require_odd_prime(p, "decompose_two_reflections");
  if (!b_in.reflected || !c_in.reflected || b_in.n != p || c_in.n != p || b_in == c_in) {
    throw std::invalid_argument("decompose_two_reflections: need two distinct reflections");
  }
  GroupElement b = b_in;
  GroupElement c = c_in;
  if (b.exponent > c.exponent) std::swap(b, c);

  if (s1.empty()) {
    CayleyGraph graph = build_graph(validate_connection_set(p, {b, c}));
    auto cycle = try_assemble_cycle(p, graph_edge_set(graph), 2 * p);
    if (!cycle) {
      throw std::logic_error("decompose_two_reflections: two-reflection graph not a cycle");
    }
    Decomposition out;
    out.cycles.push_back(std::move(*cycle));
    out.cycle_routes.emplace_back(kRouteTwoReflections);
    return out;
  }
  if (s1.size() == 2) {
    int e = std::min(s1[0].exponent, s1[1].exponent);
    return decompose_tetravalent(p, e, b.exponent, c.exponent);
  }

  GroupElement a = multiply(b, c);  // a rotation generating <alpha>
  std::vector<int> exps = folded_exponents(p, s1, a, "decompose_two_reflections");
  BasePlan plan = choose_base_points(exps, p);

  std::vector<GroupElement> elements = s1;
  elements.push_back(b);
  elements.push_back(c);
  CayleyGraph graph = build_graph(validate_connection_set(p, std::move(elements)));

  EdgeSet s2_edges = disjoint_union(edge_set(class_edges(graph, b)),
                                    edge_set(class_edges(graph, c)),
                                    "decompose_two_reflections");
  auto s2_cycle = try_assemble_cycle(p, s2_edges, 2 * p);
  if (!s2_cycle) {
    throw std::logic_error("decompose_two_reflections: S2-edges are not a Hamilton cycle");
  }

  Decomposition out;
  EdgeSet residual = s2_edges;
  for (std::size_t t = 0; t < exps.size(); ++t) {
    Cycle square = surgery_square(a, b, plan.base_points[t], plan.exponents[t]);
    out.cycles.push_back(join_cosets(graph, canonical_class(power(a, plan.exponents[t])), square));
    out.cycle_routes.emplace_back(kRouteTwoReflections);
    residual = symmetric_difference(residual, cycle_edge_set(square, graph));
  }
  auto last = try_assemble_cycle(p, residual, 2 * p);
  if (!last) {
    throw std::logic_error("decompose_two_reflections: residual edges are not a single cycle");
  }
  out.cycles.push_back(std::move(*last));
  out.cycle_routes.emplace_back(kRouteTwoReflections);
  return out;
}

namespace {

// D_4 is small enough to list outright; the keys are the four valid
// connection sets.
Decomposition decompose_d4(const ConnectionSet& s) {
  auto cyc = [](std::initializer_list<const char*> tokens) {
    std::vector<GroupElement> vs;
    for (const char* t : tokens) vs.push_back(parse_element(2, t));
    return canonical_cycle(std::move(vs));
  };
  std::string signature;
  for (const auto& g : s.elements) signature += to_token(g) + ",";

  Decomposition out;
  if (signature == "r1,s0,") {
    out.cycles.push_back(cyc({"r0", "r1", "s1", "s0"}));
  } else if (signature == "r1,s1,") {
    out.cycles.push_back(cyc({"r0", "r1", "s0", "s1"}));
  } else if (signature == "s0,s1,") {
    out.cycles.push_back(cyc({"r0", "s0", "r1", "s1"}));
  } else if (signature == "r1,s0,s1,") {
    out.cycles.push_back(cyc({"r0", "r1", "s1", "s0"}));
    EdgeSet matching;
    matching.emplace(edge_key(parse_element(2, "r0"), parse_element(2, "s1")),
                     parse_element(2, "s1"));
    matching.emplace(edge_key(parse_element(2, "r1"), parse_element(2, "s0")),
                     parse_element(2, "s1"));
    out.matching = std::move(matching);
    out.matching_route = kRouteD4Table;
  } else {
    throw std::logic_error("decompose: unexpected connection set on D_4");
  }
  out.cycle_routes.assign(out.cycles.size(), kRouteD4Table);
  return out;
}

Decomposition concatenate(Decomposition first, Decomposition second) {
  if (first.matching && second.matching) {
    throw std::logic_error("decompose: both partition parts produced a matching");
  }
  for (auto& c : second.cycles) first.cycles.push_back(std::move(c));
  for (auto& r : second.cycle_routes) first.cycle_routes.push_back(std::move(r));
  if (second.matching) {
    first.matching = std::move(second.matching);
    first.matching_route = std::move(second.matching_route);
  }
  return first;
}

}  // namespace

Decomposition decompose(int p, const ConnectionSet& s) {
  if (!is_prime(p)) throw std::invalid_argument("decompose: p=" + std::to_string(p) + " is not prime");
  if (s.n != p) throw std::invalid_argument("decompose: connection set has n != p");
  if (p == 2) return decompose_d4(s);

  const auto& s1 = s.rotations;
  const auto& s2 = s.reflections;  // sorted by exponent
  if (s2.size() == 1) return decompose_one_reflection(p, s1, s2[0]);
  if (s1.empty()) return decompose_all_reflections(p, s2);
  if (s2.size() == 2) return decompose_two_reflections(p, s1, s2[0], s2[1]);

  if (s2.size() % 2 == 0) {
    // T = S1 + two reflections, B = the rest; both partition into cycles.
    std::vector<GroupElement> rest(s2.begin() + 2, s2.end());
    return concatenate(decompose_two_reflections(p, s1, s2[0], s2[1]),
                       decompose_all_reflections(p, rest));
  }
  // Odd reflection count: P = S1 + one reflection carries the matching.
  std::vector<GroupElement> rest(s2.begin() + 1, s2.end());
  return concatenate(decompose_one_reflection(p, s1, s2[0]),
                     decompose_all_reflections(p, rest));
}

}  // namespace hamdec
