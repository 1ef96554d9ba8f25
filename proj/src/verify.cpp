#include "hamdec/verify.hpp"

#include <algorithm>
#include <set>

namespace hamdec {

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kCycleNotHamiltonian: return "cycle_not_hamiltonian";
    case ViolationKind::kMatchingNotPerfect: return "matching_not_perfect";
    case ViolationKind::kPartsShareEdge: return "parts_share_edge";
    case ViolationKind::kEdgeNotCovered: return "edge_not_covered";
    case ViolationKind::kWrongCycleCount: return "wrong_cycle_count";
    case ViolationKind::kUnexpectedMatching: return "unexpected_matching";
    case ViolationKind::kMissingMatching: return "missing_matching";
  }
  return "unknown";
}

namespace {

void check_cycle(const CayleyGraph& g, const Cycle& c, int part,
                 std::vector<Finding>& findings) {
  const int want = 2 * g.n();
  if (c.length() != want) {
    findings.push_back({ViolationKind::kCycleNotHamiltonian, part, -1, {},
                        "cycle has length " + std::to_string(c.length()) + ", expected " +
                            std::to_string(want)});
  }

  std::set<int> seen;
  std::vector<std::string> repeats;
  bool order_ok = true;
  for (const auto& v : c.vertices) {
    if (v.n != g.n()) order_ok = false;
    if (order_ok && !seen.insert(vertex_index(v)).second) repeats.push_back(to_token(v));
  }
  if (!order_ok) {
    findings.push_back({ViolationKind::kCycleNotHamiltonian, part, -1, {},
                        "cycle contains elements of a different group order"});
    return;
  }
  if (!repeats.empty()) {
    findings.push_back({ViolationKind::kCycleNotHamiltonian, part, -1, repeats,
                        "cycle repeats vertices"});
  }

  std::vector<std::string> non_edges;
  const int len = c.length();
  for (int i = 0; i < len; ++i) {
    const GroupElement& u = c.vertices[i];
    const GroupElement& v = c.vertices[(i + 1) % len];
    if (vertex_index(u) == vertex_index(v)) continue;  // already reported as repeat
    if (g.find_edge(edge_key(u, v)) == nullptr) {
      non_edges.push_back(to_token(u) + "-" + to_token(v));
    }
  }
  if (!non_edges.empty()) {
    findings.push_back({ViolationKind::kCycleNotHamiltonian, part, -1, non_edges,
                        "consecutive vertices not adjacent in the graph"});
  }
}

void check_matching(const CayleyGraph& g, const EdgeSet& matching, int part,
                    std::vector<Finding>& findings) {
  std::vector<std::string> non_edges;
  std::vector<std::string> clashes;
  std::vector<int> cover(g.vertex_count(), 0);
  for (const auto& [key, label] : matching) {
    if (g.find_edge(key) == nullptr) non_edges.push_back(edge_token(g.n(), key));
    if (key.first < g.vertex_count()) ++cover[key.first];
    if (key.second < g.vertex_count()) ++cover[key.second];
  }
  std::vector<std::string> uncovered;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (cover[v] == 0) uncovered.push_back(to_token(element_at(g.n(), v)));
    if (cover[v] > 1) clashes.push_back(to_token(element_at(g.n(), v)));
  }
  if (!non_edges.empty()) {
    findings.push_back({ViolationKind::kMatchingNotPerfect, part, -1, non_edges,
                        "matching uses non-edges"});
  }
  if (!clashes.empty()) {
    findings.push_back({ViolationKind::kMatchingNotPerfect, part, -1, clashes,
                        "matching covers vertices more than once"});
  }
  if (!uncovered.empty()) {
    findings.push_back({ViolationKind::kMatchingNotPerfect, part, -1, uncovered,
                        "matching leaves vertices uncovered"});
  }
}

}  // namespace

bool is_hamilton_cycle(const CayleyGraph& g, const Cycle& c) {
  std::vector<Finding> findings;
  check_cycle(g, c, 0, findings);
  return findings.empty();
}

bool is_perfect_matching(const CayleyGraph& g, const EdgeSet& matching) {
  std::vector<Finding> findings;
  check_matching(g, matching, 0, findings);
  return findings.empty();
}

VerificationReport verify_decomposition(const CayleyGraph& g, const Decomposition& d) {
  VerificationReport report;
  auto& findings = report.failures;

  const int num_cycles = static_cast<int>(d.cycles.size());
  for (int i = 0; i < num_cycles; ++i) check_cycle(g, d.cycles[i], i, findings);
  if (d.matching) check_matching(g, *d.matching, num_cycles, findings);

  // Edge-disjointness and coverage, over graph edges only; non-edges used by
  // a part are already reported above.
  std::map<EdgeKey, std::vector<int>> used_by;
  auto claim = [&](const EdgeKey& key, int part) {
    if (g.find_edge(key) != nullptr) used_by[key].push_back(part);
  };
  for (int i = 0; i < num_cycles; ++i) {
    const auto& vs = d.cycles[i].vertices;
    const int len = static_cast<int>(vs.size());
    for (int j = 0; j < len; ++j) {
      const GroupElement& u = vs[j];
      const GroupElement& v = vs[(j + 1) % len];
      if (u.n != g.n() || v.n != g.n() || vertex_index(u) == vertex_index(v)) continue;
      claim(edge_key(u, v), i);
    }
  }
  if (d.matching) {
    for (const auto& [key, label] : *d.matching) claim(key, num_cycles);
  }

  for (const auto& [key, parts] : used_by) {
    if (parts.size() < 2) continue;
    std::string msg = "edge claimed by parts";
    for (int p : parts) msg += " " + std::to_string(p);
    findings.push_back({ViolationKind::kPartsShareEdge, parts[0], parts[1],
                        {edge_token(g.n(), key)}, msg});
  }
  std::vector<std::string> missing;
  for (const auto& e : g.edges) {
    if (!used_by.contains(e.key())) missing.push_back(edge_token(g.n(), e.key()));
  }
  if (!missing.empty()) {
    findings.push_back({ViolationKind::kEdgeNotCovered, -1, -1, missing,
                        "graph edges not covered by any part"});
  }

  const int valency = static_cast<int>(g.set.elements.size());
  const int expected_cycles = valency / 2;
  if (num_cycles != expected_cycles) {
    findings.push_back({ViolationKind::kWrongCycleCount, -1, -1, {},
                        "expected " + std::to_string(expected_cycles) + " cycles, got " +
                            std::to_string(num_cycles)});
  }
  const bool want_matching = valency % 2 == 1;
  if (d.matching && !want_matching) {
    findings.push_back({ViolationKind::kUnexpectedMatching, -1, -1, {},
                        "matching present but |S| is even"});
  }
  if (!d.matching && want_matching) {
    findings.push_back({ViolationKind::kMissingMatching, -1, -1, {},
                        "matching required because |S| is odd"});
  }

  report.ok = findings.empty();
  return report;
}

}  // namespace hamdec
