#include "hamdec/oracle.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "hamdec/verify.hpp"

namespace hamdec {

namespace {

int rotation_class_count(int p) { return p == 2 ? 1 : (p - 1) / 2; }

// Quick validity rule for prime p: at least two reflections, or one
// reflection plus at least one rotation class.
bool mask_valid(int p, std::uint64_t mask) {
  const int classes = rotation_class_count(p);
  std::uint64_t rot = mask & ((1ull << classes) - 1);
  int refl = std::popcount(mask >> classes);
  return refl >= 2 || (refl == 1 && rot != 0);
}

}  // namespace

std::vector<std::uint64_t> valid_instance_masks(int p) {
  if (!is_prime(p)) throw std::invalid_argument("valid_instance_masks: p must be prime");
  const int bits = rotation_class_count(p) + p;
  if (bits > 22) throw InstanceTooLarge("valid_instance_masks: 2^" + std::to_string(bits) +
                                        " combinations is beyond enumeration scale");
  std::vector<std::uint64_t> out;
  for (std::uint64_t mask = 0; mask < (1ull << bits); ++mask) {
    if (mask_valid(p, mask)) out.push_back(mask);
  }
  return out;
}

ConnectionSet instance_from_mask(int p, std::uint64_t mask) {
  const int classes = rotation_class_count(p);
  std::vector<GroupElement> raw;
  for (int e = 1; e <= classes; ++e) {
    if (mask & (1ull << (e - 1))) {
      raw.push_back(rotation(p, e));
      if (e != p - e) raw.push_back(rotation(p, p - e));
    }
  }
  for (int e = 0; e < p; ++e) {
    if (mask & (1ull << (classes + e))) raw.push_back(reflection(p, e));
  }
  return validate_connection_set(p, std::move(raw));
}

InstanceSweep::InstanceSweep(int p) : p_(p), masks_(valid_instance_masks(p)) {}

std::optional<ConnectionSet> InstanceSweep::next() {
  if (cursor_ >= masks_.size()) return std::nullopt;
  return instance_from_mask(p_, masks_[cursor_++]);
}

std::vector<ConnectionSet> enumerate_connection_sets(int p) {
  std::vector<ConnectionSet> out;
  InstanceSweep sweep(p);
  while (auto s = sweep.next()) out.push_back(std::move(*s));
  return out;
}

std::vector<ConnectionSet> sample_connection_sets(int p, int count, std::uint64_t seed) {
  if (!is_prime(p)) throw std::invalid_argument("sample_connection_sets: p must be prime");
  const int bits = rotation_class_count(p) + p;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, (1ull << bits) - 1);
  std::vector<ConnectionSet> out;
  out.reserve(count);
  while (static_cast<int>(out.size()) < count) {
    std::uint64_t mask = dist(rng);
    if (mask_valid(p, mask)) out.push_back(instance_from_mask(p, mask));
  }
  return out;
}

bool brute_force_allowed(const CayleyGraph& g) {
  const int vertices = g.vertex_count();
  const int valency = static_cast<int>(g.set.elements.size());
  return vertices <= 10 || (vertices <= 14 && valency <= 7);
}

namespace {

struct Searcher {
  const CayleyGraph& g;
  int num_vertices;
  int num_slots;
  // adjacency as (neighbor, edge id), sorted by neighbor index
  std::vector<std::vector<std::pair<int, int>>> adj;
  std::vector<char> edge_used;
  std::vector<int> unused_degree;
  std::vector<std::vector<int>> found;  // vertex index sequences
  std::vector<char> on_path;
  std::vector<int> path;

  explicit Searcher(const CayleyGraph& graph)
      : g(graph),
        num_vertices(graph.vertex_count()),
        num_slots(static_cast<int>(graph.set.elements.size()) / 2),
        adj(num_vertices),
        edge_used(graph.edges.size(), 0),
        unused_degree(num_vertices, 0),
        on_path(num_vertices, 0) {
    for (std::size_t id = 0; id < graph.edges.size(); ++id) {
      const auto key = graph.edges[id].key();
      adj[key.first].emplace_back(key.second, static_cast<int>(id));
      adj[key.second].emplace_back(key.first, static_cast<int>(id));
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());
    for (int v = 0; v < num_vertices; ++v) unused_degree[v] = static_cast<int>(adj[v].size());
  }

  void take_edge(int id) {
    edge_used[id] = 1;
    const auto key = g.edges[id].key();
    --unused_degree[key.first];
    --unused_degree[key.second];
  }

  void release_edge(int id) {
    edge_used[id] = 0;
    const auto key = g.edges[id].key();
    ++unused_degree[key.first];
    ++unused_degree[key.second];
  }

  // Every vertex off the current path still needs two unused edges to be
  // passed through by the current cycle.
  bool feasible() const {
    for (int v = 0; v < num_vertices; ++v) {
      if (!on_path[v] && unused_degree[v] < 2) return false;
    }
    return true;
  }

  bool solve_slot(int slot) {
    if (slot == num_slots) return true;
    path.assign(1, 0);
    on_path[0] = 1;
    bool ok = extend(slot);
    on_path[0] = 0;
    return ok;
  }

  bool extend(int slot) {
    const int cur = path.back();
    if (static_cast<int>(path.size()) == num_vertices) {
      if (path[1] > path.back()) return false;  // canonical direction
      for (const auto& [nbr, id] : adj[cur]) {
        if (nbr != 0 || edge_used[id]) continue;
        take_edge(id);
        found.push_back(path);
        // The completed cycle releases its vertices for the next slot.
        std::vector<int> saved = std::move(path);
        std::fill(on_path.begin(), on_path.end(), 0);
        if (solve_slot(slot + 1)) return true;
        path = std::move(saved);
        std::fill(on_path.begin(), on_path.end(), 1);
        found.pop_back();
        release_edge(id);
      }
      return false;
    }
    for (const auto& [nbr, id] : adj[cur]) {
      if (edge_used[id] || on_path[nbr]) continue;
      // Cycle slots are interchangeable; order them by their second vertex.
      if (path.size() == 1 && slot > 0 && nbr <= found[slot - 1][1]) continue;
      take_edge(id);
      on_path[nbr] = 1;
      path.push_back(nbr);
      if (feasible() && extend(slot)) return true;
      path.pop_back();
      on_path[nbr] = 0;
      release_edge(id);
    }
    return false;
  }
};

}  // namespace

std::optional<Decomposition> brute_force_decomposition(const CayleyGraph& g) {
  if (!brute_force_allowed(g)) {
    throw InstanceTooLarge("brute_force_decomposition: instance with " +
                           std::to_string(g.vertex_count()) + " vertices and valency " +
                           std::to_string(g.set.elements.size()) + " exceeds the search guard");
  }
  Searcher searcher(g);
  if (!searcher.solve_slot(0)) return std::nullopt;

  Decomposition out;
  for (const auto& seq : searcher.found) {
    std::vector<GroupElement> vs;
    vs.reserve(seq.size());
    for (int idx : seq) vs.push_back(element_at(g.n(), idx));
    out.cycles.push_back(canonical_cycle(std::move(vs)));
    out.cycle_routes.emplace_back(kRouteBruteForce);
  }
  if (g.set.elements.size() % 2 == 1) {
    EdgeSet matching;
    for (std::size_t id = 0; id < g.edges.size(); ++id) {
      if (!searcher.edge_used[id]) matching.emplace(g.edges[id].key(), g.edges[id].label);
    }
    out.matching = std::move(matching);
    out.matching_route = kRouteBruteForce;
  }
  if (!verify_decomposition(g, out).ok) {
    throw std::logic_error("brute_force_decomposition: produced an invalid certificate");
  }
  return out;
}

}  // namespace hamdec
