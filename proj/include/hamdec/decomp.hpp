#pragma once

// Constructs Hamilton decompositions of Cay(D_2p, S). The workhorse is cycle
// surgery: the two n-cycles of a rotation class are merged into one Hamilton
// cycle by taking the symmetric difference with a well-placed 4-cycle, and the
// base points of those 4-cycles are chosen so that any two of them occupy
// disjoint or strictly nested exponent intervals.

#include <optional>
#include <string>
#include <vector>

#include "hamdec/cayley.hpp"

namespace hamdec {

// Edge set keyed by unordered endpoints; the value is the generator class of
// the edge in its containing set.
using EdgeSet = std::map<EdgeKey, GroupElement>;

EdgeSet symmetric_difference(const EdgeSet& a, const EdgeSet& b);

EdgeSet edge_set(const std::vector<LabeledEdge>& edges);
EdgeSet graph_edge_set(const CayleyGraph& g);
// Labels are looked up in g; throws if the cycle uses a non-edge.
EdgeSet cycle_edge_set(const Cycle& c, const CayleyGraph& g);

// Base points m_1..m_s for the surgery 4-cycles, one per exponent i_t. The
// closed intervals [m_t, m_t+i_t] are pairwise disjoint or strictly nested
// and never pass p-1.
struct BasePlan {
  std::vector<int> exponents;    // i_1 < ... < i_s, each in [1, (p-1)/2]
  std::vector<int> base_points;  // m_1 .. m_s, each in [0, p-1]
};
BasePlan choose_base_points(const std::vector<int>& exponents, int p);

class NotASingleCycle : public std::runtime_error {
 public:
  explicit NotASingleCycle(const std::string& message) : std::runtime_error(message) {}
};

// Assembles an edge set into one cycle of the expected length, or nullopt if
// it is not 2-regular on exactly that many vertices or not connected.
std::optional<Cycle> try_assemble_cycle(int n, const EdgeSet& edges, int expected_length);

// Merges the two coset cycles of a rotation class into one Hamilton cycle via
// symmetric difference with the given 4-cycle. Throws NotASingleCycle if the
// square does not perform a valid surgery.
Cycle join_cosets(const CayleyGraph& g, const GroupElement& rotation_cls, const Cycle& square);

inline constexpr const char* kRouteOneReflection = "one_reflection";
inline constexpr const char* kRouteAllReflections = "all_reflections";
inline constexpr const char* kRouteTetravalent = "tetravalent";
inline constexpr const char* kRouteTwoReflections = "two_reflections";
inline constexpr const char* kRouteD4Table = "d4_table";
inline constexpr const char* kRouteBruteForce = "brute_force";

struct Decomposition {
  std::vector<Cycle> cycles;
  std::optional<EdgeSet> matching;
  std::vector<std::string> cycle_routes;  // construction route per cycle
  std::string matching_route;             // empty when no matching
};

// |S2| = 1: one reflection b plus an inverse-closed rotation set.
Decomposition decompose_one_reflection(int p, const std::vector<GroupElement>& s1,
                                       const GroupElement& b);

// S consists of reflections only, at least two of them.
Decomposition decompose_all_reflections(int p, const std::vector<GroupElement>& s2);

// S = {a^i, a^-i, b a^j, b a^k} on D_2n for any n >= 3 with
// gcd(i, n) = gcd(k-j, n) = 1.
Decomposition decompose_tetravalent(int n, int i, int j, int k);

// |S2| = 2: reflections b and c plus an inverse-closed rotation set (possibly
// empty).
Decomposition decompose_two_reflections(int p, const std::vector<GroupElement>& s1,
                                        const GroupElement& b, const GroupElement& c);

// Full dispatcher over any valid connection set on D_2p, p prime.
Decomposition decompose(int p, const ConnectionSet& s);

}  // namespace hamdec
