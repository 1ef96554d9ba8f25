#pragma once

// Independent certificate checker. Works from the graph and the claimed parts
// alone; shares no construction logic with the decomposition routines, so a
// bug there cannot hide here.

#include <string>
#include <vector>

#include "hamdec/decomp.hpp"

namespace hamdec {

enum class ViolationKind {
  kCycleNotHamiltonian,
  kMatchingNotPerfect,
  kPartsShareEdge,
  kEdgeNotCovered,
  kWrongCycleCount,
  kUnexpectedMatching,
  kMissingMatching,
};

const char* to_string(ViolationKind kind);

// `part` indexes cycles; the matching is part cycles.size(); -1 means the
// finding concerns the certificate as a whole.
struct Finding {
  ViolationKind kind;
  int part = -1;
  int other_part = -1;
  std::vector<std::string> witnesses;  // element or edge tokens
  std::string message;
};

struct VerificationReport {
  bool ok = true;
  std::vector<Finding> failures;
};

bool is_hamilton_cycle(const CayleyGraph& g, const Cycle& c);
bool is_perfect_matching(const CayleyGraph& g, const EdgeSet& matching);

// Runs every check and reports every violation: per-cycle Hamiltonicity,
// matching perfection, pairwise edge-disjointness, exact edge coverage, and
// the part counts implied by |S|.
VerificationReport verify_decomposition(const CayleyGraph& g, const Decomposition& d);

}  // namespace hamdec
