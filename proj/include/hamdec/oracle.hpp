#pragma once

// Desk-scale ground truth: enumeration of all valid connection sets on D_2p
// and an exhaustive backtracking search for Hamilton decompositions.

#include <cstdint>
#include <optional>

#include "hamdec/decomp.hpp"

namespace hamdec {

class InstanceTooLarge : public std::runtime_error {
 public:
  explicit InstanceTooLarge(const std::string& message) : std::runtime_error(message) {}
};

// Masks encode a choice of rotation inverse-pair classes (low bits) and
// reflections (high bits); only masks passing the validity rule are listed.
std::vector<std::uint64_t> valid_instance_masks(int p);
ConnectionSet instance_from_mask(int p, std::uint64_t mask);

// Streams every valid connection set on D_2p exactly once, canonical order.
class InstanceSweep {
 public:
  explicit InstanceSweep(int p);
  std::optional<ConnectionSet> next();
  int prime() const { return p_; }

 private:
  int p_;
  std::vector<std::uint64_t> masks_;
  std::size_t cursor_ = 0;
};

std::vector<ConnectionSet> enumerate_connection_sets(int p);

// Uniform samples over the valid connection sets (with replacement).
std::vector<ConnectionSet> sample_connection_sets(int p, int count, std::uint64_t seed);

bool brute_force_allowed(const CayleyGraph& g);

// Backtracking search assigning edges to floor(|S|/2) Hamilton cycles; the
// leftover edges, when |S| is odd, are necessarily a perfect matching.
// Returns the first certificate found, or nullopt after exhausting the space.
std::optional<Decomposition> brute_force_decomposition(const CayleyGraph& g);

}  // namespace hamdec
