#pragma once

// Exact arithmetic in the dihedral group D_2n with presentation
// a^n = b^2 = 1, b a b = a^-1. Elements are stored in the canonical
// word form b^e a^k with k in [0, n).
//
// Product convention: multiply(x, y) is the word x*y, normalized via
// a^k b = b a^-k. Cayley graph edges downstream join g to s*g, i.e.
// the generator acts by left multiplication.

#include <string>
#include <string_view>
#include <vector>

namespace hamdec {

struct GroupElement {
  int n = 0;           // group parameter; the group has order 2n
  bool reflected = false;  // true: element lies in the coset b<a>
  int exponent = 0;    // in [0, n)

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

GroupElement rotation(int n, long long exponent);  // a^exponent, reduced mod n
GroupElement reflection(int n, long long exponent);  // b a^exponent
GroupElement identity(int n);
bool is_identity(const GroupElement& x);

GroupElement multiply(const GroupElement& x, const GroupElement& y);
GroupElement inverse(const GroupElement& x);
GroupElement power(const GroupElement& x, long long e);

// Stable vertex numbering: rotations r0..r(n-1), then reflections s0..s(n-1).
int vertex_index(const GroupElement& x);
GroupElement element_at(int n, int index);

// Subgroup generated by `gens`, computed as the orbit of the identity under
// repeated left multiplication. Sorted by vertex index.
std::vector<GroupElement> subgroup_closure(int n, const std::vector<GroupElement>& gens);
bool generates(int n, const std::vector<GroupElement>& gens);

// Shortcut valid for prime n only: gens generate D_2n iff they contain a
// reflection together with either a nonidentity rotation or a second,
// distinct reflection.
bool generates_prime(int p, const std::vector<GroupElement>& gens);

// Discrete log in <a>: the e in [0, n) with base^e == target. base must be a
// rotation whose exponent is coprime to n; target must be a rotation.
int rotation_log(const GroupElement& base, const GroupElement& target);

// Text encoding used everywhere downstream: a^k <-> "r<k>", b a^k <-> "s<k>".
std::string to_token(const GroupElement& x);
GroupElement parse_element(int n, std::string_view token);

bool is_prime(int n);

}  // namespace hamdec
