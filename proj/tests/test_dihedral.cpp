#include <doctest.h>

#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "hamdec/dihedral.hpp"

using namespace hamdec;

namespace {

// Independent reference: saturate the set under pairwise products until it
// stops growing. Deliberately a different algorithm from the library's
// identity-orbit closure.
std::set<GroupElement> saturate(int n, const std::vector<GroupElement>& gens) {
  std::set<GroupElement> out(gens.begin(), gens.end());
  out.insert(identity(n));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<GroupElement> snapshot(out.begin(), out.end());
    for (const auto& x : snapshot) {
      for (const auto& y : snapshot) {
        if (out.insert(multiply(x, y)).second) grew = true;
      }
    }
  }
  return out;
}

std::vector<GroupElement> all_elements(int n) {
  std::vector<GroupElement> out;
  for (int i = 0; i < 2 * n; ++i) out.push_back(element_at(n, i));
  return out;
}

}  // namespace

TEST_CASE("products follow the presentation") {
  CHECK(multiply(reflection(7, 0), rotation(7, 1)) == reflection(7, 1));  // b * a = ba
  CHECK(multiply(rotation(7, 6), rotation(7, 1)) == identity(7));
  // In D_14: (ba^2)(ba^5) = a^-2 a^5 = a^3.
  CHECK(multiply(reflection(7, 2), reflection(7, 5)) == rotation(7, 3));
  CHECK_THROWS_AS(multiply(rotation(7, 1), rotation(5, 1)), std::invalid_argument);
}

TEST_CASE("inverses") {
  CHECK(inverse(rotation(7, 3)) == rotation(7, 4));
  CHECK(inverse(reflection(7, 5)) == reflection(7, 5));
  CHECK(inverse(identity(7)) == identity(7));
}

TEST_CASE("associativity and presentation relations") {
  for (int n = 2; n <= 8; ++n) {
    auto elems = all_elements(n);
    for (const auto& x : elems) {
      for (const auto& y : elems) {
        for (const auto& z : elems) {
          CHECK(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)));
        }
      }
    }
    CHECK(power(rotation(n, 1), n) == identity(n));
    CHECK(multiply(reflection(n, 0), reflection(n, 0)) == identity(n));
    GroupElement bab = multiply(multiply(reflection(n, 0), rotation(n, 1)), reflection(n, 0));
    CHECK(bab == inverse(rotation(n, 1)));
    for (const auto& x : elems) {
      CHECK(inverse(inverse(x)) == x);
      CHECK(multiply(x, inverse(x)) == identity(n));
    }
  }
}

TEST_CASE("associativity on random triples for larger n") {
  std::mt19937 rng(7);
  for (int n : {31, 97, 360}) {
    std::uniform_int_distribution<int> idx(0, 2 * n - 1);
    for (int trial = 0; trial < 500; ++trial) {
      GroupElement x = element_at(n, idx(rng));
      GroupElement y = element_at(n, idx(rng));
      GroupElement z = element_at(n, idx(rng));
      CHECK(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)));
    }
  }
}

TEST_CASE("generates via closure") {
  CHECK(generates(7, {reflection(7, 0), reflection(7, 1)}));
  CHECK_FALSE(generates(7, {rotation(7, 1)}));
  CHECK_FALSE(generates(9, {rotation(9, 3), reflection(9, 0)}));
  CHECK(subgroup_closure(9, {rotation(9, 3), reflection(9, 0)}).size() == 6);
}

TEST_CASE("generates agrees with the saturation reference for n <= 6") {
  for (int n = 2; n <= 6; ++n) {
    auto elems = all_elements(n);
    const int total = 2 * n;
    for (std::uint32_t mask = 0; mask < (1u << total); ++mask) {
      std::vector<GroupElement> subset;
      for (int i = 0; i < total; ++i) {
        if (mask & (1u << i)) subset.push_back(elems[i]);
      }
      bool expected = saturate(n, subset).size() == static_cast<std::size_t>(total);
      CHECK(generates(n, subset) == expected);
      if (is_prime(n)) CHECK(generates_prime(n, subset) == expected);
    }
  }
}

TEST_CASE("rotation_log") {
  CHECK(rotation_log(rotation(7, 3), rotation(7, 6)) == 2);
  CHECK(rotation_log(rotation(7, 3), identity(7)) == 0);
  CHECK(rotation_log(rotation(11, 4), rotation(11, 5)) == 4);
  CHECK_THROWS_AS(rotation_log(reflection(7, 1), rotation(7, 1)), std::invalid_argument);
  CHECK_THROWS_AS(rotation_log(rotation(7, 1), reflection(7, 1)), std::invalid_argument);
  CHECK_THROWS_AS(rotation_log(rotation(9, 3), rotation(9, 1)), std::invalid_argument);
}

TEST_CASE("rotation_log round-trips for composite and prime n") {
  for (int n : {5, 7, 9, 12}) {
    for (int b = 1; b < n; ++b) {
      if (std::gcd(b, n) != 1) continue;
      GroupElement base = rotation(n, b);
      for (int t = 0; t < n; ++t) {
        GroupElement target = rotation(n, t);
        CHECK(power(base, rotation_log(base, target)) == target);
      }
    }
  }
}

TEST_CASE("token encoding round-trips and rejects bad grammar") {
  for (int n : {2, 7, 9}) {
    for (const auto& x : all_elements(n)) {
      CHECK(parse_element(n, to_token(x)) == x);
    }
  }
  CHECK(to_token(identity(7)) == "r0");
  CHECK(to_token(reflection(7, 0)) == "s0");
  for (const char* bad : {"", "r", "s", "x3", "r-1", "r7", "s7", "r 1", "r03", "r1x"}) {
    CHECK_THROWS_AS(parse_element(7, bad), std::invalid_argument);
  }
}

TEST_CASE("vertex indexing is the stable r0..s(n-1) order") {
  CHECK(vertex_index(rotation(7, 0)) == 0);
  CHECK(vertex_index(rotation(7, 6)) == 6);
  CHECK(vertex_index(reflection(7, 0)) == 7);
  CHECK(vertex_index(reflection(7, 6)) == 13);
  for (int i = 0; i < 14; ++i) CHECK(vertex_index(element_at(7, i)) == i);
  CHECK_THROWS_AS(element_at(7, 14), std::invalid_argument);
}

TEST_CASE("is_prime") {
  CHECK(is_prime(2));
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(4));
  CHECK_FALSE(is_prime(91));
}
