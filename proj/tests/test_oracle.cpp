#include <doctest.h>

#include <set>

#include "hamdec/oracle.hpp"
#include "hamdec/verify.hpp"

using namespace hamdec;

namespace {

// Independent count: filter every subset of the 2p-1 non-identity elements
// directly for inverse closure and generation.
int direct_filter_count(int p) {
  std::vector<GroupElement> nonid;
  for (int i = 1; i < 2 * p; ++i) nonid.push_back(element_at(p, i));
  const int total = static_cast<int>(nonid.size());
  int count = 0;
  for (std::uint32_t mask = 1; mask < (1u << total); ++mask) {
    std::vector<GroupElement> subset;
    for (int i = 0; i < total; ++i) {
      if (mask & (1u << i)) subset.push_back(nonid[i]);
    }
    std::set<GroupElement> as_set(subset.begin(), subset.end());
    bool inverse_closed = true;
    for (const auto& g : subset) inverse_closed &= as_set.contains(inverse(g));
    if (inverse_closed && generates(p, subset)) ++count;
  }
  return count;
}

std::string signature(const ConnectionSet& s) {
  std::string out;
  for (const auto& g : s.elements) out += to_token(g) + ",";
  return out;
}

}  // namespace

TEST_CASE("enumeration counts match direct filtering") {
  // Regression pins, confirmed by direct_filter_count below.
  CHECK(enumerate_connection_sets(2).size() == 4);
  CHECK(enumerate_connection_sets(3).size() == 11);
  CHECK(enumerate_connection_sets(5).size() == 119);
  CHECK(enumerate_connection_sets(7).size() == 1009);

  CHECK(direct_filter_count(2) == 4);
  CHECK(direct_filter_count(3) == 11);
  CHECK(direct_filter_count(5) == 119);
  CHECK(direct_filter_count(7) == 1009);
}

TEST_CASE("enumeration yields valid, distinct sets") {
  for (int p : {2, 3, 5}) {
    std::set<std::string> seen;
    for (const auto& s : enumerate_connection_sets(p)) {
      CHECK(s.n == p);
      CHECK(seen.insert(signature(s)).second);
      // validate_connection_set already ran; spot-check the invariants.
      CHECK(generates(p, s.elements));
      for (const auto& g : s.elements) CHECK_FALSE(is_identity(g));
    }
  }
  auto p3 = enumerate_connection_sets(3);
  bool has_all_reflections = false;
  for (const auto& s : p3) has_all_reflections |= signature(s) == "s0,s1,s2,";
  CHECK(has_all_reflections);
  for (const auto& s : p3) CHECK(signature(s) != "r1,r2,");
  CHECK_THROWS_AS(enumerate_connection_sets(4), std::invalid_argument);
}

TEST_CASE("sampling produces valid sets deterministically") {
  auto a = sample_connection_sets(13, 50, 42);
  auto b = sample_connection_sets(13, 50, 42);
  REQUIRE(a.size() == 50);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(signature(a[i]) == signature(b[i]));
    CHECK(a[i].n == 13);
  }
}

TEST_CASE("brute force finds the unique certificate of a 2-regular graph") {
  CayleyGraph g = build_graph(parse_connection_set(3, "s0,s1"));
  auto d = brute_force_decomposition(g);
  REQUIRE(d.has_value());
  CHECK(d->cycles.size() == 1);
  CHECK(d->cycles[0].length() == 6);
  CHECK_FALSE(d->matching.has_value());
}

TEST_CASE("brute force handles odd valency") {
  CayleyGraph full = build_graph(parse_connection_set(3, "r1,r2,s0,s1,s2"));
  auto d = brute_force_decomposition(full);
  REQUIRE(d.has_value());
  CHECK(d->cycles.size() == 2);
  REQUIRE(d->matching.has_value());
  CHECK(d->matching->size() == 3);
  CHECK(verify_decomposition(full, *d).ok);

  CayleyGraph g5 = build_graph(parse_connection_set(5, "r1,r4,s0"));
  auto d5 = brute_force_decomposition(g5);
  REQUIRE(d5.has_value());
  CHECK(d5->cycles.size() == 1);
  CHECK(d5->matching.has_value());
}

TEST_CASE("brute force refuses oversized instances") {
  CayleyGraph big = build_graph(parse_connection_set(13, "s0,s1"));
  CHECK_THROWS_AS(brute_force_decomposition(big), InstanceTooLarge);

  // 14 vertices is fine up to valency 7 but not beyond.
  CayleyGraph wide = build_graph(parse_connection_set(7, "r1,r2,r5,r6,s0,s1,s2,s3,s4"));
  CHECK_THROWS_AS(brute_force_decomposition(wide), InstanceTooLarge);
  CayleyGraph ok = build_graph(parse_connection_set(7, "r1,r6,s0,s1,s2,s3,s4"));
  CHECK(brute_force_allowed(ok));
}

TEST_CASE("oracle and construction agree on existence for every set at p=3") {
  for (const auto& s : enumerate_connection_sets(3)) {
    CayleyGraph g = build_graph(s);
    Decomposition constructed = decompose(3, s);
    auto searched = brute_force_decomposition(g);
    REQUIRE(searched.has_value());
    CHECK(verify_decomposition(g, constructed).ok);
    CHECK(verify_decomposition(g, *searched).ok);
  }
}
