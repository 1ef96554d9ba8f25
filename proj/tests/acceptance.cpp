// Acceptance suite: runs every top-level requirement at its stated scale and
// prints one pass/fail line per criterion. Exit code 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hamdec/certificate.hpp"
#include "hamdec/oracle.hpp"

using namespace hamdec;

namespace {

struct Tally {
  long long checked = 0;
  long long failed = 0;
  std::string first_failure;

  void fail(const std::string& detail) {
    ++failed;
    if (first_failure.empty()) first_failure = detail;
  }
};

std::string set_signature(const ConnectionSet& s) {
  std::string out;
  for (const auto& g : s.elements) {
    if (!out.empty()) out += ",";
    out += to_token(g);
  }
  return out;
}

bool check_instance(int p, const ConnectionSet& s, Tally& tally) {
  ++tally.checked;
  CayleyGraph g = build_graph(s);
  Decomposition d = decompose(p, s);
  VerificationReport report = verify_decomposition(g, d);
  bool counts_ok = d.cycles.size() == s.elements.size() / 2 &&
                   d.matching.has_value() == (s.elements.size() % 2 == 1);
  if (!report.ok || !counts_ok) {
    tally.fail("p=" + std::to_string(p) + " S={" + set_signature(s) + "}");
    return false;
  }
  return true;
}

// --- criterion 1: exhaustive decomposition check, p in {2,3,5,7,11} -------------

bool criterion_exhaustive(std::string& detail) {
  const std::map<int, long long> pinned = {{2, 4}, {3, 11}, {5, 119}, {7, 1009}, {11, 65493}};
  Tally tally;
  bool counts_ok = true;
  for (const auto& [p, expected] : pinned) {
    long long seen = 0;
    InstanceSweep sweep(p);
    while (auto s = sweep.next()) {
      ++seen;
      check_instance(p, *s, tally);
    }
    if (seen != expected) {
      counts_ok = false;
      tally.fail("p=" + std::to_string(p) + " enumerated " + std::to_string(seen) +
                 " sets, pinned " + std::to_string(expected));
    }
  }
  std::ostringstream os;
  os << tally.checked << " instances";
  if (tally.failed) os << ", " << tally.failed << " failed (" << tally.first_failure << ")";
  detail = os.str();
  return tally.failed == 0 && counts_ok;
}

// --- criterion 2: sampled check at p=13 ------------------------------------

bool criterion_sampled_13(std::string& detail) {
  Tally tally;
  for (const auto& s : sample_connection_sets(13, 1000, 20250811ull)) {
    check_instance(13, s, tally);
  }
  detail = std::to_string(tally.checked) + " sampled instances";
  if (tally.failed) detail += ", " + std::to_string(tally.failed) + " failed";
  return tally.failed == 0;
}

// --- criterion 3: oracle agreement on p in {3,5} ---------------------------

bool criterion_oracle_agreement(std::string& detail) {
  Tally tally;
  for (int p : {3, 5}) {
    InstanceSweep sweep(p);
    while (auto s = sweep.next()) {
      ++tally.checked;
      CayleyGraph g = build_graph(*s);
      Decomposition constructed = decompose(p, *s);
      auto searched = brute_force_decomposition(g);
      bool ok = searched.has_value() && verify_decomposition(g, constructed).ok &&
                verify_decomposition(g, *searched).ok;
      if (!ok) tally.fail("p=" + std::to_string(p) + " S={" + set_signature(*s) + "}");
    }
  }
  detail = std::to_string(tally.checked) + " instances cross-checked";
  if (tally.failed) detail += ", " + std::to_string(tally.failed) + " failed";
  return tally.failed == 0;
}

// --- criterion 4: tetravalent generality over n in 3..40 -------------------

bool criterion_tetravalent(std::string& detail) {
  Tally tally;
  auto check_triple = [&](int n, int i, int j, int k) {
    ++tally.checked;
    Decomposition d = decompose_tetravalent(n, i, j, k);
    ConnectionSet s = validate_connection_set(
        n, {rotation(n, i), rotation(n, -i), reflection(n, j), reflection(n, k)});
    CayleyGraph g = build_graph(s);
    if (d.cycles.size() != 2 || !verify_decomposition(g, d).ok) {
      tally.fail("n=" + std::to_string(n) + " (i,j,k)=(" + std::to_string(i) + "," +
                 std::to_string(j) + "," + std::to_string(k) + ")");
    }
  };

  for (int n = 3; n <= 20; ++n) {
    for (int i = 1; i < n; ++i) {
      if (std::gcd(i, n) != 1) continue;
      for (int j = 0; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
          if (std::gcd(k - j, n) != 1) continue;
          check_triple(n, i, j, k);
        }
      }
    }
  }
  std::mt19937 rng(1234);
  for (int n = 21; n <= 40; ++n) {
    std::uniform_int_distribution<int> pick(0, n - 1);
    int done = 0;
    while (done < 200) {
      int i = pick(rng);
      int j = pick(rng);
      int k = pick(rng);
      if (i < 1 || std::gcd(i, n) != 1) continue;
      if (j >= k || std::gcd(k - j, n) != 1) continue;
      check_triple(n, i, j, k);
      ++done;
    }
  }
  detail = std::to_string(tally.checked) + " triples";
  if (tally.failed) detail += ", " + std::to_string(tally.failed) + " failed (" +
                              tally.first_failure + ")";
  return tally.failed == 0;
}

// --- criterion 5: base-plan soundness ---------------------------------------

bool criterion_base_plans(std::string& detail) {
  Tally tally;
  for (int p : {5, 7, 11, 13, 17}) {
    const int half = (p - 1) / 2;
    for (std::uint32_t mask = 1; mask < (1u << half); ++mask) {
      std::vector<int> exps;
      for (int e = 1; e <= half; ++e) {
        if (mask & (1u << (e - 1))) exps.push_back(e);
      }
      ++tally.checked;
      BasePlan plan = choose_base_points(exps, p);
      const int s = static_cast<int>(exps.size());
      bool ok = true;
      for (int t = 0; t < s && ok; ++t) {
        ok = plan.base_points[t] >= 0 && plan.base_points[t] + exps[t] <= p - 1;
      }
      for (int t = 0; t < s && ok; ++t) {
        for (int r = t + 1; r < s && ok; ++r) {
          int lo1 = plan.base_points[t], hi1 = lo1 + exps[t];
          int lo2 = plan.base_points[r], hi2 = lo2 + exps[r];
          bool disjoint = hi1 < lo2 || hi2 < lo1;
          bool nested = (lo1 < lo2 && hi2 < hi1) || (lo2 < lo1 && hi1 < hi2);
          ok = disjoint || nested;
        }
      }
      if (!ok) {
        std::string sig = "p=" + std::to_string(p) + " i=(";
        for (int e : exps) sig += std::to_string(e) + ",";
        tally.fail(sig + ")");
      }
    }
  }
  detail = std::to_string(tally.checked) + " exponent sequences";
  if (tally.failed) detail += ", " + std::to_string(tally.failed) + " failed (" +
                              tally.first_failure + ")";
  return tally.failed == 0;
}

// --- criterion 6: corruption rejection --------------------------------------

std::multiset<EdgeKey> cycle_key_multiset(const Cycle& c) {
  auto keys = cycle_edge_keys(c);
  return {keys.begin(), keys.end()};
}

bool criterion_corruption(std::string& detail) {
  std::vector<std::pair<int, ConnectionSet>> picks;
  for (const auto& s : enumerate_connection_sets(3)) picks.emplace_back(3, s);
  auto p5 = enumerate_connection_sets(5);
  for (int i = 0; i < 45; ++i) picks.emplace_back(5, p5[i]);
  auto p7 = enumerate_connection_sets(7);
  for (int i = 0; i < 44; ++i) picks.emplace_back(7, p7[i]);

  Tally certs;
  long long corruptions = 0;
  for (const auto& [p, s] : picks) {
    ++certs.checked;
    CayleyGraph g = build_graph(s);
    Decomposition good = decompose(p, s);
    if (!verify_decomposition(g, good).ok) {
      certs.fail("baseline p=" + std::to_string(p) + " S={" + set_signature(s) + "}");
      continue;
    }
    auto expect_rejected = [&](const Decomposition& corrupted, const char* what) {
      ++corruptions;
      VerificationReport report = verify_decomposition(g, corrupted);
      bool witnessed = std::any_of(report.failures.begin(), report.failures.end(),
                                   [](const Finding& f) { return !f.witnesses.empty(); });
      if (report.ok || report.failures.empty() || !witnessed) {
        certs.fail(std::string(what) + " accepted: p=" + std::to_string(p) + " S={" +
                   set_signature(s) + "}");
      }
    };

    for (std::size_t c = 0; c < good.cycles.size(); ++c) {
      const int len = good.cycles[c].length();
      auto original_keys = cycle_key_multiset(good.cycles[c]);
      // every vertex swap that actually changes the cycle's edge set
      for (int i = 0; i < len; ++i) {
        for (int j = i + 1; j < len; ++j) {
          Decomposition mutated = good;
          std::swap(mutated.cycles[c].vertices[i], mutated.cycles[c].vertices[j]);
          if (cycle_key_multiset(mutated.cycles[c]) == original_keys) continue;
          expect_rejected(mutated, "vertex swap");
        }
      }
      // every single-vertex drop
      for (int i = 0; i < len; ++i) {
        Decomposition mutated = good;
        mutated.cycles[c].vertices.erase(mutated.cycles[c].vertices.begin() + i);
        expect_rejected(mutated, "vertex drop");
      }
      // part duplication
      Decomposition duplicated = good;
      duplicated.cycles.push_back(good.cycles[c]);
      duplicated.cycle_routes.push_back("dup");
      expect_rejected(duplicated, "cycle duplication");
    }
    if (good.matching) {
      for (auto it = good.matching->begin(); it != good.matching->end(); ++it) {
        Decomposition mutated = good;
        mutated.matching->erase(it->first);
        expect_rejected(mutated, "matching edge drop");
      }
    }
  }
  std::ostringstream os;
  os << certs.checked << " certificates, " << corruptions << " corruptions";
  if (certs.failed) os << ", " << certs.failed << " failures (" << certs.first_failure << ")";
  detail = os.str();
  return certs.failed == 0;
}

// --- criterion 7: group arithmetic ------------------------------------------

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

bool criterion_group_arithmetic(std::string& detail) {
  Tally tally;
  for (int n = 2; n <= 6; ++n) {
    std::vector<GroupElement> elems;
    for (int i = 0; i < 2 * n; ++i) elems.push_back(element_at(n, i));

    for (const auto& x : elems) {
      for (const auto& y : elems) {
        for (const auto& z : elems) {
          ++tally.checked;
          if (multiply(multiply(x, y), z) != multiply(x, multiply(y, z))) {
            tally.fail("associativity n=" + std::to_string(n));
          }
        }
      }
    }
    ++tally.checked;
    if (power(rotation(n, 1), n) != identity(n) ||
        multiply(reflection(n, 0), reflection(n, 0)) != identity(n) ||
        multiply(multiply(reflection(n, 0), rotation(n, 1)), reflection(n, 0)) !=
            inverse(rotation(n, 1))) {
      tally.fail("presentation relations n=" + std::to_string(n));
    }
    for (const auto& x : elems) {
      ++tally.checked;
      if (inverse(inverse(x)) != x) tally.fail("inverse involution n=" + std::to_string(n));
    }

    const int total = 2 * n;
    for (std::uint32_t mask = 0; mask < (1u << total); ++mask) {
      std::vector<GroupElement> subset;
      for (int i = 0; i < total; ++i) {
        if (mask & (1u << i)) subset.push_back(elems[i]);
      }
      ++tally.checked;
      bool reference = saturate(n, subset).size() == static_cast<std::size_t>(total);
      bool ok = generates(n, subset) == reference;
      if (ok && is_prime(n)) ok = generates_prime(n, subset) == reference;
      if (!ok) tally.fail("generates n=" + std::to_string(n));
    }
  }
  detail = std::to_string(tally.checked) + " checks";
  if (tally.failed) detail += ", " + std::to_string(tally.failed) + " failed (" +
                              tally.first_failure + ")";
  return tally.failed == 0;
}

}  // namespace

int main(int argc, char** argv) {
  struct Criterion {
    int id;
    const char* name;
    std::function<bool(std::string&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "exhaustive decomposition check, p in {2,3,5,7,11}", criterion_exhaustive},
      {2, "sampled check, 1000 sets at p=13", criterion_sampled_13},
      {3, "oracle agreement, p in {3,5}", criterion_oracle_agreement},
      {4, "tetravalent generality, n in 3..40", criterion_tetravalent},
      {5, "base-plan soundness, p in {5,7,11,13,17}", criterion_base_plans},
      {6, "corruption rejection, 100 certificates", criterion_corruption},
      {7, "group arithmetic, exhaustive n <= 6", criterion_group_arithmetic},
  };

  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  bool all_ok = true;
  for (const auto& c : criteria) {
    if (!selected.empty() && !selected.contains(c.id)) continue;
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = c.run(detail);
    auto seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(1);
    line << (ok ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.name << ": " << detail << " ("
         << seconds.count() << "s)";
    std::cout << line.str() << std::endl;
    all_ok = all_ok && ok;
  }
  return all_ok ? 0 : 1;
}
