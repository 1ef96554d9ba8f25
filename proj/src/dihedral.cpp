#include "hamdec/dihedral.hpp"

#include <cctype>
#include <charconv>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

namespace hamdec {

namespace {

int mod_n(long long v, int n) {
  long long r = v % n;
  if (r < 0) r += n;
  return static_cast<int>(r);
}

void check_order(int n) {
  if (n < 1) throw std::invalid_argument("dihedral parameter n must be positive");
}

void check_same_order(const GroupElement& x, const GroupElement& y, const char* op) {
  if (x.n != y.n) {
    throw std::invalid_argument(std::string(op) + ": mixed group orders " +
                                std::to_string(x.n) + " and " + std::to_string(y.n));
  }
}

// Inverse of a mod n, for gcd(a, n) == 1.
int mod_inverse(int a, int n) {
  long long t = 0, new_t = 1;
  long long r = n, new_r = a;
  while (new_r != 0) {
    long long q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw std::invalid_argument("mod_inverse: arguments not coprime");
  return mod_n(t, n);
}

}  // namespace

GroupElement rotation(int n, long long exponent) {
  check_order(n);
  return GroupElement{n, false, mod_n(exponent, n)};
}

GroupElement reflection(int n, long long exponent) {
  check_order(n);
  return GroupElement{n, true, mod_n(exponent, n)};
}

GroupElement identity(int n) { return rotation(n, 0); }

bool is_identity(const GroupElement& x) { return !x.reflected && x.exponent == 0; }

GroupElement multiply(const GroupElement& x, const GroupElement& y) {
  check_same_order(x, y, "multiply");
  // (b^e1 a^k1)(b^e2 a^k2) = b^(e1 xor e2) a^((-1)^e2 k1 + k2)
  long long k1 = y.reflected ? -static_cast<long long>(x.exponent) : x.exponent;
  return GroupElement{x.n, x.reflected != y.reflected, mod_n(k1 + y.exponent, x.n)};
}

GroupElement inverse(const GroupElement& x) {
  if (x.reflected) return x;  // reflections are involutions
  return rotation(x.n, -static_cast<long long>(x.exponent));
}

GroupElement power(const GroupElement& x, long long e) {
  if (!x.reflected) return rotation(x.n, static_cast<long long>(x.exponent) * (e % x.n));
  if (e % 2 == 0) return identity(x.n);
  return x;
}

int vertex_index(const GroupElement& x) {
  return x.exponent + (x.reflected ? x.n : 0);
}

GroupElement element_at(int n, int index) {
  check_order(n);
  if (index < 0 || index >= 2 * n) throw std::invalid_argument("element_at: index out of range");
  return index < n ? rotation(n, index) : reflection(n, index - n);
}

std::vector<GroupElement> subgroup_closure(int n, const std::vector<GroupElement>& gens) {
  check_order(n);
  for (const auto& g : gens) check_same_order(g, identity(n), "subgroup_closure");
  std::vector<char> seen(2 * n, 0);
  std::vector<GroupElement> frontier{identity(n)};
  seen[0] = 1;
  std::size_t head = 0;
  while (head < frontier.size()) {
    GroupElement cur = frontier[head++];
    for (const auto& g : gens) {
      GroupElement next = multiply(g, cur);
      int idx = vertex_index(next);
      if (!seen[idx]) {
        seen[idx] = 1;
        frontier.push_back(next);
      }
    }
  }
  std::vector<GroupElement> out;
  out.reserve(frontier.size());
  for (int idx = 0; idx < 2 * n; ++idx) {
    if (seen[idx]) out.push_back(element_at(n, idx));
  }
  return out;
}

bool generates(int n, const std::vector<GroupElement>& gens) {
  return subgroup_closure(n, gens).size() == static_cast<std::size_t>(2 * n);
}

bool generates_prime(int p, const std::vector<GroupElement>& gens) {
  if (!is_prime(p)) throw std::invalid_argument("generates_prime: p must be prime");
  bool has_rotation = false;
  int first_reflection = -1;
  bool two_reflections = false;
  for (const auto& g : gens) {
    check_same_order(g, identity(p), "generates_prime");
    if (g.reflected) {
      if (first_reflection < 0) {
        first_reflection = g.exponent;
      } else if (g.exponent != first_reflection) {
        two_reflections = true;
      }
    } else if (!is_identity(g)) {
      has_rotation = true;
    }
  }
  return first_reflection >= 0 && (has_rotation || two_reflections);
}

int rotation_log(const GroupElement& base, const GroupElement& target) {
  check_same_order(base, target, "rotation_log");
  if (base.reflected) throw std::invalid_argument("rotation_log: base must be a rotation");
  if (target.reflected) throw std::invalid_argument("rotation_log: target must be a rotation");
  if (std::gcd(base.exponent, base.n) != 1) {
    throw std::invalid_argument("rotation_log: base does not generate the rotation subgroup");
  }
  long long inv = mod_inverse(base.exponent, base.n);
  return mod_n(inv * target.exponent, base.n);
}

std::string to_token(const GroupElement& x) {
  return (x.reflected ? "s" : "r") + std::to_string(x.exponent);
}

GroupElement parse_element(int n, std::string_view token) {
  check_order(n);
  auto fail = [&] {
    throw std::invalid_argument("bad element token '" + std::string(token) + "'");
  };
  if (token.size() < 2 || (token[0] != 'r' && token[0] != 's')) fail();
  std::string_view digits = token.substr(1);
  if (digits[0] < '0' || digits[0] > '9') fail();
  if (digits.size() > 1 && digits[0] == '0') fail();  // no leading zeros
  int value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) fail();
  if (value >= n) {
    throw std::invalid_argument("element token '" + std::string(token) +
                                "' out of range for n=" + std::to_string(n));
  }
  return GroupElement{n, token[0] == 's', value};
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace hamdec
