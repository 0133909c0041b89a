#include "picenum/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace picenum::numtheory {

namespace {

void check_pos(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("numtheory: argument must be >= 1");
}

}  // namespace

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  check_pos(n);
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int mobius(std::int64_t n) {
  check_pos(n);
  int sign = 1;
  for (const auto& [p, e] : factorize(n)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

std::int64_t totient(std::int64_t n) {
  check_pos(n);
  std::int64_t r = n;
  for (const auto& [p, e] : factorize(n)) r = r / p * (p - 1);
  return r;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  check_pos(n);
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::int64_t gcd_all(const std::vector<std::int64_t>& v) {
  if (v.empty()) throw std::invalid_argument("gcd_all: empty list");
  std::int64_t g = 0;
  for (auto x : v) {
    check_pos(x);
    g = std::gcd(g, x);
  }
  return g;
}

}  // namespace picenum::numtheory
