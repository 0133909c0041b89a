#include "picenum/formulas.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "picenum/numtheory.hpp"

namespace picenum {

namespace {

using numtheory::divisors;
using numtheory::mobius;
using numtheory::totient;

void check_genus(int g) {
  if (g < 2) throw std::domain_error("genus must be >= 2");
}

// Proper divisors of n (all d | n with d < n), increasing.
std::vector<std::int64_t> proper_divisors(std::int64_t n) {
  auto d = divisors(n);
  d.pop_back();
  return d;
}

// Enumerates exponent assignments a_i >= 0 over `divs` (descending recursion)
// with sum rem_a and weighted sum rem_w, gcd of the chosen divisors 1.
// Calls sink(a) for each solution; a is indexed like `divs`.
template <typename Sink>
void enumerate_assignments(const std::vector<std::int64_t>& divs, size_t idx,
                           long long rem_a, long long rem_w, std::int64_t gcd_so_far,
                           std::vector<long long>& a, const Sink& sink) {
  if (rem_a == 0) {
    if (rem_w == 0 && gcd_so_far == 1) sink(a);
    return;
  }
  if (idx == 0) return;
  // Divisor 1 is always present, so the reachable weights are [rem_a, rem_a*d].
  std::int64_t d = divs[idx - 1];
  if (rem_w < rem_a || rem_w > rem_a * d) return;
  long long max_here = std::min(rem_a, rem_w / d);
  for (long long t = max_here; t >= 0; --t) {
    a[idx - 1] = t;
    enumerate_assignments(divs, idx - 1, rem_a - t, rem_w - t * d,
                          t > 0 ? std::gcd(gcd_so_far, d) : gcd_so_far, a, sink);
  }
  a[idx - 1] = 0;
}

}  // namespace

std::pair<long long, long long> wz_enumeration_bounds(int g) {
  check_genus(g);
  return {std::max<long long>(g + 1, 6LL * (g - 1)), g};
}

Laurent weight_zero_jacobian_bounded(int g, long long m_max, long long k_max) {
  check_genus(g);
  Laurent out;
  for (long long k = 1; k <= k_max; ++k) {
    for (long long m = 2; m <= m_max; ++m) {
      long long target = k * m + 1 - g;  // sum a_i d_i
      if (target < k + 1) continue;
      auto divs = proper_divisors(m);
      if (target > static_cast<long long>(k + 1) * divs.back()) continue;
      Rat base = Rat((k % 2 ? -1 : 1) * int_pow(m, k - 1) * factorial(k - 1));
      std::vector<long long> a(divs.size(), 0);
      enumerate_assignments(divs, divs.size(), k + 1, target, 0, a,
                            [&](const std::vector<long long>& assign) {
        Rat coef = base;
        ExpKey key{{static_cast<int>(m), static_cast<int>(-k)}};
        for (size_t i = 0; i < divs.size(); ++i) {
          if (assign[i] == 0) continue;
          int mu = mobius(m / divs[i]);
          if (mu == 0) { coef = 0; break; }
          int sgn = (mu == -1 && assign[i] % 2 != 0) ? -1 : 1;
          coef *= Rat(Int(sgn), int_pow(divs[i], assign[i]) * factorial(assign[i]));
          key[static_cast<int>(divs[i])] = static_cast<int>(assign[i]);
        }
        out.add_term(key, coef);
      });
    }
  }
  return out;
}

Laurent weight_zero_jacobian(int g) {
  auto [m_max, k_max] = wz_enumeration_bounds(g);
  return weight_zero_jacobian_bounded(g, m_max, k_max);
}

Int n_count_closed(int r, const std::vector<int>& k) {
  if (r < 1) throw std::invalid_argument("n_count_closed: r must be >= 1");
  for (size_t i = 1; i < k.size() && i < static_cast<size_t>(r); ++i)
    if (k[i] > 0 && r % i != 0)
      throw std::domain_error("n_count_closed: k_i > 0 requires i | r");
  Rat total = 0;
  for (auto d : divisors(r)) {
    Rat prod = totient(d);
    for (size_t i = 1; i < k.size() && i < static_cast<size_t>(r); ++i) {
      if (k[i] == 0) continue;
      std::int64_t gd = std::gcd(d, static_cast<std::int64_t>(i));
      Rat c = Rat(mobius(d / gd) * totient(r / i), totient(d / gd));
      prod *= rat_pow(c, k[i]);
    }
    total += prod;
  }
  total /= r;
  if (boost::multiprecision::denominator(total) != 1)
    throw std::logic_error("n_count_closed: non-integral count");
  return boost::multiprecision::numerator(total);
}

Int n_count_oracle(int r, const std::vector<int>& k) {
  if (r < 1) throw std::invalid_argument("n_count_oracle: r must be >= 1");
  std::vector<Int> dp(r, 0);
  dp[0] = 1;
  for (size_t i = 1; i < k.size() && i < static_cast<size_t>(r); ++i) {
    if (k[i] == 0) continue;
    if (r % i != 0) throw std::domain_error("n_count_oracle: k_i > 0 requires i | r");
    std::vector<int> cls(r, 0);
    for (int x = 1; x < r; ++x)
      if (std::gcd<std::int64_t>(r, x) == static_cast<std::int64_t>(i)) cls[x] = 1;
    for (int rep = 0; rep < k[i]; ++rep) {
      std::vector<Int> next(r, 0);
      for (int a = 0; a < r; ++a) {
        if (dp[a] == 0) continue;
        for (int x = 1; x < r; ++x)
          if (cls[x]) next[(a + x) % r] += dp[a];
      }
      dp = std::move(next);
    }
  }
  return dp[0];
}

Laurent topological_jacobian(int g, bool cross_check) {
  check_genus(g);
  Laurent out;
  for (int r = 2; r <= 4 * g + 2; ++r) {
    auto divs = proper_divisors(r);
    for (int s = 3; s <= 2 * g + 2; ++s) {
      long long target = 2LL - 2 * g + static_cast<long long>(r) * (s - 2);  // sum i k_i
      if (target < s || target > static_cast<long long>(s) * divs.back()) continue;
      Rat base = Rat((s % 2 ? 1 : -1) * factorial(s - 3) * int_pow(r, s - 3));
      std::vector<long long> a(divs.size(), 0);
      enumerate_assignments(divs, divs.size(), s, target, 0, a,
                            [&](const std::vector<long long>& assign) {
        std::vector<int> kvec(r, 0);
        Rat denom = 1;
        ExpKey key{{r, 2 - s}};
        for (size_t i = 0; i < divs.size(); ++i) {
          if (assign[i] == 0) continue;
          int d = static_cast<int>(divs[i]);
          kvec[d] = static_cast<int>(assign[i]);
          denom *= Rat(int_pow(d, assign[i]) * factorial(assign[i]));
          key[d] = static_cast<int>(assign[i]);
        }
        Int n = n_count_closed(r, kvec);
        if (cross_check && n != n_count_oracle(r, kvec))
          throw std::logic_error("topological_jacobian: N cross-check mismatch");
        out.add_term(key, base * Rat(n) / denom);
      });
    }
  }
  return out;
}

namespace {

Laurent jacobian(int g, Kind kind) {
  return kind == Kind::weight0 ? weight_zero_jacobian(g) : topological_jacobian(g);
}

}  // namespace

Rat chi_pic(int g, Kind kind) {
  return substitute_scalar(jacobian(g, kind), {}, 1);
}

std::vector<Rat> chi_series(int g, Kind kind, int max_n) {
  auto series = substitute_p1_series(jacobian(g, kind), max_n);
  Int fact = 1;
  for (int n = 0; n <= max_n; ++n) {
    if (n > 1) fact *= n;
    series[n] *= fact;
  }
  return series;
}

SymSeries equivariant_chi(int g, Kind kind, int n) {
  if (n < 0) throw std::invalid_argument("equivariant_chi: n must be >= 0");
  return expand_to_symfunc(jacobian(g, kind), n).homogeneous_part(n);
}

}  // namespace picenum
