#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace picenum {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int factorial(long long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Int r = 1;
  for (long long i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Int int_pow(const Int& base, long long e) {
  if (e < 0) throw std::invalid_argument("int_pow: negative exponent");
  Int r = 1, b = base;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

inline Rat rat_pow(const Rat& base, long long e) {
  if (e >= 0) {
    Rat r = 1;
    for (long long i = 0; i < e; ++i) r *= base;
    return r;
  }
  if (base == 0) throw std::domain_error("rat_pow: zero to a negative power");
  Rat inv = Rat(1) / base;
  Rat r = 1;
  for (long long i = 0; i < -e; ++i) r *= inv;
  return r;
}

// binomial(n, k) for integer n (possibly negative) and k >= 0
inline Rat binomial(const Int& n, long long k) {
  if (k < 0) return 0;
  Rat r = 1;
  for (long long i = 0; i < k; ++i) r *= Rat(n - i, i + 1);
  return r;
}

// "p/q" or "p", lowest terms, positive denominator
inline std::string rat_to_string(const Rat& r) { return r.str(); }

inline Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("rat_from_string: empty string");
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  Int num(s.substr(0, slash));
  Int den(s.substr(slash + 1));
  if (den <= 0) throw std::invalid_argument("rat_from_string: nonpositive denominator in " + s);
  return Rat(num, den);
}

}  // namespace picenum
