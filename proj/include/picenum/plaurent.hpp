#pragma once

#include <map>
#include <string>
#include <vector>

#include "picenum/rational.hpp"
#include "picenum/symfunc.hpp"

namespace picenum {

// Laurent monomial prod P_j^{e_j}: map j -> e_j with e_j != 0.
using ExpKey = std::map<int, int>;

// sum_j e_j
long long exponent_sum(const ExpKey& k);
// sum_j j * e_j  (P_j has degree j)
long long laurent_degree(const ExpKey& k);

std::string key_to_string(const ExpKey& k);

// Canonical term order: laurent_degree first, then the serialized ascending
// (j, e_j) pair list lexicographically.
struct LaurentKeyLess {
  bool operator()(const ExpKey& a, const ExpKey& b) const;
};

// Sparse Laurent polynomial in the P_j with exact rational coefficients.
class Laurent {
 public:
  Laurent() = default;
  static Laurent monomial(const Rat& c, const ExpKey& k);

  const std::map<ExpKey, Rat, LaurentKeyLess>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rat coeff(const ExpKey& k) const;

  void add_term(const ExpKey& k, const Rat& c);
  Laurent scaled(const Rat& c) const;

  bool is_homogeneous(long long deg) const;

  bool operator==(const Laurent& o) const = default;

 private:
  std::map<ExpKey, Rat, LaurentKeyLess> terms_;
};

Laurent operator+(const Laurent& f, const Laurent& g);
Laurent operator*(const Laurent& f, const Laurent& g);

// lim_{x->1} (1-x)^{e0} F|_{P_k -> P_k/(1-x^k)}: monomials with exponent sum
// below e0 vanish, those at e0 pick up the factor prod_j j^{-e_j}.  A monomial
// with exponent sum above e0 diverges and raises std::domain_error.
Laurent limit_transform(const Laurent& f, long long e0);

// Evaluate with P_j -> assignment[j] (or dflt when absent).
Rat substitute_scalar(const Laurent& f, const std::map<int, Rat>& assignment,
                      const Rat& dflt);

// P_1 -> 1 + t, P_j -> 1 for j > 1; coefficients of t^0..t^max_n.
// Requires all P_1 exponents nonnegative.
std::vector<Rat> substitute_p1_series(const Laurent& f, int max_n);

// P_j -> 1 + p_j, negative powers expanded as geometric series, truncated at D.
SymSeries expand_to_symfunc(const Laurent& f, int trunc_degree);

enum class RenderFormat { text, latex, json };

std::string render(const Laurent& f, RenderFormat fmt);
Laurent parse_json(const std::string& text);

}  // namespace picenum
