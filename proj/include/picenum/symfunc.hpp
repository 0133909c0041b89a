#pragma once

#include <map>
#include <utility>
#include <vector>

#include "picenum/rational.hpp"

namespace picenum {

// Power-sum monomial prod p_i^{m_i}: ascending (i, m_i) pairs, m_i > 0.
// The empty vector is the constant monomial 1.
using PowerMono = std::vector<std::pair<int, int>>;

int mono_degree(const PowerMono& m);

// Element of Q[[p_1, p_2, ...]] truncated at total degree D, sparse in the
// power-sum basis with exact rational coefficients.
class SymSeries {
 public:
  explicit SymSeries(int trunc_degree);

  static SymSeries constant(const Rat& c, int trunc_degree);
  static SymSeries p(int i, int trunc_degree);

  int trunc_degree() const { return trunc_; }
  const std::map<PowerMono, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rat constant_term() const;
  Rat coeff(const PowerMono& m) const;

  // Accumulate c * m, dropping zero results and degrees above D.
  void add_term(const PowerMono& m, const Rat& c);

  SymSeries homogeneous_part(int n) const;
  // Copy with a different truncation degree (terms above it are dropped).
  SymSeries retruncate(int new_degree) const;
  SymSeries scaled(const Rat& c) const;

  bool operator==(const SymSeries& o) const = default;

 private:
  int trunc_;
  std::map<PowerMono, Rat> terms_;
};

SymSeries operator+(const SymSeries& f, const SymSeries& g);
SymSeries operator-(const SymSeries& f, const SymSeries& g);
SymSeries operator*(const SymSeries& f, const SymSeries& g);

// p_j -> p_{jk} on every term.
SymSeries scale_indices(const SymSeries& f, int k);

// f o g; g must have zero constant term.
SymSeries plethysm(const SymSeries& f, const SymSeries& g);

// Exp(f) = exp(sum_n (p_n o f)/n) - 1; f must have zero constant term.
SymSeries pexp(const SymSeries& f);

// Log(1 + f) = sum_n (mu(n)/n) log(1 + p_n o f); plethystic inverse of pexp.
SymSeries plog(const SymSeries& f);

// p_1 -> x, p_k -> 0 (k > 1); coefficients of x^0..x^D.
std::vector<Rat> specialize_rk(const SymSeries& f);

// p_k -> x^k; coefficients of x^0..x^D.
std::vector<Rat> specialize_inv(const SymSeries& f);

// Element of Lambda^[[x]], truncated at p-degree D and x-order X.
class MarkedSeries {
 public:
  using Key = std::pair<PowerMono, int>;  // (power-sum monomial, x exponent)

  MarkedSeries(int trunc_degree, int marker_order);

  int trunc_degree() const { return trunc_; }
  int marker_order() const { return xorder_; }
  const std::map<Key, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const PowerMono& m, int xexp, const Rat& c);
  MarkedSeries truncate_to(int new_degree, int new_order) const;

  bool operator==(const MarkedSeries& o) const = default;

 private:
  int trunc_;
  int xorder_;
  std::map<Key, Rat> terms_;
};

MarkedSeries operator+(const MarkedSeries& f, const MarkedSeries& g);
MarkedSeries operator*(const MarkedSeries& f, const MarkedSeries& g);

// Algebra map p_j -> p_j + x^j.
MarkedSeries inv_delta(const SymSeries& f, int marker_order);

// Algebra map p_n -> (p_n + x^n)/(1 - x^n), expanded geometrically in x.
MarkedSeries transform_T(const SymSeries& f, int marker_order);

// Plethysm with x inert: p_n -> g with indices scaled by n, x -> x.
// g must have zero constant term.
MarkedSeries compose(const MarkedSeries& f, const SymSeries& g);

}  // namespace picenum
