#include "picenum/symfunc.hpp"

#include <functional>
#include <stdexcept>

#include "picenum/numtheory.hpp"

namespace picenum {

namespace {

void check_same_trunc(int a, int b) {
  if (a != b) throw std::invalid_argument("SymSeries: mismatched truncation degrees");
}

PowerMono mono_mul(const PowerMono& a, const PowerMono& b) {
  PowerMono out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin(), ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first < ib->first) {
      out.push_back(*ia++);
    } else if (ib->first < ia->first) {
      out.push_back(*ib++);
    } else {
      out.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    }
  }
  out.insert(out.end(), ia, a.end());
  out.insert(out.end(), ib, b.end());
  return out;
}

void require_plus(const SymSeries& g, const char* what) {
  if (g.constant_term() != 0)
    throw std::domain_error(std::string(what) + ": argument must have zero constant term");
}

}  // namespace

int mono_degree(const PowerMono& m) {
  int d = 0;
  for (const auto& [i, mult] : m) d += i * mult;
  return d;
}

SymSeries::SymSeries(int trunc_degree) : trunc_(trunc_degree) {
  if (trunc_degree < 0) throw std::invalid_argument("SymSeries: negative truncation degree");
}

SymSeries SymSeries::constant(const Rat& c, int trunc_degree) {
  SymSeries f(trunc_degree);
  f.add_term({}, c);
  return f;
}

SymSeries SymSeries::p(int i, int trunc_degree) {
  if (i < 1) throw std::invalid_argument("SymSeries::p: index must be >= 1");
  SymSeries f(trunc_degree);
  f.add_term({{i, 1}}, 1);
  return f;
}

Rat SymSeries::constant_term() const { return coeff({}); }

Rat SymSeries::coeff(const PowerMono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

void SymSeries::add_term(const PowerMono& m, const Rat& c) {
  if (c == 0 || mono_degree(m) > trunc_) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SymSeries SymSeries::homogeneous_part(int n) const {
  SymSeries out(trunc_);
  for (const auto& [m, c] : terms_)
    if (mono_degree(m) == n) out.add_term(m, c);
  return out;
}

SymSeries SymSeries::retruncate(int new_degree) const {
  SymSeries out(new_degree);
  for (const auto& [m, c] : terms_) out.add_term(m, c);
  return out;
}

SymSeries SymSeries::scaled(const Rat& c) const {
  SymSeries out(trunc_);
  for (const auto& [m, coef] : terms_) out.add_term(m, coef * c);
  return out;
}

SymSeries operator+(const SymSeries& f, const SymSeries& g) {
  check_same_trunc(f.trunc_degree(), g.trunc_degree());
  SymSeries out = f;
  for (const auto& [m, c] : g.terms()) out.add_term(m, c);
  return out;
}

SymSeries operator-(const SymSeries& f, const SymSeries& g) {
  return f + g.scaled(-1);
}

SymSeries operator*(const SymSeries& f, const SymSeries& g) {
  check_same_trunc(f.trunc_degree(), g.trunc_degree());
  SymSeries out(f.trunc_degree());
  for (const auto& [ma, ca] : f.terms()) {
    int da = mono_degree(ma);
    for (const auto& [mb, cb] : g.terms()) {
      if (da + mono_degree(mb) > out.trunc_degree()) continue;
      out.add_term(mono_mul(ma, mb), ca * cb);
    }
  }
  return out;
}

SymSeries scale_indices(const SymSeries& f, int k) {
  if (k < 1) throw std::invalid_argument("scale_indices: factor must be >= 1");
  SymSeries out(f.trunc_degree());
  for (const auto& [m, c] : f.terms()) {
    PowerMono scaled;
    scaled.reserve(m.size());
    for (const auto& [i, mult] : m) scaled.emplace_back(i * k, mult);
    out.add_term(scaled, c);
  }
  return out;
}

SymSeries plethysm(const SymSeries& f, const SymSeries& g) {
  check_same_trunc(f.trunc_degree(), g.trunc_degree());
  require_plus(g, "plethysm");
  const int D = f.trunc_degree();
  SymSeries out(D);
  for (const auto& [m, c] : f.terms()) {
    SymSeries acc = SymSeries::constant(c, D);
    for (const auto& [i, mult] : m) {
      SymSeries gi = scale_indices(g, i);
      for (int t = 0; t < mult; ++t) acc = acc * gi;
      if (acc.is_zero()) break;
    }
    for (const auto& [mm, cc] : acc.terms()) out.add_term(mm, cc);
  }
  return out;
}

SymSeries pexp(const SymSeries& f) {
  require_plus(f, "pexp");
  const int D = f.trunc_degree();
  SymSeries u(D);
  for (int n = 1; n <= D; ++n) u = u + scale_indices(f, n).scaled(Rat(1, n));
  // exp(u) - 1 with u of positive valuation
  SymSeries out(D), upow = SymSeries::constant(1, D);
  Rat inv_fact = 1;
  for (int k = 1; k <= D; ++k) {
    upow = upow * u;
    if (upow.is_zero()) break;
    inv_fact /= k;
    out = out + upow.scaled(inv_fact);
  }
  return out;
}

SymSeries plog(const SymSeries& f) {
  require_plus(f, "plog");
  const int D = f.trunc_degree();
  SymSeries out(D);
  for (int n = 1; n <= D; ++n) {
    int mu = numtheory::mobius(n);
    if (mu == 0) continue;
    SymSeries fn = scale_indices(f, n);
    if (fn.is_zero()) continue;
    SymSeries upow = SymSeries::constant(1, D);
    for (int k = 1; k <= D; ++k) {
      upow = upow * fn;
      if (upow.is_zero()) break;
      Rat coef = Rat(mu, n) * Rat(k % 2 ? 1 : -1, k);
      out = out + upow.scaled(coef);
    }
  }
  return out;
}

std::vector<Rat> specialize_rk(const SymSeries& f) {
  std::vector<Rat> out(f.trunc_degree() + 1, Rat(0));
  for (const auto& [m, c] : f.terms()) {
    if (m.size() > 1 || (m.size() == 1 && m[0].first != 1)) continue;
    out[m.empty() ? 0 : m[0].second] += c;
  }
  return out;
}

std::vector<Rat> specialize_inv(const SymSeries& f) {
  std::vector<Rat> out(f.trunc_degree() + 1, Rat(0));
  for (const auto& [m, c] : f.terms()) out[mono_degree(m)] += c;
  return out;
}

MarkedSeries::MarkedSeries(int trunc_degree, int marker_order)
    : trunc_(trunc_degree), xorder_(marker_order) {
  if (trunc_degree < 0 || marker_order < 0)
    throw std::invalid_argument("MarkedSeries: negative truncation order");
}

void MarkedSeries::add_term(const PowerMono& m, int xexp, const Rat& c) {
  if (c == 0 || mono_degree(m) > trunc_ || xexp > xorder_) return;
  Key key{m, xexp};
  auto [it, inserted] = terms_.emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MarkedSeries MarkedSeries::truncate_to(int new_degree, int new_order) const {
  MarkedSeries out(new_degree, new_order);
  for (const auto& [key, c] : terms_) out.add_term(key.first, key.second, c);
  return out;
}

MarkedSeries operator+(const MarkedSeries& f, const MarkedSeries& g) {
  if (f.trunc_degree() != g.trunc_degree() || f.marker_order() != g.marker_order())
    throw std::invalid_argument("MarkedSeries: mismatched truncation orders");
  MarkedSeries out = f;
  for (const auto& [key, c] : g.terms()) out.add_term(key.first, key.second, c);
  return out;
}

MarkedSeries operator*(const MarkedSeries& f, const MarkedSeries& g) {
  if (f.trunc_degree() != g.trunc_degree() || f.marker_order() != g.marker_order())
    throw std::invalid_argument("MarkedSeries: mismatched truncation orders");
  MarkedSeries out(f.trunc_degree(), f.marker_order());
  for (const auto& [ka, ca] : f.terms()) {
    int da = mono_degree(ka.first);
    for (const auto& [kb, cb] : g.terms()) {
      if (da + mono_degree(kb.first) > out.trunc_degree()) continue;
      if (ka.second + kb.second > out.marker_order()) continue;
      out.add_term(mono_mul(ka.first, kb.first), ka.second + kb.second, ca * cb);
    }
  }
  return out;
}

namespace {

// Expand f termwise through an image of each p_i given as a marked series.
MarkedSeries apply_hom(const SymSeries& f, int X,
                       const std::function<MarkedSeries(int)>& image_of_p) {
  const int D = f.trunc_degree();
  MarkedSeries out(D, X);
  for (const auto& [m, c] : f.terms()) {
    MarkedSeries acc(D, X);
    acc.add_term({}, 0, c);
    for (const auto& [i, mult] : m) {
      MarkedSeries pi = image_of_p(i);
      for (int t = 0; t < mult; ++t) acc = acc * pi;
      if (acc.is_zero()) break;
    }
    for (const auto& [key, cc] : acc.terms()) out.add_term(key.first, key.second, cc);
  }
  return out;
}

}  // namespace

MarkedSeries inv_delta(const SymSeries& f, int marker_order) {
  const int D = f.trunc_degree();
  return apply_hom(f, marker_order, [&](int i) {
    MarkedSeries img(D, marker_order);
    img.add_term({{i, 1}}, 0, 1);
    img.add_term({}, i, 1);
    return img;
  });
}

MarkedSeries transform_T(const SymSeries& f, int marker_order) {
  const int D = f.trunc_degree();
  const int X = marker_order;
  return apply_hom(f, X, [&](int i) {
    // (p_i + x^i) * (1 + x^i + x^{2i} + ...) truncated at x^X
    MarkedSeries img(D, X);
    for (int j = 0; i * j <= X; ++j) {
      img.add_term({{i, 1}}, i * j, 1);
      if (j >= 1) img.add_term({}, i * j, 1);
    }
    return img;
  });
}

MarkedSeries compose(const MarkedSeries& f, const SymSeries& g) {
  if (f.trunc_degree() != g.trunc_degree())
    throw std::invalid_argument("compose: mismatched truncation degrees");
  require_plus(g, "compose");
  const int D = f.trunc_degree();
  MarkedSeries out(D, f.marker_order());
  for (const auto& [key, c] : f.terms()) {
    SymSeries acc = SymSeries::constant(c, D);
    for (const auto& [i, mult] : key.first) {
      SymSeries gi = scale_indices(g, i);
      for (int t = 0; t < mult; ++t) acc = acc * gi;
      if (acc.is_zero()) break;
    }
    for (const auto& [m, cc] : acc.terms()) out.add_term(m, key.second, cc);
  }
  return out;
}

}  // namespace picenum
