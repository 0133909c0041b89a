#include "picenum/plaurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace picenum {

long long exponent_sum(const ExpKey& k) {
  long long s = 0;
  for (const auto& [j, e] : k) s += e;
  return s;
}

long long laurent_degree(const ExpKey& k) {
  long long s = 0;
  for (const auto& [j, e] : k) s += static_cast<long long>(j) * e;
  return s;
}

std::string key_to_string(const ExpKey& k) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [j, e] : k) {
    if (!first) os << ",";
    os << j << ":" << e;
    first = false;
  }
  os << "}";
  return os.str();
}

bool LaurentKeyLess::operator()(const ExpKey& a, const ExpKey& b) const {
  long long da = laurent_degree(a), db = laurent_degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Laurent Laurent::monomial(const Rat& c, const ExpKey& k) {
  Laurent f;
  f.add_term(k, c);
  return f;
}

Rat Laurent::coeff(const ExpKey& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rat(0) : it->second;
}

void Laurent::add_term(const ExpKey& k, const Rat& c) {
  if (c == 0) return;
  ExpKey clean;
  for (const auto& [j, e] : k) {
    if (j < 1) throw std::invalid_argument("Laurent: variable index must be >= 1");
    if (e != 0) clean.emplace(j, e);
  }
  auto [it, inserted] = terms_.emplace(std::move(clean), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Laurent Laurent::scaled(const Rat& c) const {
  Laurent out;
  for (const auto& [k, coef] : terms_) out.add_term(k, coef * c);
  return out;
}

bool Laurent::is_homogeneous(long long deg) const {
  for (const auto& [k, c] : terms_)
    if (laurent_degree(k) != deg) return false;
  return true;
}

Laurent operator+(const Laurent& f, const Laurent& g) {
  Laurent out = f;
  for (const auto& [k, c] : g.terms()) out.add_term(k, c);
  return out;
}

Laurent operator*(const Laurent& f, const Laurent& g) {
  Laurent out;
  for (const auto& [ka, ca] : f.terms()) {
    for (const auto& [kb, cb] : g.terms()) {
      ExpKey k = ka;
      for (const auto& [j, e] : kb) {
        auto [it, inserted] = k.emplace(j, e);
        if (!inserted) {
          it->second += e;
          if (it->second == 0) k.erase(it);
        }
      }
      out.add_term(k, ca * cb);
    }
  }
  return out;
}

Laurent limit_transform(const Laurent& f, long long e0) {
  Laurent out;
  for (const auto& [k, c] : f.terms()) {
    long long es = exponent_sum(k);
    if (es > e0)
      throw std::domain_error("limit_transform: divergent monomial " + key_to_string(k) +
                              " (exponent sum " + std::to_string(es) + " > " +
                              std::to_string(e0) + ")");
    if (es < e0) continue;
    Rat factor = 1;
    for (const auto& [j, e] : k) factor *= rat_pow(Rat(j), -e);
    out.add_term(k, c * factor);
  }
  return out;
}

Rat substitute_scalar(const Laurent& f, const std::map<int, Rat>& assignment,
                      const Rat& dflt) {
  Rat out = 0;
  for (const auto& [k, c] : f.terms()) {
    Rat v = c;
    for (const auto& [j, e] : k) {
      auto it = assignment.find(j);
      const Rat& val = it == assignment.end() ? dflt : it->second;
      v *= rat_pow(val, e);
    }
    out += v;
  }
  return out;
}

std::vector<Rat> substitute_p1_series(const Laurent& f, int max_n) {
  if (max_n < 0) throw std::invalid_argument("substitute_p1_series: negative order");
  std::vector<Rat> out(max_n + 1, Rat(0));
  for (const auto& [k, c] : f.terms()) {
    auto it = k.find(1);
    long long e1 = it == k.end() ? 0 : it->second;
    if (e1 < 0)
      throw std::domain_error("substitute_p1_series: negative P_1 exponent in " +
                              key_to_string(k));
    for (long long i = 0; i <= e1 && i <= max_n; ++i)
      out[static_cast<size_t>(i)] += c * binomial(Int(e1), i);
  }
  return out;
}

SymSeries expand_to_symfunc(const Laurent& f, int trunc_degree) {
  const int D = trunc_degree;
  SymSeries out(D);
  for (const auto& [k, c] : f.terms()) {
    SymSeries acc = SymSeries::constant(c, D);
    for (const auto& [j, e] : k) {
      // (1 + p_j)^e, geometric series when e < 0
      SymSeries factor(D);
      for (int i = 0; i * j <= D; ++i) {
        Rat b = binomial(Int(e), i);
        if (b == 0) break;  // terminates for e >= 0
        factor.add_term(i == 0 ? PowerMono{} : PowerMono{{j, i}}, b);
      }
      acc = acc * factor;
      if (acc.is_zero()) break;
    }
    for (const auto& [m, cc] : acc.terms()) out.add_term(m, cc);
  }
  return out;
}

namespace {

std::string mono_text(const ExpKey& k) {
  std::ostringstream num, den;
  int nnum = 0, nden = 0;
  for (const auto& [j, e] : k) {
    if (e > 0) {
      if (nnum++) num << "*";
      num << "P" << j;
      if (e > 1) num << "^" << e;
    } else {
      if (nden++) den << "*";
      den << "P" << j;
      if (e < -1) den << "^" << -e;
    }
  }
  std::string n = nnum ? num.str() : "1";
  if (!nden) return n;
  std::string d = den.str();
  if (nden > 1) d = "(" + d + ")";
  return n + "/" + d;
}

std::string coeff_latex(const Rat& c) {
  Int num = boost::multiprecision::numerator(c);
  Int den = boost::multiprecision::denominator(c);
  if (den == 1) return num.str();
  return "\\frac{" + num.str() + "}{" + den.str() + "}";
}

std::string mono_latex(const ExpKey& k) {
  auto var = [](int j, int e) {
    std::string s = "P_{" + std::to_string(j) + "}";
    int a = e < 0 ? -e : e;
    if (a > 1) s += "^{" + std::to_string(a) + "}";
    return s;
  };
  std::string num, den;
  for (const auto& [j, e] : k) {
    auto& dst = e > 0 ? num : den;
    if (!dst.empty()) dst += " ";
    dst += var(j, e);
  }
  if (den.empty()) return num;
  if (num.empty()) num = "1";
  return "\\frac{" + num + "}{" + den + "}";
}

std::string render_text(const Laurent& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : f.terms()) {
    Rat a = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k.empty()) {
      os << rat_to_string(a);
    } else if (a == 1) {
      os << mono_text(k);
    } else {
      os << rat_to_string(a) << " * " << mono_text(k);
    }
  }
  return os.str();
}

std::string render_latex(const Laurent& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : f.terms()) {
    Rat a = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k.empty()) {
      os << coeff_latex(a);
    } else if (a == 1) {
      os << mono_latex(k);
    } else {
      os << coeff_latex(a) << "\\," << mono_latex(k);
    }
  }
  return os.str();
}

std::string render_json(const Laurent& f) {
  nlohmann::ordered_json out;
  out["terms"] = nlohmann::ordered_json::array();
  for (const auto& [k, c] : f.terms()) {
    nlohmann::ordered_json term;
    term["coeff"] = rat_to_string(c);
    nlohmann::ordered_json exps = nlohmann::ordered_json::object();
    for (const auto& [j, e] : k) exps[std::to_string(j)] = e;
    term["exps"] = std::move(exps);
    out["terms"].push_back(std::move(term));
  }
  return out.dump();
}

}  // namespace

std::string render(const Laurent& f, RenderFormat fmt) {
  switch (fmt) {
    case RenderFormat::text: return render_text(f);
    case RenderFormat::latex: return render_latex(f);
    case RenderFormat::json: return render_json(f);
  }
  throw std::logic_error("render: unknown format");
}

Laurent parse_json(const std::string& text) {
  auto doc = nlohmann::json::parse(text);
  if (!doc.contains("terms") || !doc["terms"].is_array())
    throw std::invalid_argument("parse_json: missing terms array");
  Laurent out;
  for (const auto& term : doc["terms"]) {
    Rat c = rat_from_string(term.at("coeff").get<std::string>());
    ExpKey k;
    for (const auto& [js, ev] : term.at("exps").items()) {
      int e = ev.get<int>();
      if (e != 0) k.emplace(std::stoi(js), e);
    }
    out.add_term(k, c);
  }
  return out;
}

}  // namespace picenum
