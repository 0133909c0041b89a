#include "picenum/verify.hpp"

#include <functional>
#include <sstream>

#include "picenum/formulas.hpp"
#include "picenum/golden.hpp"
#include "picenum/numtheory.hpp"

namespace picenum {

void VerificationReport::add(std::string id, std::string reference, bool passed,
                             std::string detail) {
  checks.push_back({std::move(id), std::move(reference), passed, std::move(detail)});
}

bool VerificationReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

SymSeries random_sym_series(std::mt19937& rng, int trunc_degree) {
  std::uniform_int_distribution<int> nterms(1, 3);
  std::uniform_int_distribution<int> deg(1, trunc_degree);
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  SymSeries f(trunc_degree);
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    int d = deg(rng);
    std::map<int, int> counts;
    while (d > 0) {
      int part = std::uniform_int_distribution<int>(1, d)(rng);
      ++counts[part];
      d -= part;
    }
    PowerMono m(counts.begin(), counts.end());
    int c = num(rng);
    if (c == 0) c = 1;
    f.add_term(m, Rat(c, den(rng)));
  }
  return f;
}

Laurent random_laurent(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(1, 4);
  std::uniform_int_distribution<int> nvars(1, 3);
  std::uniform_int_distribution<int> var(1, 6);
  std::uniform_int_distribution<int> exp(-3, 3);
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  Laurent f;
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    ExpKey key;
    int v = nvars(rng);
    for (int i = 0; i < v; ++i) {
      int e = exp(rng);
      if (e != 0) key[var(rng)] = e;
    }
    int c = num(rng);
    if (c == 0) c = 1;
    f.add_term(key, Rat(c, den(rng)));
  }
  return f;
}

bool check_transform_identity(const SymSeries& f, int marker_order) {
  const int d = f.trunc_degree();
  const int x = marker_order;
  const int padded = d + x;
  SymSeries lifted = f.retruncate(padded);
  SymSeries exp_p1 = pexp(SymSeries::p(1, padded));
  MarkedSeries marked = inv_delta(plethysm(lifted, exp_p1), x);
  MarkedSeries composite = compose(marked, plog(SymSeries::p(1, padded)));
  return composite.truncate_to(d, x) == transform_T(f, x);
}

VerificationReport verify_tables() {
  VerificationReport report;
  for (int g = 2; g <= 9; ++g) {
    Laurent expected = parse_json(std::string(golden::weight_zero(g)));
    Laurent computed = weight_zero_jacobian(g);
    bool ok = computed == expected;
    report.add("tables/wt0/g" + std::to_string(g),
               "weight-zero table, genus " + std::to_string(g), ok,
               ok ? "" : "computed: " + render(computed, RenderFormat::text));
  }
  for (int g = 2; g <= 4; ++g) {
    Laurent expected = parse_json(std::string(golden::topological(g)));
    Laurent computed = topological_jacobian(g);
    bool ok = computed == expected;
    report.add("tables/top/g" + std::to_string(g),
               "topological table, genus " + std::to_string(g), ok,
               ok ? "" : "computed: " + render(computed, RenderFormat::text));
  }
  return report;
}

VerificationReport verify_properties(unsigned seed, int depth) {
  VerificationReport report;
  const int d = depth;
  const int trials = 50;

  auto run = [&](const std::string& id, const std::string& reference,
                 const std::function<bool(std::mt19937&)>& body) {
    std::mt19937 rng(seed);
    bool ok = true;
    std::string detail;
    try {
      for (int t = 0; t < trials && ok; ++t) ok = body(rng);
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    report.add(id, reference, ok, detail);
  };

  run("symfunc/plethysm-associativity", "plethysm axioms", [&](std::mt19937& rng) {
    SymSeries f = random_sym_series(rng, d), g = random_sym_series(rng, d),
              h = random_sym_series(rng, d);
    return plethysm(plethysm(f, g), h) == plethysm(f, plethysm(g, h));
  });

  run("symfunc/plethysm-unit", "p_1 is the plethystic unit", [&](std::mt19937& rng) {
    SymSeries f = random_sym_series(rng, d);
    SymSeries p1 = SymSeries::p(1, d);
    return plethysm(f, p1) == f && plethysm(p1, f) == f;
  });

  run("symfunc/exp-log-inversion", "Exp and Log are mutually inverse",
      [&](std::mt19937& rng) {
        SymSeries f = random_sym_series(rng, d);
        return plog(pexp(f)) == f && pexp(plog(f)) == f;
      });

  run("symfunc/exp-additivity", "1 + Exp(f+g) = (1 + Exp(f))(1 + Exp(g))",
      [&](std::mt19937& rng) {
        SymSeries f = random_sym_series(rng, d), g = random_sym_series(rng, d);
        SymSeries one = SymSeries::constant(1, d);
        return one + pexp(f + g) == (one + pexp(f)) * (one + pexp(g));
      });

  run("symfunc/transform-composite", "transform equals marked composite route",
      [&](std::mt19937& rng) {
        return check_transform_identity(random_sym_series(rng, d), d);
      });

  {
    SymSeries e = pexp(SymSeries::p(1, d));
    auto inv = specialize_inv(e);
    bool ok = inv[0] == 0;
    for (int n = 1; n <= d; ++n) ok = ok && inv[n] == 1;
    report.add("symfunc/inv-of-exp", "inv(Exp(p_1)) is the geometric series", ok);
  }

  run("plaurent/limit-linearity", "limit operator is linear", [&](std::mt19937& rng) {
    // Restrict both inputs to exponent sum <= 1 so the limit is defined.
    auto clamp = [](const Laurent& f) {
      Laurent out;
      for (const auto& [k, c] : f.terms())
        if (exponent_sum(k) <= 1) out.add_term(k, c);
      return out;
    };
    Laurent f = clamp(random_laurent(rng)), g = clamp(random_laurent(rng));
    Laurent lhs = limit_transform(f + g.scaled(Rat(2, 3)), 1);
    Laurent rhs = limit_transform(f, 1) + limit_transform(g, 1).scaled(Rat(2, 3));
    return lhs == rhs;
  });

  run("plaurent/expand-homomorphism", "P_j -> 1 + p_j expansion is a ring map",
      [&](std::mt19937& rng) {
        Laurent f = random_laurent(rng), g = random_laurent(rng);
        return expand_to_symfunc(f * g, d) ==
               expand_to_symfunc(f, d) * expand_to_symfunc(g, d);
      });

  run("plaurent/scalar-sum", "all-ones substitution sums the coefficients",
      [&](std::mt19937& rng) {
        Laurent f = random_laurent(rng);
        Rat sum = 0;
        for (const auto& [k, c] : f.terms()) sum += c;
        return substitute_scalar(f, {}, 1) == sum;
      });

  run("plaurent/json-round-trip", "render/parse is lossless", [&](std::mt19937& rng) {
    Laurent f = random_laurent(rng);
    return parse_json(render(f, RenderFormat::json)) == f;
  });

  return report;
}

VerificationReport verify_ncount(int max_r) {
  VerificationReport report;

  // Exhaustive comparison over all multiplicity vectors of weight <= 6
  // supported on proper divisors of r.
  long long mismatches = 0, cases = 0;
  for (int r = 2; r <= max_r; ++r) {
    std::vector<int> divs;
    for (int i = 1; i < r; ++i)
      if (r % i == 0) divs.push_back(i);
    std::vector<int> k(r, 0);
    std::function<void(size_t, int)> walk = [&](size_t idx, int budget) {
      if (idx == divs.size()) {
        int total = 0;
        for (int i : divs) total += k[i];
        if (total == 0) return;
        ++cases;
        if (n_count_closed(r, k) != n_count_oracle(r, k)) ++mismatches;
        return;
      }
      for (int t = 0; t <= budget; ++t) {
        k[divs[idx]] = t;
        walk(idx + 1, budget - t);
      }
      k[divs[idx]] = 0;
    };
    walk(0, 6);
  }
  report.add("ncount/exhaustive", "closed form vs residue-sum count",
             mismatches == 0,
             std::to_string(cases) + " cases, " + std::to_string(mismatches) +
                 " mismatches");

  // Every count visited by the enumerator itself, genus 2..6.
  bool ok = true;
  std::string detail;
  try {
    for (int g = 2; g <= 6; ++g) topological_jacobian(g, /*cross_check=*/true);
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  report.add("ncount/enumerator", "counts visited by the genus 2..6 enumerator", ok,
             detail);
  return report;
}

VerificationReport verify_bounds(int max_g) {
  VerificationReport report;
  for (int g = 2; g <= max_g; ++g) {
    auto [m_max, k_max] = wz_enumeration_bounds(g);
    Laurent base = weight_zero_jacobian_bounded(g, m_max, k_max);
    Laurent doubled = weight_zero_jacobian_bounded(g, 2 * m_max, 2 * k_max);
    report.add("bounds/doubling/g" + std::to_string(g),
               "enumeration bounds are complete", base == doubled);
  }
  return report;
}

}  // namespace picenum
