#include "picenum/plaurent.hpp"

#include <random>

#include "doctest.h"
#include "picenum/verify.hpp"

using namespace picenum;

TEST_CASE("ring operations cancel inverses") {
  Laurent a = Laurent::monomial(1, {{1, 1}});
  Laurent b = Laurent::monomial(1, {{1, -1}});
  Laurent one = Laurent::monomial(1, {});
  CHECK(a * b == one);

  Laurent half = Laurent::monomial(Rat(1, 2), {{2, 1}});
  CHECK(half + half == Laurent::monomial(1, {{2, 1}}));

  Laurent p23 = Laurent::monomial(1, {{2, 1}, {3, 1}});
  Laurent p6inv = Laurent::monomial(1, {{6, -1}});
  CHECK(p23 * p6inv == Laurent::monomial(1, {{2, 1}, {3, 1}, {6, -1}}));
}

TEST_CASE("homogeneity") {
  Laurent f = Laurent::monomial(1, {{2, 1}, {3, 1}, {6, -1}});
  CHECK(f.is_homogeneous(-1));
  CHECK(Laurent().is_homogeneous(7));
  Laurent g = Laurent::monomial(1, {{1, 1}}) + Laurent::monomial(1, {{2, 1}});
  CHECK(!g.is_homogeneous(1));
}

TEST_CASE("limit transform") {
  Laurent f = Laurent::monomial(1, {{2, 1}, {3, 1}, {6, -1}});
  CHECK(limit_transform(f, 1) == f);  // 2^-1 * 3^-1 * 6 = 1

  Laurent diverging = Laurent::monomial(1, {{1, 1}, {2, 1}});
  CHECK_THROWS_AS(limit_transform(diverging, 1), std::domain_error);

  Laurent g = Laurent::monomial(1, {{1, 4}, {3, -2}});
  CHECK(limit_transform(g, 2) == g.scaled(9));

  Laurent mixed = Laurent::monomial(1, {{1, 2}, {3, -1}}) + Laurent::monomial(1, {{6, -1}});
  CHECK(limit_transform(mixed, 1) == Laurent::monomial(3, {{1, 2}, {3, -1}}));
}

TEST_CASE("scalar substitution") {
  // weight-zero row at genus 2, all variables 1
  Laurent f = Laurent::monomial(Rat(-1, 6), {{2, 1}, {3, 1}, {6, -1}}) +
              Laurent::monomial(Rat(-1, 2), {{1, 2}, {3, -1}}) +
              Laurent::monomial(Rat(-1, 3), {{1, 3}, {2, -2}});
  CHECK(substitute_scalar(f, {}, 1) == -1);

  Laurent g = Laurent::monomial(1, {{1, 1}, {2, -1}});
  CHECK(substitute_scalar(g, {{1, 2}, {2, 4}}, 1) == Rat(1, 2));
  CHECK(substitute_scalar(Laurent(), {}, 7) == 0);
  CHECK_THROWS(substitute_scalar(g, {{2, 0}}, 1));
}

TEST_CASE("P_1 series substitution") {
  Laurent f = Laurent::monomial(1, {{1, 2}});
  CHECK(substitute_p1_series(f, 2) == std::vector<Rat>{1, 2, 1});

  Laurent g = Laurent::monomial(1, {{1, 3}, {2, -2}});
  CHECK(substitute_p1_series(g, 3) == std::vector<Rat>{1, 3, 3, 1});

  CHECK_THROWS_AS(substitute_p1_series(Laurent::monomial(1, {{1, -1}}), 2),
                  std::domain_error);
}

TEST_CASE("expansion to symmetric functions") {
  SymSeries e = expand_to_symfunc(Laurent::monomial(1, {{3, 1}}), 4);
  SymSeries expect(4);
  expect.add_term({}, 1);
  expect.add_term({{3, 1}}, 1);
  CHECK(e == expect);

  SymSeries e2 = expand_to_symfunc(Laurent::monomial(1, {{2, -1}}), 4);
  SymSeries expect2(4);
  expect2.add_term({}, 1);
  expect2.add_term({{2, 1}}, -1);
  expect2.add_term({{2, 2}}, 1);
  CHECK(e2 == expect2);
}

TEST_CASE("rendering") {
  Laurent f = Laurent::monomial(Rat(-1, 6), {{2, 1}, {3, 1}, {6, -1}});
  CHECK(render(f, RenderFormat::text) == "-1/6 * P2*P3/P6");
  CHECK(render(f, RenderFormat::json) ==
        R"({"terms":[{"coeff":"-1/6","exps":{"2":1,"3":1,"6":-1}}]})");
  CHECK(render(Laurent(), RenderFormat::text) == "0");
  CHECK(render(Laurent(), RenderFormat::json) == R"({"terms":[]})");
  CHECK(render(f, RenderFormat::latex) ==
        "-\\frac{1}{6}\\,\\frac{P_{2} P_{3}}{P_{6}}");
}

TEST_CASE("canonical term order in rendered output") {
  Laurent f = Laurent::monomial(1, {{2, 1}, {3, 1}, {6, -1}}) +
              Laurent::monomial(1, {{1, 2}, {3, -1}}) +
              Laurent::monomial(1, {{1, 3}, {2, -2}});
  CHECK(render(f, RenderFormat::text) == "P1^2/P3 + P1^3/P2^2 + P2*P3/P6");
}

TEST_CASE("json round trip on random inputs") {
  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    Laurent f = random_laurent(rng);
    CHECK(parse_json(render(f, RenderFormat::json)) == f);
  }
}

TEST_CASE("limit transform is linear") {
  std::mt19937 rng(11);
  auto clamp = [](const Laurent& f) {
    Laurent out;
    for (const auto& [k, c] : f.terms())
      if (exponent_sum(k) <= 1) out.add_term(k, c);
    return out;
  };
  for (int t = 0; t < 50; ++t) {
    Laurent f = clamp(random_laurent(rng)), g = clamp(random_laurent(rng));
    CHECK(limit_transform(f + g.scaled(Rat(3, 5)), 1) ==
          limit_transform(f, 1) + limit_transform(g, 1).scaled(Rat(3, 5)));
  }
}

TEST_CASE("expansion is a ring homomorphism") {
  std::mt19937 rng(13);
  for (int t = 0; t < 20; ++t) {
    Laurent f = random_laurent(rng), g = random_laurent(rng);
    CHECK(expand_to_symfunc(f * g, 6) ==
          expand_to_symfunc(f, 6) * expand_to_symfunc(g, 6));
  }
}
