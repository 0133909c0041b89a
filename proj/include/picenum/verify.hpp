#pragma once

#include <random>
#include <string>
#include <vector>

#include "picenum/plaurent.hpp"
#include "picenum/symfunc.hpp"

namespace picenum {

struct Check {
  std::string id;
  std::string reference;  // what published statement or identity this pins down
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<Check> checks;

  void add(std::string id, std::string reference, bool passed, std::string detail = "");
  bool all_passed() const;
};

// Computed generating functions against the transcribed tables.
VerificationReport verify_tables();

// Algebraic-identity property suites on random sparse inputs.
VerificationReport verify_properties(unsigned seed, int depth);

// Closed-form vs dynamic-programming cyclic-cover counts, all r <= max_r with
// total multiplicity <= 6, plus the counts visited by the genus <= 6 enumerator.
VerificationReport verify_ncount(int max_r);

// Doubled enumeration bounds must not change the weight-zero output.
VerificationReport verify_bounds(int max_g);

// transform_T(f) versus the composite inv_delta(f o Exp(p_1)) o Log(1 + p_1),
// compared on the full (D, X) window (the composite is computed at padded
// intermediate truncation D + X, which is exact there).
bool check_transform_identity(const SymSeries& f, int marker_order);

// Random sparse elements for property tests (zero constant term).
SymSeries random_sym_series(std::mt19937& rng, int trunc_degree);
Laurent random_laurent(std::mt19937& rng);

}  // namespace picenum
