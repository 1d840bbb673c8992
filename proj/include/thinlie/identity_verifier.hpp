#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "thinlie/thinanalysis.hpp"

namespace thinlie {

/// The generalized Jacobi expansion
///   [a [b c^n]] = sum_{i=0}^{n} (-1)^i C(n,i) [a c^i b c^{n-i}],
/// with binomials reduced mod p.
BracketExpr gen_jacobi_expand(const LnWord& a, const LnWord& b, Gen c, unsigned n,
                              const FieldPtr& field);

struct IdentityResult {
  std::string label;
  std::string site;   // e.g. "k=7"
  bool vacuous = false;
  bool pass = false;  // meaningful when !vacuous
  std::string lhs, rhs;
  std::string note;
};

struct SuiteResult {
  std::string suite;
  std::vector<IdentityResult> items;

  std::size_t failures() const;
  std::size_t vacuous_count() const;
  bool all_pass() const { return failures() == 0; }
};

/// Registered suite names, in canonical order.
const std::vector<std::string>& suite_names();

/// Run one suite against the quotient L (and N where the suite concerns the
/// algebra before the quotient). Sites are taken from the diamond report; mu
/// values are read from it, with the convention 1/infinity = 0. Identities
/// whose hypotheses do not hold at a site are reported vacuous, never
/// silently skipped. `at` restricts to one site index and throws
/// std::out_of_range when that site's degrees exceed the horizon.
SuiteResult verify_suite(const GradedAlgebra& l, const GradedAlgebra* n, const ThinReport& report,
                         const std::string& suite, std::optional<unsigned> at = std::nullopt);

nlohmann::ordered_json suites_to_json(const std::vector<SuiteResult>& results);

}  // namespace thinlie
