#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "thinlie/nqengine.hpp"

namespace thinlie {

enum class DiamondKind { first, genuine, fake0, fake1, none, ambiguous };
std::string kind_name(DiamondKind k);

/// Diamond type: an element of F, or infinity, or unassigned.
struct TypeVal {
  enum class Tag { finite, infinite, none } tag = Tag::none;
  Fel mu;  // valid iff tag == finite

  static TypeVal finite(Fel m) { return {Tag::finite, std::move(m)}; }
  static TypeVal infinite() { return {Tag::infinite, {}}; }
  static TypeVal unassigned() { return {Tag::none, {}}; }
  bool operator==(const TypeVal& o) const {
    if (tag != o.tag) return false;
    return tag != Tag::finite || mu == o.mu;
  }
  std::string str() const;
};

struct DiamondRecord {
  unsigned degree = 0;
  std::optional<unsigned> t;  // index with degree = t(q-1)+1
  DiamondKind kind = DiamondKind::none;
  TypeVal type;
  std::vector<std::pair<std::string, std::string>> witness;
  std::string note;
  bool is_diamond() const {
    return kind == DiamondKind::first || kind == DiamondKind::genuine ||
           kind == DiamondKind::fake0 || kind == DiamondKind::fake1;
  }
};

struct ThinVerdicts {
  bool thin = false;
  bool covering = false;
  bool no_consecutive = false;
  bool spacing = false;
  bool pattern = false;          // meaningful only when a pattern was matched
  bool pattern_checked = false;
};

struct ThinReport {
  std::uint64_t p = 0, q = 0, s = 0;
  unsigned field_k = 1;
  std::string lambda_text;
  std::vector<std::uint64_t> modulus;
  unsigned horizon = 0;        // L valid through this degree
  unsigned classified_to = 0;  // diamond typing valid through this degree
  unsigned covering_to = 0;
  std::vector<std::size_t> dims;           // dims[d-1] = dim L_d
  std::vector<DiamondRecord> records;      // records[m-1], m = 1..classified_to
  std::vector<std::string> discrepancies;  // covering/thin failures, pattern diffs
  std::vector<std::string> warnings;
  ThinVerdicts verdicts;

  const DiamondRecord& at(unsigned m) const { return records.at(m - 1); }
  std::vector<unsigned> diamond_degrees() const;
};

/// Covering property at degree d: [z L_1] = L_{d+1} for every nonzero z,
/// checked on all |F|+1 projective points when dim L_d = 2.
/// Requires d <= computed_to - 1.
bool check_covering(const GradedAlgebra& l, unsigned d, std::string* diagnostic = nullptr);

struct StandardGenerators {
  HomElement x, y;
  // rows express (x', y') over the frame used for the search
  Mat change;
};

/// Find standard generators: y' spans the unique line with [L_2 y'] = 0 and
/// x' is adjusted in its coset so that [v1 x' x'] = 0 and
/// [v1 y' x'] = -2 [v1 x' y']. The optional frame replaces the generator
/// images as the search basis. Throws std::runtime_error when the algebra is
/// not a Nottingham algebra to the needed depth.
StandardGenerators find_standard_generators(const GradedAlgebra& l,
                                            std::optional<std::pair<HomElement, HomElement>> frame =
                                                std::nullopt);

/// Classify degree m (2 <= m <= computed_to - 1) per the diamond-type and
/// fake-diamond relations.
DiamondRecord classify_degree(const GradedAlgebra& l, unsigned m);

/// Full per-degree report with global verdicts (thinness, covering, no two
/// consecutive diamonds, spacing q-1). Where a fake-1/fake-0 pair straddles
/// m, m+1, the record with degree = 1 mod (q-1) is kept and the other is
/// demoted (both are surfaced when the residues are inconclusive).
ThinReport diamond_report(const GradedAlgebra& l, std::uint64_t q);

/// Compare against the predicted pattern: diamonds in all degrees
/// t(q-1)+1, infinite type except t = r p^s + 1 where the type is
/// mu_r = r(lambda+1) - 1 (fake when mu_r is 0 or 1); the second diamond has
/// type -1. Returns true and fills verdicts.pattern when no diffs exist
/// within the classified horizon; diffs are appended to discrepancies.
bool match_expected_pattern(ThinReport& report, std::uint64_t p, std::uint64_t q, std::uint64_t s,
                            const Fel& lambda);

/// Expected type at slot t for the preset pattern (t >= 1).
TypeVal expected_slot_type(unsigned t, std::uint64_t p, std::uint64_t s, const Fel& lambda);

/// mu0 shift steps derived from a report: step k shifts iff the diamond at
/// slot t = k-1 has type 0.
VContext report_vcontext(const ThinReport& report);

nlohmann::ordered_json report_to_json(const ThinReport& report);

}  // namespace thinlie
