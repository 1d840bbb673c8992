#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "thinlie/ffield.hpp"
#include "thinlie/word.hpp"

namespace thinlie {

/// Nonempty left-normed bracket word over {x, y}: [abc] = [[ab]c].
class LnWord {
 public:
  explicit LnWord(Word letters);
  const Word& letters() const { return letters_; }
  unsigned degree() const { return unsigned(letters_.size()); }
  bool operator==(const LnWord& o) const { return letters_ == o.letters_; }
  bool operator<(const LnWord& o) const {
    if (letters_.size() != o.letters_.size()) return letters_.size() < o.letters_.size();
    return letters_ < o.letters_;
  }
  std::string pretty() const { return "[" + word_to_pretty(letters_) + "]"; }

 private:
  Word letters_;
};

struct Term {
  Fel coeff;
  LnWord word;
};

/// Linear combination of left-normed words; terms kept in canonical order
/// (degree, then lexicographic on letters), like terms combined, zero
/// coefficients dropped.
class BracketExpr {
 public:
  BracketExpr() = default;
  explicit BracketExpr(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_homogeneous() const;
  /// Degree of a homogeneous nonzero expression.
  unsigned degree() const;
  unsigned max_degree() const;

  BracketExpr operator+(const BracketExpr& o) const;
  BracketExpr scaled(const Fel& c) const;
  bool operator==(const BracketExpr& o) const;

  std::string pretty() const;

 private:
  std::vector<Term> terms_;
};

/// Expansion context for the v_k atoms: v_1 = [y x^{q-2}] and, per step
/// k >= 2, either v_k = [v_{k-1} x y x^{q-3}] (standard) or
/// v_k = [v_{k-1} y x^{q-2}] (the shift used below a diamond of type 0).
struct VContext {
  std::uint64_t q = 0;              // power of p, q > 5
  std::set<unsigned> mu0_steps;     // steps k using the shifted definition

  VContext() = default;
  explicit VContext(std::uint64_t q_, std::set<unsigned> mu0 = {})
      : q(q_), mu0_steps(std::move(mu0)) {}
};

/// Fully expanded left-normed word of v_k; degree k(q-1).
LnWord vword(unsigned k, const VContext& ctx);

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t pos);
  std::size_t position;
};

/// Parse an expression per the grammar
///   expr  := ['+'|'-'] term (('+'|'-') term)*
///   term  := [coeff ['*']] '[' atom+ ']'
///   coeff := INT | '(' field-element-text ')'
///   atom  := ('x' | 'y' | 'v' INT) ['^' INT]
/// Whitespace is ignored; integer coefficients reduce into the field via the
/// prime subfield; power 0 elides the atom; v-atoms expand through vword.
BracketExpr parse_expr(const std::string& text, const VContext& ctx, const FieldPtr& field,
                       bool require_homogeneous = false);

/// Canonical emission; parse_expr(emit_expr(e)) == e.
std::string emit_expr(const BracketExpr& e);

/// A finitely presented graded Lie algebra on x, y (degree 1 each).
struct Presentation {
  FieldPtr field;
  std::uint64_t q = 0;  // parameter carried for analysis; 0 when irrelevant
  std::vector<BracketExpr> relators;
  std::string label;
  // Preset parameters carried through the file header for pattern matching;
  // s == 0 means "no preset pattern attached".
  std::uint64_t s = 0;
  std::optional<Fel> lambda;
};

/// Presentation file format: '#' comments, a header line
/// "p=.. q=.. k=.. s=.. lambda=.." (modulus=c0,c1,.. appended when not the
/// default), then one relator expression per line.
void write_presentation(std::ostream& os, const Presentation& p);
std::string presentation_to_string(const Presentation& p);
Presentation read_presentation(std::istream& is);
Presentation read_presentation_file(const std::string& path);

}  // namespace thinlie
