#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "thinlie/bracketlang.hpp"
#include "thinlie/linalg.hpp"

namespace thinlie {

/// Definition of a basis element of degree >= 2: it equals [parent, g] for
/// the parent basis element one degree down. Following definitions to the
/// root spells a left-normed word.
struct BasisDef {
  std::uint32_t parent;
  Gen g;
};

/// Homogeneous element: a degree and coordinates over that degree's basis.
struct HomElement {
  unsigned degree = 0;
  Vec coords;
};

struct EngineOptions {
  /// Adds antisymmetry rows [u,t]+[t,u] for basis pairs on top of the
  /// standard Jacobi consistency rows (a redundancy safety net).
  bool full_consistency = false;
  unsigned degree_cap = 4096;
};

/// Graded Lie algebra presented by homogeneous relators on two degree-1
/// generators, computed degree by degree. Mutated only by extend_to; frozen
/// afterwards (and always frozen for central quotients), so concurrent
/// readers are safe.
class GradedAlgebra {
 public:
  static GradedAlgebra create(Presentation pres, EngineOptions opts = {});

  /// Compute all degrees up to D (>= 2). If some degree comes out zero, the
  /// algebra is finite-dimensional; remaining degrees are filled with zero
  /// and finite_at() reports where.
  void extend_to(unsigned D);

  const Presentation& presentation() const { return pres_; }
  const FieldPtr& field() const { return pres_.field; }
  unsigned computed_to() const { return computed_to_; }
  std::optional<unsigned> finite_at() const { return finite_at_; }
  bool is_quotient() const { return quotient_depth_ > 0; }
  unsigned quotient_depth() const { return quotient_depth_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  std::size_t dim(unsigned d) const;
  /// dims for degrees 1..computed_to.
  std::vector<std::size_t> dims() const;
  const BasisDef& def(unsigned d, std::size_t i) const;
  /// The left-normed word spelled by the definition chain of basis (d, i).
  LnWord basis_word(unsigned d, std::size_t i) const;
  /// Action of generator g from degree d to d+1 (d < computed_to).
  const Mat& act(unsigned d, Gen g) const;
  /// Coordinates of the generator images in degree 1.
  const Vec& gen_coords(Gen g) const { return gen_[int(g)]; }

  HomElement zero_element(unsigned d) const;
  HomElement unit_element(unsigned d, std::size_t i) const;
  HomElement evaluate(const LnWord& w) const;
  HomElement evaluate(const BracketExpr& e) const;
  /// [u, g] via the action tables.
  HomElement act_elem(const HomElement& u, Gen g) const;
  /// [u, v]; right factors of degree >= 2 expand through basis definitions,
  /// [u, [w, g]] = [[u, w], g] - [[u, g], w].
  HomElement bracket(const HomElement& u, const HomElement& v) const;

  /// Opaque memo of right-factor adjoint matrices; reusing one across many
  /// bracket calls on the same frozen algebra amortizes the expansion.
  class BracketCache;
  HomElement bracket(const HomElement& u, const HomElement& v, BracketCache& cache) const;

  /// Basis of the degree-d slice of the graded centre: kernel of
  /// z -> ([z,x], [z,y]). Requires d <= computed_to() - 1 (boundary error
  /// otherwise: the top degree has no room to test).
  std::vector<Vec> graded_centre(unsigned d) const;

  /// Quotient by the graded centre, valid for degrees <= horizon
  /// (horizon <= computed_to() - 1). Each extra iteration quotients again
  /// and shrinks the horizon by one. The result records a warning if its own
  /// graded centre is nontrivial below the horizon.
  GradedAlgebra central_quotient(unsigned horizon, unsigned iterations = 1) const;

  nlohmann::ordered_json dump() const;
  static GradedAlgebra load(const nlohmann::ordered_json& j);

 private:
  GradedAlgebra() = default;

  struct DegreeData {
    std::size_t dim = 0;
    std::vector<BasisDef> defs;   // size dim for degree >= 2
    std::array<Mat, 2> act;       // generator actions into degree d+1
  };

  using AdjKey = std::tuple<unsigned, std::size_t, unsigned>;  // (deg t, idx t, source e)
  struct AdjCache {
    std::map<AdjKey, Mat> m;
  };

  void extend_one(unsigned d);
  /// Matrix of u -> [u, t] from degree e, t the basis element (dt, it).
  const Mat& adjoint(AdjCache& cache, unsigned e, unsigned dt, std::size_t it) const;
  Vec bracket_vec(AdjCache& cache, const Vec& u, unsigned du, const Vec& v, unsigned dv) const;
  /// Solve v = a*gen_x + b*gen_y in degree 1 (any solution).
  std::pair<Fel, Fel> decompose_degree1(const Vec& v) const;
  static GradedAlgebra quotient_once(const GradedAlgebra& a, unsigned horizon);

  Presentation pres_;
  EngineOptions opts_;
  std::vector<DegreeData> deg_;  // index = degree; [0] unused
  std::array<Vec, 2> gen_;
  unsigned computed_to_ = 0;
  std::optional<unsigned> finite_at_;
  unsigned quotient_depth_ = 0;
  bool extendable_ = true;
  std::vector<std::string> warnings_;
};

class GradedAlgebra::BracketCache {
  friend class GradedAlgebra;
  AdjCache impl_;
};

}  // namespace thinlie
