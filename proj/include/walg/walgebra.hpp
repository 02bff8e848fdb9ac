#pragma once

#include <optional>
#include <vector>

#include "walg/pva.hpp"
#include "walg/report.hpp"
#include "walg/setup.hpp"

namespace walg {

/// w(q_j) = q_j + r(q_j) + r^{>=2}(q_j) in V(g_{<=1/2}).
struct WGenerator {
  std::size_t j = 0;
  Poly w{Space::Affine};
  Poly linear{Space::Affine};
  int weight2 = 0;
  std::size_t ansatz_size = 0;
};

/// The linear part r(q_j) from the chain formula.
Poly linear_term(const AffinePva& v, std::size_t j);

/// Solves for w(q_j) over the weight-homogeneous monomial ansatz. Throws
/// Error(Internal) when the solution is missing or not unique, or when its
/// linear part disagrees with linear_term.
WGenerator solve_generator(const AffinePva& v, std::size_t j);

/// The classical affine W-algebra of a graded setup. Generators are computed
/// on construction; the setup must outlive this object.
class WAlgebra {
 public:
  explicit WAlgebra(const GradedSetup& st, unsigned jobs = 1);

  const GradedSetup& setup() const { return *st_; }
  const AffinePva& affine() const { return affine_; }
  std::size_t size() const { return gens_.size(); }
  const WGenerator& generator(std::size_t j) const { return gens_[j]; }

  /// Doubled conformal weight of w_j; z has doubled weight depth2 + 2.
  int weight2(std::size_t j) const { return 2 + st_->delta2[j]; }
  std::optional<int> weight(const Poly& p) const;

  bool is_in_w(const Poly& g) const;
  /// Deletes monomials with ideal variables and renames q_j to w_j. Throws
  /// Error(NotAMember) when require_member is set and g is not in W.
  Poly pi_to_w(const Poly& g, bool require_member = false) const;
  /// w_j -> w(q_j).
  Poly expand(const Poly& p) const;

  /// w(v) = sum_j (v|q^j) w_j.
  Poly w_of(const Vec& v) const;
  Poly w(std::size_t j, int deriv = 0) const { return Poly::var(Space::W, static_cast<int>(j), deriv); }

  /// rho{w(q_i)_lambda w(q_j)}_z projected to W.
  LambdaPoly bracket_direct(std::size_t i, std::size_t j) const;
  /// Closed chain formula; zeta0 replaces s (the deformation parameter is z*zeta0).
  LambdaPoly bracket_closed(std::size_t i, std::size_t j, const std::optional<Vec>& zeta0 = std::nullopt) const;
  /// The manifestly skewsymmetric double-chain formula.
  LambdaPoly bracket_skewform(std::size_t i, std::size_t j) const;

  /// Generator brackets by the closed formula, cached for Master Formula use.
  const LambdaPoly& table(std::size_t i, std::size_t j) const { return table_[i * size() + j]; }
  GenBracket table_fn() const;
  LambdaPoly bracket(const Poly& g, const Poly& h) const;

  Namer namer() const;

 private:
  const GradedSetup* st_;
  AffinePva affine_;
  std::vector<WGenerator> gens_;
  std::vector<LambdaPoly> table_;
};

/// Closed forms of the low-weight special cases, all in W space.
/// a or b in g^f_0.
LambdaPoly weight_one_formula(const WAlgebra& W, const Vec& a, const Vec& b);
/// a, b in g^f_{-1/2}.
LambdaPoly weight_three_halves_formula(const WAlgebra& W, const Vec& a, const Vec& b);
/// {w(f)_lambda w(q_j)}.
LambdaPoly wf_formula(const WAlgebra& W, std::size_t j);

struct Virasoro {
  Poly L0{Space::W};
  Poly wf{Space::W};
  Poly L{Space::W};
  Report checks;
};
Virasoro virasoro(const WAlgebra& W);

/// Skewsymmetry and Jacobi on all generator pairs and triples, z formal.
Report w_pva_axioms(const WAlgebra& W);

}  // namespace walg
