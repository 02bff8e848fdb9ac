#pragma once

#include <functional>
#include <map>
#include <utility>

#include "walg/poly.hpp"
#include "walg/setup.hpp"

namespace walg {

/// Lambda-bracket of two underived generators (variable ids).
using GenBracket = std::function<LambdaPoly(int i, int j)>;

/// {g_lambda h} from the generator brackets by the Master Formula.
LambdaPoly master_bracket(const GenBracket& gen, const Poly& g, const Poly& h);

/// Polynomial in two spectral parameters: (power of lambda, power of mu) -> coefficient.
using BiLambda = std::map<std::pair<int, int>, Poly>;

/// {g_lambda h} + {h_{-lambda-d} g}; zero iff skewsymmetry holds for the pair.
LambdaPoly skew_defect(const GenBracket& gen, const Poly& g, const Poly& h);
/// {g_lambda {h_mu k}} - {h_mu {g_lambda k}} - {{g_lambda h}_{lambda+mu} k}, zero terms dropped.
BiLambda jacobi_defect(const GenBracket& gen, const Poly& g, const Poly& h, const Poly& k);

/// V(g) in the adapted variables u_p, p indexing GradedSetup::index; u_p stands
/// for the lower basis vector q_j^n. The affine bracket carries a formal z.
class AffinePva {
 public:
  explicit AffinePva(const GradedSetup& st);

  const GradedSetup& setup() const { return *st_; }
  std::size_t size() const { return st_->index.size(); }

  /// [a,b] + (a|b) lambda + z (s|[a,b]) on adapted generators.
  const LambdaPoly& gen(int i, int j) const { return gen_[idx(i, j)]; }
  /// rho applied to gen(i, j).
  const LambdaPoly& rho_gen(int i, int j) const { return rho_gen_[idx(i, j)]; }
  GenBracket gen_fn() const;
  GenBracket rho_gen_fn() const;

  /// The linear polynomial of a vector of g.
  Poly element(const Vec& v) const;
  Poly var(int p, int deriv = 0) const { return Poly::var(Space::Affine, p, deriv); }

  int grade2(int p) const { return st_->lower_grade2(static_cast<std::size_t>(p)); }
  int weight2(int p) const { return 2 - grade2(p); }
  bool in_le_half(int p) const { return grade2(p) <= 1; }
  /// u_p spans [e, g_{<=-1/2}] (n >= 1) inside g_{<=1/2}.
  bool is_ideal_var(int p) const { return in_le_half(p) && st_->index[static_cast<std::size_t>(p)].n >= 1; }
  /// Conformal weight, with z of weight d+1 so the z-twisted bracket is homogeneous.
  std::optional<int> weight(const Poly& p) const;

  /// The differential algebra map a -> pi_{<=1/2}(a) + (f|a).
  Poly rho(const Poly& p) const;
  /// rho{a_lambda g}_z for a basis vector u_a of g_{>=1/2}; asserted z-free.
  LambdaPoly rho_action(int a, const Poly& g) const;

  std::string name(int p) const;
  Namer namer() const;

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * size() + static_cast<std::size_t>(j); }
  const GradedSetup* st_;
  std::vector<LambdaPoly> gen_;
  std::vector<LambdaPoly> rho_gen_;
};

}  // namespace walg
