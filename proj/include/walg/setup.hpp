#pragma once

#include <optional>
#include <vector>

#include "walg/lie.hpp"
#include "walg/report.hpp"

namespace walg {

/// Position (j, n) of the adapted basis: j indexes the g^f basis, 0 <= n <= 2 delta(j).
struct AdaptedIndex {
  std::size_t j;
  int n;
};

/// An sl2-triple with the ad x grading and the dual pair of adapted bases
///   upper: q^j_n = (ad f)^n q^j         grade  delta(j) - n
///   lower: q_j^n ~ (ad e)^n q_j         grade  n - delta(j)
/// normalised so that (q_i^m | q^j_n) = delta_ij delta_mn.
/// Every grade and delta is stored doubled.
class GradedSetup {
 public:
  GradedSetup(LieAlgebra a, Sl2Triple t) : alg(std::move(a)), triple(std::move(t)) {}

  LieAlgebra alg;
  Sl2Triple triple;
  int depth2 = 0;
  /// Eigenspace bases of ad x, keyed by doubled eigenvalue (ascending).
  std::vector<std::pair<int, std::vector<Vec>>> eigenspaces;
  std::vector<int> delta2;  // per j in Jf
  std::vector<Vec> qj;      // basis of g^f
  std::vector<Vec> qjup;    // dual basis of g^e
  std::vector<AdaptedIndex> index;
  std::vector<Vec> upper;
  std::vector<Vec> lower;
  Vec s;

  std::size_t dim() const { return alg.dim(); }
  std::size_t nf() const { return qj.size(); }
  /// Position of (j, n) in `index`, or npos when n is out of range.
  std::size_t position(std::size_t j, int n) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  int upper_grade2(std::size_t p) const { return delta2[index[p].j] - 2 * index[p].n; }
  int lower_grade2(std::size_t p) const { return -upper_grade2(p); }

  /// c with v = sum_p c_p lower[p], i.e. c_p = (v | upper[p]).
  Vec lower_coords(const Vec& v) const;
  /// c with v = sum_p c_p upper[p], i.e. c_p = (v | lower[p]).
  Vec upper_coords(const Vec& v) const;
  /// a^sharp in g^f coordinates: ((a | q^j))_j.
  Vec sharp_coords(const Vec& a) const;
  Vec from_gf_coords(const Vec& c) const;

  /// Doubled grade of a homogeneous nonzero vector; nullopt when v is zero or inhomogeneous.
  std::optional<int> grade2_of(const Vec& v) const;
  Vec grade_component(const Vec& v, int k2) const;

 private:
  std::vector<std::size_t> offset_;
  friend GradedSetup graded_setup(const LieAlgebra&, const Sl2Triple&, const std::optional<Vec>&);
};

GradedSetup graded_setup(const LieAlgebra& alg, const Sl2Triple& triple, const std::optional<Vec>& s = std::nullopt);

enum class Projection { Gf, EBracket, Ge, FBracket };
Vec project(const GradedSetup& st, const Vec& a, Projection target);
/// (ad f)^{-1} composed with the projection onto [f,g] along g^e.
Vec ad_f_inverse_pi(const GradedSetup& st, const Vec& a);

/// Failures of the structural invariants listed by name; empty when all hold.
std::vector<std::string> setup_invariant_failures(const GradedSetup& st);
/// f is principal; decided by the centraliser dimension of a random element.
bool is_principal(const GradedSetup& st, unsigned seed = 12345);
Report validate_setup(const GradedSetup& st, unsigned seed = 12345, int samples = 3);

}  // namespace walg
