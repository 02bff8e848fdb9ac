#pragma once

#include <optional>
#include <string>
#include <vector>

#include "walg/linalg.hpp"

namespace walg {

/// Finite-dimensional Lie algebra over Q given by structure constants in a
/// fixed basis, together with an invariant symmetric bilinear form.
class LieAlgebra {
 public:
  LieAlgebra(std::vector<std::string> labels, std::vector<Vec> structure, Matrix form,
             std::optional<int> sl_rank = std::nullopt);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Matrix& form() const { return form_; }
  /// Set when the algebra is the matrix realization of sl_n built by build_sl.
  std::optional<int> sl_rank() const { return sl_rank_; }

  /// [b_i, b_j] in coordinates.
  const Vec& bracket_basis(std::size_t i, std::size_t j) const { return structure_[i * dim() + j]; }
  Vec bracket(const Vec& a, const Vec& b) const;
  Rational pair(const Vec& a, const Vec& b) const;
  /// Matrix of ad a acting on coordinate vectors.
  Matrix ad(const Vec& a) const;

 private:
  std::vector<std::string> labels_;
  std::vector<Vec> structure_;
  Matrix form_;
  std::optional<int> sl_rank_;
};

struct LieSpec {
  std::size_t dim = 0;
  std::vector<std::string> labels;  // optional; defaults to b1..bN
  struct Entry {
    std::size_t i, j;
    Vec value;
  };
  std::vector<Entry> brackets;  // missing pairs are zero; (j,i) is filled by antisymmetry when absent
  Matrix form;
};

LieAlgebra build_sl(int n);
LieAlgebra build_from_spec(const LieSpec& spec);

/// Throws a validation error naming the first offending basis triple.
void validate_lie(const LieAlgebra& alg);

struct Sl2Triple {
  Vec e, h, f, x;
};

Sl2Triple make_triple(Vec e, Vec h, Vec f);
/// Throws a validation error unless the sl2 relations hold and ad f is nilpotent.
void validate_triple(const LieAlgebra& alg, const Sl2Triple& t);

/// Coordinates of a traceless n x n matrix (row-major) in the basis of build_sl(n).
Vec sl_coords(int n, const std::vector<Rational>& matrix);

Sl2Triple sl2_triple_from_partition(const LieAlgebra& alg, const std::vector<int>& partition);

}  // namespace walg
