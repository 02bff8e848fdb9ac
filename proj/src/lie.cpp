#include "walg/lie.hpp"

#include <numeric>
#include <sstream>

namespace walg {

LieAlgebra::LieAlgebra(std::vector<std::string> labels, std::vector<Vec> structure, Matrix form,
                       std::optional<int> sl_rank)
    : labels_(std::move(labels)), structure_(std::move(structure)), form_(std::move(form)), sl_rank_(sl_rank) {
  const std::size_t n = labels_.size();
  if (structure_.size() != n * n) throw Error(ErrorKind::InvalidInput, "structure constant table has wrong size", "brackets");
  if (form_.rows() != n || form_.cols() != n) throw Error(ErrorKind::InvalidInput, "form has wrong shape", "form");
}

Vec LieAlgebra::bracket(const Vec& a, const Vec& b) const {
  const std::size_t n = dim();
  Vec r = zero_vec(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j] == 0) continue;
      axpy(r, a[i] * b[j], bracket_basis(i, j));
    }
  }
  return r;
}

Rational LieAlgebra::pair(const Vec& a, const Vec& b) const {
  Rational s = 0;
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j] != 0 && form_(i, j) != 0) s += a[i] * form_(i, j) * b[j];
    }
  }
  return s;
}

Matrix LieAlgebra::ad(const Vec& a) const {
  const std::size_t n = dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec col = bracket(a, unit_vec(n, j));
    for (std::size_t i = 0; i < n; ++i) m(i, j) = col[i];
  }
  return m;
}

namespace {

std::string triple_name(const LieAlgebra& alg, std::size_t i, std::size_t j, std::size_t k) {
  std::ostringstream os;
  os << "(" << alg.labels()[i] << "," << alg.labels()[j] << "," << alg.labels()[k] << ")";
  return os.str();
}

// Product of n x n matrices stored row-major.
std::vector<Rational> matmul(int n, const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> c(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const Rational& x = a[static_cast<std::size_t>(i * n + k)];
      if (x == 0) continue;
      for (int j = 0; j < n; ++j) c[static_cast<std::size_t>(i * n + j)] += x * b[static_cast<std::size_t>(k * n + j)];
    }
  return c;
}

}  // namespace

Vec sl_coords(int n, const std::vector<Rational>& m) {
  const std::size_t dim = static_cast<std::size_t>(n * n - 1);
  Vec v = zero_vec(dim);
  std::size_t p = 0;
  Rational trace = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rational& a = m[static_cast<std::size_t>(i * n + j)];
      if (i == j) {
        trace += a;
        continue;
      }
      v[p++] = a;
    }
  if (trace != 0) throw Error(ErrorKind::InvalidInput, "matrix is not traceless");
  // diag(d) = sum_k c_k H_k with c_k = d_1 + ... + d_k.
  Rational partial = 0;
  for (int k = 0; k + 1 < n; ++k) {
    partial += m[static_cast<std::size_t>(k * n + k)];
    v[p++] = partial;
  }
  return v;
}

LieAlgebra build_sl(int n) {
  if (n < 2) throw Error(ErrorKind::InvalidInput, "sl_n requires n >= 2", "n");
  const std::size_t un = static_cast<std::size_t>(n);
  std::vector<std::string> labels;
  std::vector<std::vector<Rational>> mats;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
      std::vector<Rational> m(un * un);
      m[static_cast<std::size_t>(i * n + j)] = 1;
      mats.push_back(std::move(m));
    }
  for (int k = 0; k + 1 < n; ++k) {
    labels.push_back("H" + std::to_string(k + 1));
    std::vector<Rational> m(un * un);
    m[static_cast<std::size_t>(k * n + k)] = 1;
    m[static_cast<std::size_t>((k + 1) * n + k + 1)] = -1;
    mats.push_back(std::move(m));
  }
  const std::size_t dim = mats.size();
  std::vector<Vec> structure(dim * dim);
  Matrix form(dim, dim);
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) {
      auto ab = matmul(n, mats[a], mats[b]);
      auto ba = matmul(n, mats[b], mats[a]);
      std::vector<Rational> comm(un * un);
      Rational tr = 0;
      for (std::size_t t = 0; t < un * un; ++t) comm[t] = ab[t] - ba[t];
      for (std::size_t t = 0; t < un; ++t) tr += ab[t * un + t];
      structure[a * dim + b] = sl_coords(n, comm);
      form(a, b) = tr;
    }
  return LieAlgebra(std::move(labels), std::move(structure), std::move(form), n);
}

void validate_lie(const LieAlgebra& alg) {
  const std::size_t n = alg.dim();
  const Matrix& form = alg.form();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!is_zero(alg.bracket_basis(i, j) + alg.bracket_basis(j, i)))
        throw Error(ErrorKind::Validation, "bracket is not antisymmetric on (" + alg.labels()[i] + "," + alg.labels()[j] + ")",
                    "brackets");
      if (form(i, j) != form(j, i))
        throw Error(ErrorKind::Validation, "form is not symmetric at (" + alg.labels()[i] + "," + alg.labels()[j] + ")",
                    "form");
    }
  if (determinant(form) == 0) throw Error(ErrorKind::Validation, "form is degenerate", "form");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vec ei = unit_vec(n, i), ej = unit_vec(n, j), ek = unit_vec(n, k);
        // [b_i,[b_j,b_k]] + [b_j,[b_k,b_i]] + [b_k,[b_i,b_j]]
        Vec jac = alg.bracket(ei, alg.bracket_basis(j, k)) + alg.bracket(ej, alg.bracket_basis(k, i)) +
                  alg.bracket(ek, alg.bracket_basis(i, j));
        if (!is_zero(jac))
          throw Error(ErrorKind::Validation, "Jacobi identity fails on " + triple_name(alg, i, j, k), "brackets");
        // ([b_i,b_j]|b_k) + (b_j|[b_i,b_k]) = 0
        Rational inv = alg.pair(alg.bracket_basis(i, j), ek) + alg.pair(ej, alg.bracket_basis(i, k));
        if (inv != 0) throw Error(ErrorKind::Validation, "form is not invariant on " + triple_name(alg, i, j, k), "form");
        Rational inv2 = alg.pair(alg.bracket_basis(j, i), ek) + alg.pair(ei, alg.bracket_basis(j, k));
        if (inv2 != 0) throw Error(ErrorKind::Validation, "form is not invariant on " + triple_name(alg, j, i, k), "form");
      }
}

LieAlgebra build_from_spec(const LieSpec& spec) {
  const std::size_t n = spec.dim;
  if (n == 0) throw Error(ErrorKind::InvalidInput, "dimension must be positive", "dim");
  std::vector<std::string> labels = spec.labels;
  if (labels.empty()) {
    for (std::size_t i = 0; i < n; ++i) labels.push_back("b" + std::to_string(i + 1));
  }
  if (labels.size() != n) throw Error(ErrorKind::InvalidInput, "label count does not match dimension", "labels");
  std::vector<Vec> structure(n * n, zero_vec(n));
  std::vector<bool> given(n * n, false);
  for (const auto& e : spec.brackets) {
    if (e.i >= n || e.j >= n) throw Error(ErrorKind::InvalidInput, "bracket index out of range", "brackets");
    if (e.value.size() != n) throw Error(ErrorKind::InvalidInput, "bracket value has wrong length", "brackets");
    if (given[e.i * n + e.j]) throw Error(ErrorKind::InvalidInput, "bracket entry given twice", "brackets");
    structure[e.i * n + e.j] = e.value;
    given[e.i * n + e.j] = true;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!given[i * n + j] && given[j * n + i]) structure[i * n + j] = Rational(-1) * structure[j * n + i];
  LieAlgebra alg(std::move(labels), std::move(structure), spec.form);
  validate_lie(alg);
  return alg;
}

Sl2Triple make_triple(Vec e, Vec h, Vec f) {
  Vec x = frac(1, 2) * h;
  return Sl2Triple{std::move(e), std::move(h), std::move(f), std::move(x)};
}

void validate_triple(const LieAlgebra& alg, const Sl2Triple& t) {
  const std::size_t n = alg.dim();
  if (t.e.size() != n || t.h.size() != n || t.f.size() != n)
    throw Error(ErrorKind::InvalidInput, "triple vectors have wrong length", "triple");
  if (alg.bracket(t.h, t.e) != Rational(2) * t.e) throw Error(ErrorKind::Validation, "[h,e] != 2e", "triple");
  if (alg.bracket(t.h, t.f) != Rational(-2) * t.f) throw Error(ErrorKind::Validation, "[h,f] != -2f", "triple");
  if (alg.bracket(t.e, t.f) != t.h) throw Error(ErrorKind::Validation, "[e,f] != h", "triple");
  if (is_zero(t.f)) throw Error(ErrorKind::InvalidInput, "f must be nonzero", "triple");
  Matrix adf = alg.ad(t.f);
  Matrix power = adf;
  for (std::size_t k = 1; k < n + 1; ++k) power = power * adf;
  if (!power.is_zero()) throw Error(ErrorKind::Validation, "ad f is not nilpotent", "triple");
}

Sl2Triple sl2_triple_from_partition(const LieAlgebra& alg, const std::vector<int>& partition) {
  if (!alg.sl_rank()) throw Error(ErrorKind::InvalidInput, "partition triples require an sl_n algebra", "nilpotent");
  const int n = *alg.sl_rank();
  int total = 0;
  for (int m : partition) {
    if (m <= 0) throw Error(ErrorKind::InvalidInput, "partition parts must be positive", "partition");
    total += m;
  }
  if (total != n) throw Error(ErrorKind::InvalidInput, "partition does not sum to n", "partition");
  const std::size_t un = static_cast<std::size_t>(n);
  std::vector<Rational> e(un * un), h(un * un), f(un * un);
  int offset = 0;
  for (int m : partition) {
    for (int i = 0; i < m; ++i) {
      const int r = offset + i;
      h[static_cast<std::size_t>(r * n + r)] = m - 1 - 2 * i;
      if (i + 1 < m) {
        f[static_cast<std::size_t>((r + 1) * n + r)] = 1;
        e[static_cast<std::size_t>(r * n + r + 1)] = (i + 1) * (m - 1 - i);
      }
    }
    offset += m;
  }
  Sl2Triple t = make_triple(sl_coords(n, e), sl_coords(n, h), sl_coords(n, f));
  validate_triple(alg, t);
  return t;
}

}  // namespace walg
