#include "walg/setup.hpp"

#include <algorithm>
#include <random>

namespace walg {

namespace {

Vec combine(const std::vector<Vec>& basis, const Vec& coeffs, std::size_t dim) {
  Vec v = zero_vec(dim);
  for (std::size_t i = 0; i < basis.size(); ++i) axpy(v, coeffs[i], basis[i]);
  return v;
}

// Canonical basis of ker(m) restricted to span(basis).
std::vector<Vec> kernel_within(const Matrix& m, const std::vector<Vec>& basis, std::size_t dim) {
  if (basis.empty()) return {};
  Matrix restricted = m * Matrix::from_columns(basis, dim);
  std::vector<Vec> vecs;
  for (const auto& c : kernel(restricted)) vecs.push_back(combine(basis, c, dim));
  return canonical_basis(vecs, dim);
}

Matrix rows_times_form(const std::vector<Vec>& vecs, const Matrix& form) {
  Matrix m(vecs.size(), form.cols());
  for (std::size_t p = 0; p < vecs.size(); ++p) {
    Vec r = form.apply(vecs[p]);  // form is symmetric
    for (std::size_t i = 0; i < r.size(); ++i) m(p, i) = r[i];
  }
  return m;
}

Rational lower_normaliser(int delta2, int n) {
  // (-1)^n / ((n!)^2 binom(2 delta, n))
  Rational c = 1 / (factorial(n) * factorial(n) * binomial(delta2, n));
  return n % 2 ? Rational(-c) : c;
}

}  // namespace

std::size_t GradedSetup::position(std::size_t j, int n) const {
  if (j >= delta2.size() || n < 0 || n > delta2[j]) return npos;
  return offset_[j] + static_cast<std::size_t>(n);
}

Vec GradedSetup::lower_coords(const Vec& v) const {
  Vec c(index.size());
  for (std::size_t p = 0; p < index.size(); ++p) c[p] = alg.pair(v, upper[p]);
  return c;
}

Vec GradedSetup::upper_coords(const Vec& v) const {
  Vec c(index.size());
  for (std::size_t p = 0; p < index.size(); ++p) c[p] = alg.pair(v, lower[p]);
  return c;
}

Vec GradedSetup::sharp_coords(const Vec& a) const {
  Vec c(nf());
  for (std::size_t j = 0; j < nf(); ++j) c[j] = alg.pair(a, qjup[j]);
  return c;
}

Vec GradedSetup::from_gf_coords(const Vec& c) const { return combine(qj, c, dim()); }

std::optional<int> GradedSetup::grade2_of(const Vec& v) const {
  Vec c = upper_coords(v);
  std::optional<int> g;
  for (std::size_t p = 0; p < c.size(); ++p) {
    if (c[p] == 0) continue;
    if (g && *g != upper_grade2(p)) return std::nullopt;
    g = upper_grade2(p);
  }
  return g;
}

Vec GradedSetup::grade_component(const Vec& v, int k2) const {
  Vec c = upper_coords(v);
  Vec out = zero_vec(dim());
  for (std::size_t p = 0; p < c.size(); ++p)
    if (upper_grade2(p) == k2) axpy(out, c[p], upper[p]);
  return out;
}

GradedSetup graded_setup(const LieAlgebra& alg, const Sl2Triple& triple, const std::optional<Vec>& s) {
  validate_triple(alg, triple);
  const std::size_t dim = alg.dim();
  GradedSetup st(alg, triple);

  const Matrix adx = alg.ad(triple.x);
  const int bound = 4 * static_cast<int>(dim);
  std::size_t total = 0;
  for (int k2 = -bound; k2 <= bound; ++k2) {
    Matrix m = adx;
    for (std::size_t i = 0; i < dim; ++i) m(i, i) -= frac(k2, 2);
    auto ker = kernel(m);
    if (ker.empty()) continue;
    total += ker.size();
    st.eigenspaces.emplace_back(k2, canonical_basis(ker, dim));
  }
  if (total != dim) throw Error(ErrorKind::InternalConsistency, "ad x eigenspaces do not span g");
  st.depth2 = st.eigenspaces.back().first;

  const Matrix adf = alg.ad(triple.f);
  const Matrix ade = alg.ad(triple.e);
  // g^f lives in nonpositive grades; walk them from 0 downwards so delta ascends.
  for (auto it = st.eigenspaces.rbegin(); it != st.eigenspaces.rend(); ++it) {
    const int k2 = it->first;
    if (k2 > 0) continue;
    for (auto& v : kernel_within(adf, it->second, dim)) {
      st.qj.push_back(std::move(v));
      st.delta2.push_back(-k2);
    }
  }
  // Dual basis inside g^e, one grade block at a time.
  st.qjup.assign(st.qj.size(), Vec{});
  std::size_t j0 = 0;
  while (j0 < st.qj.size()) {
    std::size_t j1 = j0;
    while (j1 < st.qj.size() && st.delta2[j1] == st.delta2[j0]) ++j1;
    const int k2 = st.delta2[j0];
    auto eig = std::find_if(st.eigenspaces.begin(), st.eigenspaces.end(), [&](const auto& e) { return e.first == k2; });
    std::vector<Vec> ge = eig == st.eigenspaces.end() ? std::vector<Vec>{} : kernel_within(ade, eig->second, dim);
    if (ge.size() != j1 - j0) throw Error(ErrorKind::FormPairing, "dim g^e and dim g^f differ in a grade");
    Matrix pairing(ge.size(), ge.size());
    for (std::size_t a = 0; a < ge.size(); ++a)
      for (std::size_t b = 0; b < ge.size(); ++b) pairing(a, b) = alg.pair(st.qj[j0 + a], ge[b]);
    auto inv = inverse(pairing);
    if (!inv) throw Error(ErrorKind::FormPairing, "pairing between g^f and g^e is singular");
    for (std::size_t a = 0; a < ge.size(); ++a) st.qjup[j0 + a] = combine(ge, inv->column(a), dim);
    j0 = j1;
  }

  for (std::size_t j = 0; j < st.qj.size(); ++j) {
    st.offset_.push_back(st.index.size());
    Vec up = st.qjup[j];
    Vec lo = st.qj[j];
    for (int n = 0; n <= st.delta2[j]; ++n) {
      st.index.push_back(AdaptedIndex{j, n});
      st.upper.push_back(up);
      st.lower.push_back(lower_normaliser(st.delta2[j], n) * lo);
      up = adf.apply(up);
      lo = ade.apply(lo);
    }
  }
  if (st.index.size() != dim) throw Error(ErrorKind::InternalConsistency, "adapted basis has wrong size");

  const auto& top = st.eigenspaces.back().second;
  if (s) {
    if (s->size() != dim) throw Error(ErrorKind::InvalidInput, "s has wrong length", "s");
    st.s = *s;
    auto g = st.grade2_of(st.s);
    if (!is_zero(st.s) && (!g || *g != st.depth2)) throw Error(ErrorKind::InvalidInput, "s does not lie in g_d", "s");
  } else {
    if (top.size() != 1)
      throw Error(ErrorKind::InvalidInput, "g_d has dimension > 1; an explicit s is required", "s");
    st.s = top[0];
  }

  auto failures = setup_invariant_failures(st);
  if (!failures.empty()) throw Error(ErrorKind::InternalConsistency, "setup invariant failed: " + failures.front());
  return st;
}

Vec project(const GradedSetup& st, const Vec& a, Projection target) {
  if (a.size() != st.dim()) throw Error(ErrorKind::InvalidInput, "vector has wrong length");
  Vec out = zero_vec(st.dim());
  switch (target) {
    case Projection::Gf:
    case Projection::EBracket: {
      const bool keep_gf = target == Projection::Gf;
      for (std::size_t p = 0; p < st.index.size(); ++p)
        if ((st.index[p].n == 0) == keep_gf) axpy(out, st.alg.pair(a, st.upper[p]), st.lower[p]);
      break;
    }
    case Projection::Ge:
    case Projection::FBracket: {
      const bool keep_ge = target == Projection::Ge;
      for (std::size_t p = 0; p < st.index.size(); ++p)
        if ((st.index[p].n == 0) == keep_ge) axpy(out, st.alg.pair(a, st.lower[p]), st.upper[p]);
      break;
    }
  }
  return out;
}

Vec ad_f_inverse_pi(const GradedSetup& st, const Vec& a) {
  Vec out = zero_vec(st.dim());
  for (std::size_t p = 0; p < st.index.size(); ++p) {
    const auto [j, n] = st.index[p];
    if (n >= st.delta2[j]) continue;
    axpy(out, st.alg.pair(a, st.lower[p + 1]), st.upper[p]);
  }
  return out;
}

std::vector<std::string> setup_invariant_failures(const GradedSetup& st) {
  std::vector<std::string> fail;
  const auto& alg = st.alg;
  const auto& t = st.triple;
  const std::size_t N = st.index.size();
  for (std::size_t j = 0; j < st.nf(); ++j) {
    const Rational d = frac(st.delta2[j], 2);
    if (alg.bracket(t.x, st.qj[j]) != Rational(-d) * st.qj[j]) fail.push_back("[x,q_j] = -delta q_j");
    if (alg.bracket(t.x, st.qjup[j]) != d * st.qjup[j]) fail.push_back("[x,q^j] = delta q^j");
    if (!is_zero(alg.bracket(t.f, st.qj[j]))) fail.push_back("q_j in g^f");
    if (!is_zero(alg.bracket(t.e, st.qjup[j]))) fail.push_back("q^j in g^e");
    for (std::size_t i = 0; i < st.nf(); ++i)
      if (alg.pair(st.qj[i], st.qjup[j]) != (i == j ? 1 : 0)) fail.push_back("(q_i|q^j) = delta_ij");
  }
  for (std::size_t p = 0; p < N; ++p)
    for (std::size_t r = 0; r < N; ++r)
      if (alg.pair(st.lower[p], st.upper[r]) != (p == r ? 1 : 0)) {
        fail.push_back("duality of adapted bases");
        p = N;
        break;
      }
  for (std::size_t p = 0; p < N; ++p) {
    const auto [j, n] = st.index[p];
    const int d2 = st.delta2[j];
    auto up = [&](int m) { return m >= 0 && m <= d2 ? st.upper[st.position(j, m)] : zero_vec(st.dim()); };
    auto lo = [&](int m) { return m >= 0 && m <= d2 ? st.lower[st.position(j, m)] : zero_vec(st.dim()); };
    if (alg.bracket(t.f, st.lower[p]) != Rational(-1) * lo(n - 1)) fail.push_back("[f,q_j^n] = -q_j^{n-1}");
    if (alg.bracket(t.e, st.lower[p]) != Rational(-(n + 1) * (d2 - n)) * lo(n + 1))
      fail.push_back("[e,q_j^n] = -(n+1)(2delta-n) q_j^{n+1}");
    if (alg.bracket(t.f, st.upper[p]) != up(n + 1)) fail.push_back("[f,q^j_n] = q^j_{n+1}");
    if (alg.bracket(t.e, st.upper[p]) != Rational(n * (d2 - n + 1)) * up(n - 1))
      fail.push_back("[e,q^j_n] = n(2delta-n+1) q^j_{n-1}");
  }
  // Completeness of the two pairs of projections.
  Matrix pf(st.dim(), st.dim()), pe(st.dim(), st.dim()), pge(st.dim(), st.dim()), pfb(st.dim(), st.dim());
  for (std::size_t i = 0; i < st.dim(); ++i) {
    Vec b = unit_vec(st.dim(), i);
    Vec a1 = project(st, b, Projection::Gf), a2 = project(st, b, Projection::EBracket);
    Vec a3 = project(st, b, Projection::Ge), a4 = project(st, b, Projection::FBracket);
    if (a1 + a2 != b || a3 + a4 != b) {
      fail.push_back("projection completeness");
      break;
    }
    // g^f is orthogonal to [f,g], and [e,g] to g^e.
    for (std::size_t k = 0; k < st.dim(); ++k) {
      Vec c = unit_vec(st.dim(), k);
      if (alg.pair(a1, project(st, c, Projection::FBracket)) != 0 || alg.pair(a2, project(st, c, Projection::Ge)) != 0) {
        fail.push_back("orthogonality of complements");
        i = st.dim();
        break;
      }
    }
  }
  // sl2 relations of ad x, ad e, ad f as matrices.
  Matrix ax = alg.ad(t.x), ae = alg.ad(t.e), af = alg.ad(t.f);
  if (ax * ae - ae * ax != ae || ax * af - af * ax != Matrix(af.rows(), af.cols()) - af || ae * af - af * ae != ax + ax)
    fail.push_back("ad x, ad e, ad f satisfy sl2 relations");
  if (!is_zero(st.s)) {
    auto g = st.grade2_of(st.s);
    if (!g || *g != st.depth2) fail.push_back("s in g_d");
    for (std::size_t p = 0; p < N; ++p)
      if (st.upper_grade2(p) >= 1 && !is_zero(alg.bracket(st.s, st.upper[p]))) {
        fail.push_back("s commutes with g_{>=1/2}");
        break;
      }
  }
  return fail;
}

namespace {

Matrix outer_sum(const std::vector<std::pair<Vec, Vec>>& terms, std::size_t dim) {
  Matrix m(dim, dim);
  for (const auto& [a, b] : terms)
    for (std::size_t i = 0; i < dim; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < dim; ++j)
        if (b[j] != 0) m(i, j) += a[i] * b[j];
    }
  return m;
}

}  // namespace

bool is_principal(const GradedSetup& st, unsigned seed) {
  // dim g^f equals the rank of g, the centraliser dimension of a generic element.
  std::mt19937 rng(seed ^ 0x9e3779b9u);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  Vec generic = zero_vec(st.dim());
  for (auto& c : generic) c = frac(num(rng), den(rng));
  return st.nf() == st.dim() - rank(st.alg.ad(generic));
}

Report validate_setup(const GradedSetup& st, unsigned seed, int samples) {
  Report rep{"setup"};
  auto failures = setup_invariant_failures(st);
  rep.add("structural invariants", failures.empty(), failures.empty() ? "" : failures.front());

  const std::size_t dim = st.dim();
  bool tensor_ok = true;
  std::string tensor_detail;
  for (int k2 = -st.depth2; k2 <= st.depth2; ++k2) {
    // sum_{(i,m) in J_{k-1}} q_i^{m+1} (x) q^i_m  =  - sum_{(j,n) in J_{-k}} q^j_n (x) q_j^{n+1}
    std::vector<std::pair<Vec, Vec>> lhs, rhs;
    for (std::size_t p = 0; p < st.index.size(); ++p) {
      const auto [j, n] = st.index[p];
      const bool has_next = n < st.delta2[j];
      if (st.upper_grade2(p) == 2 - k2 && has_next) lhs.emplace_back(st.lower[p + 1], st.upper[p]);
      if (st.upper_grade2(p) == k2 && has_next) rhs.emplace_back(st.upper[p], Rational(-1) * st.lower[p + 1]);
    }
    if (outer_sum(lhs, dim) != outer_sum(rhs, dim)) {
      tensor_ok = false;
      tensor_detail = "fails at 2k=" + std::to_string(k2);
      break;
    }
  }
  rep.add("tensor identity for all k", tensor_ok, tensor_detail);

  // [f+r,g] + g^e = g at generic r in g_{>=0}, sampled at random rational points.
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  const bool principal = is_principal(st, seed);
  bool transversal = true, direct = true;
  for (int sample = 0; sample < samples; ++sample) {
    Vec r = zero_vec(dim);
    for (std::size_t p = 0; p < st.index.size(); ++p)
      if (st.upper_grade2(p) >= 0) axpy(r, frac(num(rng), den(rng)), st.upper[p]);
    Matrix ad = st.alg.ad(st.triple.f + r);
    std::vector<Vec> cols;
    for (std::size_t i = 0; i < dim; ++i) cols.push_back(ad.column(i));
    for (std::size_t j = 0; j < st.nf(); ++j) cols.push_back(st.qjup[j]);
    if (rank(Matrix::from_columns(cols, dim)) != dim) transversal = false;
    if (principal && rank(ad) + st.nf() != dim) direct = false;
  }
  rep.add("[f+r,g] + g^e = g at sampled r", transversal);
  if (principal) rep.add("g = [f+r,g] (+) g^e (principal)", direct);
  return rep;
}

}  // namespace walg
