#include "walg/slodowy.hpp"

#include <map>

namespace walg {

namespace {

Poly zero_slice() { return Poly(Space::Slice); }

SymVec zero_symvec(std::size_t n) { return SymVec{std::vector<Poly>(n, zero_slice())}; }

SymVec apply(const Matrix& m, const SymVec& v) {
  SymVec out = zero_symvec(m.rows());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (v.c[j].is_zero()) continue;
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (m(i, j) != 0) out.c[i] += m(i, j) * v.c[j];
  }
  return out;
}

bool is_zero(const SymVec& v) {
  for (const auto& p : v.c)
    if (!p.is_zero()) return false;
  return true;
}

Matrix matrix_of(const GradedSetup& st, Vec (*f)(const GradedSetup&, const Vec&)) {
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < st.dim(); ++i) cols.push_back(f(st, unit_vec(st.dim(), i)));
  return Matrix::from_columns(cols, st.dim());
}

Vec ge_projection(const GradedSetup& st, const Vec& a) { return project(st, a, Projection::Ge); }

// [r, v] for symbolic r and v, using that r = sum_i r_i b_i coordinatewise.
SymVec symbolic_bracket(const GradedSetup& st, const SymVec& r, const SymVec& v) {
  SymVec out = zero_symvec(st.dim());
  for (std::size_t i = 0; i < st.dim(); ++i) {
    if (r.c[i].is_zero()) continue;
    for (std::size_t j = 0; j < st.dim(); ++j) {
      if (v.c[j].is_zero()) continue;
      const Vec& b = st.alg.bracket_basis(i, j);
      Poly prod = r.c[i] * v.c[j];
      for (std::size_t k = 0; k < st.dim(); ++k)
        if (b[k] != 0) out.c[k] += b[k] * prod;
    }
  }
  return out;
}

Poly sharp_poly(const GradedSetup& st, const Vec& a) {
  Poly p(Space::Slice);
  for (std::size_t j = 0; j < st.nf(); ++j) {
    Rational c = st.alg.pair(a, st.qjup[j]);
    if (c != 0) p.add_term({make_var(static_cast<int>(j))}, c);
  }
  return p;
}

}  // namespace

SymVec generic_ge(const GradedSetup& st, bool twisted) {
  SymVec r = zero_symvec(st.dim());
  for (std::size_t j = 0; j < st.nf(); ++j)
    for (std::size_t i = 0; i < st.dim(); ++i)
      if (st.qjup[j][i] != 0) r.c[i] += st.qjup[j][i] * Poly::var(Space::Slice, static_cast<int>(j));
  if (twisted)
    for (std::size_t i = 0; i < st.dim(); ++i)
      if (st.triple.x[i] != 0) r.c[i] += st.triple.x[i] * Poly::z(Space::Slice);
  return r;
}

SymVec phi_r(const GradedSetup& st, const SymVec& a, const SymVec& r) {
  // r must have support in g_{>=0}: the coordinate polynomials of its
  // negative-grade components must vanish.
  for (std::size_t p = 0; p < st.index.size(); ++p) {
    if (st.upper_grade2(p) >= 0) continue;
    Poly comp(Space::Slice);
    for (std::size_t i = 0; i < st.dim(); ++i)
      if (st.lower[p][i] != 0) comp += st.alg.pair(unit_vec(st.dim(), i), st.lower[p]) * r.c[i];
    if (!comp.is_zero()) throw Error(ErrorKind::InvalidInput, "r has support in negative grades");
  }
  const Matrix m = matrix_of(st, &ad_f_inverse_pi);
  const Matrix pge = matrix_of(st, &ge_projection);
  SymVec sum = a;
  SymVec term = a;
  for (int t = 1; t <= st.depth2 + 1; ++t) {
    SymVec next = symbolic_bracket(st, r, apply(m, term));
    for (auto& c : next.c) c *= Rational(-1);
    term = std::move(next);
    if (t == st.depth2 + 1) {
      if (!is_zero(term)) throw Error(ErrorKind::Internal, "Phi series did not truncate");
      break;
    }
    for (std::size_t i = 0; i < st.dim(); ++i) sum.c[i] += term.c[i];
  }
  return apply(pge, sum);
}

Poly finite_bracket_oracle(const GradedSetup& st, const Vec& p, const Vec& q, bool twisted) {
  SymVec r = generic_ge(st, twisted);
  SymVec qv = zero_symvec(st.dim());
  for (std::size_t i = 0; i < st.dim(); ++i)
    if (q[i] != 0) qv.c[i] = Poly::constant(Space::Slice, q[i]);
  SymVec a = symbolic_bracket(st, qv, r);
  SymVec phi = phi_r(st, a, r);
  Poly out(Space::Slice);
  for (std::size_t i = 0; i < st.dim(); ++i) {
    Rational c = st.alg.pair(p, unit_vec(st.dim(), i));
    if (c != 0) out += c * phi.c[i];
  }
  return out;
}

Poly finite_bracket(const GradedSetup& st, const Vec& p, const Vec& q, const std::optional<Rational>& z) {
  auto F = [&](const Vec& a, const Vec& b) {
    Vec br = st.alg.bracket(a, b);
    Poly out = sharp_poly(st, br);
    Rational zc = st.alg.pair(st.triple.x, br);
    if (zc != 0) out += zc * Poly::z(Space::Slice);
    return out;
  };
  // tail(v) = sum_{(j,n), n < 2 delta} F(v, q^j_n) (F(q^{n+1}_j, q) + tail(q^{n+1}_j)),
  // memoised on the lower index of q^{n+1}_j.
  std::map<std::size_t, Poly> memo;
  std::function<Poly(const Vec&)> tail;
  auto tail_at = [&](std::size_t pos) -> const Poly& {
    auto it = memo.find(pos);
    if (it != memo.end()) return it->second;
    Poly v = F(st.lower[pos], q) + tail(st.lower[pos]);
    return memo.emplace(pos, std::move(v)).first->second;
  };
  tail = [&](const Vec& v) {
    Poly out(Space::Slice);
    for (std::size_t pos = 0; pos < st.index.size(); ++pos) {
      const auto [j, n] = st.index[pos];
      if (n >= st.delta2[j]) continue;
      Poly head = F(v, st.upper[pos]);
      if (head.is_zero()) continue;
      out += head * tail_at(pos + 1);
    }
    return out;
  };
  Poly out = F(p, q) + tail(p);
  return z ? out.at_z(*z) : out;
}

Poly slice_shift(const GradedSetup& st, const Poly& P) {
  Poly z2 = Poly::z(Space::Slice) * Poly::z(Space::Slice);
  return substitute(P, Space::Slice, [&](int j) {
    Rational c = st.alg.pair(st.qj[static_cast<std::size_t>(j)], st.triple.e) / 4;
    return Poly::var(Space::Slice, j) + c * z2;
  });
}

Poly slice_shift(const GradedSetup& st, const Poly& P, const Rational& z) { return slice_shift(st, P).at_z(z); }

Poly poisson_bracket(const PoissonTable& table, const Poly& P, const Poly& Q) {
  const Space space = P.space();
  Poly out(space);
  auto vp = P.variables(), vq = Q.variables();
  for (VarKey a : vp) {
    if (var_deriv(a) != 0) throw Error(ErrorKind::InvalidInput, "Poisson bracket of derivative variables");
    Poly dp = P.partial(a);
    for (VarKey b : vq) {
      if (var_deriv(b) != 0) throw Error(ErrorKind::InvalidInput, "Poisson bracket of derivative variables");
      const Poly& t = table[static_cast<std::size_t>(var_id(a))][static_cast<std::size_t>(var_id(b))];
      if (t.is_zero()) continue;
      out += dp * Q.partial(b) * t;
    }
  }
  return out;
}

Report poisson_axioms(const PoissonTable& table, const std::string& title) {
  Report rep{title};
  const std::size_t n = table.size();
  bool skew = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!(table[i][j] + table[j][i]).is_zero()) skew = false;
  rep.add("antisymmetry on generator pairs", skew);
  bool jacobi = true;
  std::string detail;
  if (n == 0) {
    rep.add("Jacobi on generator triples", true);
    return rep;
  }
  const Space space = table[0][0].space();
  for (std::size_t a = 0; a < n && jacobi; ++a)
    for (std::size_t b = a + 1; b < n && jacobi; ++b)
      for (std::size_t c = b + 1; c < n && jacobi; ++c) {
        Poly va = Poly::var(space, static_cast<int>(a)), vb = Poly::var(space, static_cast<int>(b)),
             vc = Poly::var(space, static_cast<int>(c));
        Poly s = poisson_bracket(table, va, table[b][c]) + poisson_bracket(table, vb, table[c][a]) +
                 poisson_bracket(table, vc, table[a][b]);
        if (!s.is_zero()) {
          jacobi = false;
          detail = "fails on (" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "," + std::to_string(c + 1) + ")";
        }
      }
  rep.add("Jacobi on generator triples", jacobi, detail);
  return rep;
}

PoissonTable finite_table(const GradedSetup& st, bool formal_z) {
  PoissonTable t(st.nf(), std::vector<Poly>(st.nf(), zero_slice()));
  for (std::size_t i = 0; i < st.nf(); ++i)
    for (std::size_t j = 0; j < st.nf(); ++j)
      t[i][j] = finite_bracket(st, st.qj[i], st.qj[j], formal_z ? std::nullopt : std::optional<Rational>(0));
  return t;
}

Namer slice_namer() {
  return [](int j) { return "q" + std::to_string(j + 1); };
}

int slice_weight2(const GradedSetup& st, int j) { return 2 + st.delta2[static_cast<std::size_t>(j)]; }

}  // namespace walg
