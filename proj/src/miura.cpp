#include "walg/miura.hpp"

namespace walg {

LambdaPoly tensor_bracket_gen(const AffinePva& v, int i, int j) {
  const GradedSetup& st = v.setup();
  const int gi = v.grade2(i), gj = v.grade2(j);
  if (gi > 1 || gj > 1) throw Error(ErrorKind::InvalidInput, "tensor variables must lie in g_{<=1/2}");
  const Vec& a = st.lower[static_cast<std::size_t>(i)];
  const Vec& b = st.lower[static_cast<std::size_t>(j)];
  LambdaPoly out(Space::Tensor);
  if (gi <= 0 && gj <= 0) {
    out.add(0, v.element(st.alg.bracket(a, b)).relabel(Space::Tensor));
    out.add(1, Poly::constant(Space::Tensor, st.alg.pair(a, b)));
  } else if (gi == 1 && gj == 1) {
    out.add(0, Poly::constant(Space::Tensor, -st.alg.pair(st.triple.f, st.alg.bracket(a, b))));
  }
  return out;
}

GenBracket tensor_gen_fn(const AffinePva& v) {
  return [&v](int i, int j) { return tensor_bracket_gen(v, i, j); };
}

Poly miura_project(const WAlgebra& W, const Poly& affine) {
  const AffinePva& v = W.affine();
  return affine
      .filter([&](const Monomial& m) {
        for (VarKey k : m)
          if (k != kZ && v.grade2(var_id(k)) < 0) return false;
        return true;
      })
      .relabel(Space::Tensor);
}

Poly miura(const WAlgebra& W, const Poly& p) { return miura_project(W, W.expand(p)); }

Poly miura_virasoro_formula(const WAlgebra& W) {
  const GradedSetup& st = W.setup();
  const AffinePva& v = W.affine();
  auto elem = [&](const Vec& x) { return v.element(x).relabel(Space::Tensor); };
  Poly out = elem(st.triple.x).derivative();
  for (const auto& [k2, basis] : st.eigenspaces) {
    if (k2 != 0 && k2 != 1) continue;
    const std::size_t m = basis.size();
    Matrix gram(m, m);
    for (std::size_t h = 0; h < m; ++h)
      for (std::size_t k = 0; k < m; ++k)
        gram(h, k) = k2 == 0 ? st.alg.pair(basis[h], basis[k])
                             : -st.alg.pair(st.triple.f, st.alg.bracket(basis[h], basis[k]));
    const auto inv = inverse(gram);
    if (!inv) throw Error(ErrorKind::Internal, "degenerate pairing on a grade of g");
    const Matrix& c = *inv;
    for (std::size_t h = 0; h < m; ++h) {
      Vec dual = zero_vec(st.dim());
      for (std::size_t k = 0; k < m; ++k) axpy(dual, c(h, k), basis[k]);
      const Poly up = elem(dual), low = elem(basis[h]);
      out += frac(1, 2) * (k2 == 0 ? up * low : up * low.derivative());
    }
  }
  return out;
}

Report miura_hom_check(const WAlgebra& W) {
  const AffinePva& v = W.affine();
  const GradedSetup& st = W.setup();
  Report rep{"Miura map", {}};
  const GenBracket tgen = tensor_gen_fn(v);
  const std::size_t n = W.size();
  bool full = true, reduced = true;
  std::string fd, rd;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Poly& gi = W.generator(i).w;
      const Poly& gj = W.generator(j).w;
      const LambdaPoly rho = master_bracket(v.rho_gen_fn(), gi, gj).map(Space::Affine, [](const Poly& p) { return p.at_z(0); });
      const std::string where = "fails on (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
      // g_{<=0} (x) F(g_{1/2}): the identity map of variables.
      const LambdaPoly lhs_full = rho.map(Space::Tensor, [](const Poly& p) { return p.relabel(Space::Tensor); });
      if (lhs_full != master_bracket(tgen, gi.relabel(Space::Tensor), gj.relabel(Space::Tensor))) {
        full = false;
        fd = where;
      }
      const LambdaPoly lhs = rho.map(Space::Tensor, [&](const Poly& p) { return miura_project(W, p); });
      if (lhs != master_bracket(tgen, miura(W, W.w(i)), miura(W, W.w(j)))) {
        reduced = false;
        rd = where;
      }
    }
  rep.add("homomorphism into V(g_{<=0}) (x) F(g_{1/2}) at z = 0", full, fd);
  rep.add("homomorphism into V(g_0) (x) F(g_{1/2}) at z = 0", reduced, rd);

  bool lead = true;
  std::string ld;
  for (std::size_t j = 0; j < n; ++j) {
    const int m = (st.delta2[j] + 1) / 2;
    const Poly mu = miura(W, W.w(j));
    const Rational c = mu.coefficient({make_var(static_cast<int>(st.position(j, m)), m)});
    if (c != (m % 2 == 0 ? 1 : -1)) {
      lead = false;
      ld = "missing leading term for w" + std::to_string(j + 1);
    }
  }
  rep.add("leading terms (-d)^n q_j^n present", lead, ld);
  return rep;
}

}  // namespace walg
