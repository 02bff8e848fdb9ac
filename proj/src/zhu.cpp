#include "walg/zhu.hpp"

#include <functional>
#include <map>

namespace walg {

Poly zhu_reduce(const WAlgebra& W, const Poly& p) {
  if (p.space() != Space::W) throw Error(ErrorKind::InvalidInput, "zhu_reduce expects a W polynomial");
  const Poly z = Poly::z(Space::W);
  return substitute_keys(p, Space::W, [&](VarKey k) {
    const std::size_t j = static_cast<std::size_t>(var_id(k));
    const int m = var_deriv(k);
    const Rational delta = frac(W.weight2(j), 2);
    Rational c = 1;
    Poly out = W.w(j);
    for (int t = 0; t < m; ++t) {
      c *= -(delta + t);
      out = out * z;
    }
    return c * out;
  });
}

Poly zhu_bracket_generic(const WAlgebra& W, std::size_t i, std::size_t j) {
  const LambdaPoly b = W.bracket_direct(i, j);
  const Rational alpha = frac(W.weight2(i), 2) - 1;
  const Poly z = Poly::z(Space::W);
  Poly out(Space::W);
  Poly zk = Poly::constant(Space::W, 1);
  Rational ff = 1;  // alpha (alpha - 1) ... (alpha - k + 1)
  for (int k = 0; k <= b.degree(); ++k) {
    if (k > 0) {
      ff *= alpha - (k - 1);
      zk = zk * z;
    }
    if (ff == 0) break;
    const Poly c = b.coeff(k).at_z(0);
    if (c.is_zero()) continue;
    out += ff * (zk * zhu_reduce(W, c));
  }
  return out;
}

Poly zhu_bracket_closed(const WAlgebra& W, std::size_t i, std::size_t j) {
  const GradedSetup& st = W.setup();
  const Vec& a = st.qj[i];
  const Vec& b = st.qj[j];
  const int h2 = st.delta2[i];
  auto F = [&](const Vec& u, const Vec& v) {
    const Vec br = st.alg.bracket(u, v);
    Poly out = W.w_of(br);
    const Rational c = st.alg.pair(st.triple.x, br);
    if (c != 0) out -= c * Poly::z(Space::W);
    return out;
  };
  std::map<std::size_t, Poly> memo;
  std::function<Poly(const Vec&, int)> chain_sum;
  auto tail_at = [&](std::size_t pos) -> const Poly& {
    auto it = memo.find(pos);
    if (it != memo.end()) return it->second;
    Poly y = F(st.lower[pos], a) + chain_sum(st.lower[pos], st.lower_grade2(pos));
    return memo.emplace(pos, std::move(y)).first->second;
  };
  chain_sum = [&](const Vec& u, int u_grade2) {
    Poly out(Space::W);
    for (std::size_t p = 0; p < st.index.size(); ++p) {
      if (st.index[p].n >= st.delta2[st.index[p].j]) continue;
      const int k2 = st.upper_grade2(p);
      if (k2 < 2 - h2 || k2 > -u_grade2) continue;
      const Poly head = F(u, st.upper[p]);
      if (head.is_zero()) continue;
      out += head * tail_at(p + 1);
    }
    return out;
  };
  return F(a, b) - chain_sum(b, -st.delta2[j]);
}

PoissonTable zhu_table(const WAlgebra& W) {
  PoissonTable t(W.size(), std::vector<Poly>(W.size(), Poly(Space::W)));
  for (std::size_t i = 0; i < W.size(); ++i)
    for (std::size_t j = 0; j < W.size(); ++j) t[i][j] = zhu_bracket_closed(W, i, j);
  return t;
}

Poly zhu_shift(const WAlgebra& W, const Poly& p) {
  const GradedSetup& st = W.setup();
  const Poly z2 = Poly::z(Space::W) * Poly::z(Space::W);
  return substitute(p, Space::W, [&](int j) {
    const Rational c = st.alg.pair(st.qj[static_cast<std::size_t>(j)], st.triple.e) / 4;
    return W.w(static_cast<std::size_t>(j)) + c * z2;
  });
}

Report zhu_iso_check(const WAlgebra& W) {
  const GradedSetup& st = W.setup();
  Report rep{"Zhu algebra", {}};
  const std::size_t n = W.size();
  const Poly minus_z = -Poly::z(Space::Slice);
  bool routes = true, finite0 = true, twisted = true, shift = true;
  std::string rd, fd, td, sd;
  auto where = [](std::size_t i, std::size_t j) { return "fails on (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Poly closed = zhu_bracket_closed(W, i, j);
      if (zhu_bracket_generic(W, i, j) != closed) {
        routes = false;
        rd = where(i, j);
      }
      const Poly fin = finite_bracket(st, st.qj[i], st.qj[j]);
      if (closed.at_z(0).relabel(Space::Slice) != fin.at_z(0)) {
        finite0 = false;
        fd = where(i, j);
      }
      // The twisted finite bracket with z -> -z.
      Poly flipped(Space::Slice);
      for (int k = 0; k <= fin.z_degree(); ++k) {
        Poly term = fin.z_coefficient(k);
        for (int t = 0; t < k; ++t) term = term * minus_z;
        flipped += term;
      }
      if (closed.relabel(Space::Slice) != flipped) {
        twisted = false;
        td = where(i, j);
      }
      if (zhu_shift(W, closed.at_z(0)) != closed) {
        shift = false;
        sd = where(i, j);
      }
    }
  rep.add("generic route equals closed formula", routes, rd);
  rep.add("z = 0 bracket equals the finite W-algebra bracket", finite0, fd);
  rep.add("bracket equals the twisted finite bracket at -z", twisted, td);
  rep.add("(z^2/4)(q|e) shift is an isomorphism", shift, sd);
  rep.append(poisson_axioms(zhu_table(W), "Zhu Poisson axioms"));
  return rep;
}

}  // namespace walg
