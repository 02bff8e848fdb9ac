#include "walg/pva.hpp"

#include <map>

namespace walg {

LambdaPoly master_bracket(const GenBracket& gen, const Poly& g, const Poly& h) {
  const Space space = g.space();
  LambdaPoly result(space);
  if (g.is_zero() || h.is_zero()) return result;

  // S_i = sum_m (-lambda-d)^m dg/du_i^(m)
  std::map<int, LambdaPoly> left;
  for (VarKey v : g.variables()) {
    LambdaPoly term = minus_lambda_minus_d(g.partial(v), var_deriv(v));
    auto [it, inserted] = left.try_emplace(var_id(v), term);
    if (!inserted) it->second += term;
  }
  std::map<int, std::vector<std::pair<int, Poly>>> right;
  for (VarKey v : h.variables()) right[var_id(v)].emplace_back(var_deriv(v), h.partial(v));

  for (const auto& [i, s] : left) {
    if (s.is_zero()) continue;
    for (const auto& [j, partials] : right) {
      const LambdaPoly b = gen(i, j);
      if (b.is_zero()) continue;
      // Y = sum_k B_k (lambda+d)^k S_i
      LambdaPoly y(space);
      for (int k = 0; k <= b.degree(); ++k) {
        const Poly& bk = b.coeffs()[static_cast<std::size_t>(k)];
        if (bk.is_zero()) continue;
        y += s.lambda_plus_d(k).times(bk);
      }
      if (y.is_zero()) continue;
      for (const auto& [n, dh] : partials) result += y.lambda_plus_d(n).times(dh);
    }
  }
  return result;
}

LambdaPoly skew_defect(const GenBracket& gen, const Poly& g, const Poly& h) {
  LambdaPoly out = master_bracket(gen, g, h);
  LambdaPoly other = master_bracket(gen, h, g);
  for (int k = 0; k <= other.degree(); ++k) out += minus_lambda_minus_d(other.coeff(k), k);
  return out;
}

namespace {

void bi_add(BiLambda& m, int a, int b, const Poly& p) {
  if (p.is_zero()) return;
  auto [it, inserted] = m.try_emplace({a, b}, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) m.erase(it);
  }
}

}  // namespace

BiLambda jacobi_defect(const GenBracket& gen, const Poly& g, const Poly& h, const Poly& k) {
  BiLambda out;
  LambdaPoly hk = master_bracket(gen, h, k);
  for (int b = 0; b <= hk.degree(); ++b) {
    LambdaPoly inner = master_bracket(gen, g, hk.coeff(b));
    for (int a = 0; a <= inner.degree(); ++a) bi_add(out, a, b, inner.coeff(a));
  }
  LambdaPoly gk = master_bracket(gen, g, k);
  for (int a = 0; a <= gk.degree(); ++a) {
    LambdaPoly inner = master_bracket(gen, h, gk.coeff(a));
    for (int b = 0; b <= inner.degree(); ++b) bi_add(out, a, b, -inner.coeff(b));
  }
  LambdaPoly gh = master_bracket(gen, g, h);
  for (int a = 0; a <= gh.degree(); ++a) {
    LambdaPoly inner = master_bracket(gen, gh.coeff(a), k);
    for (int c = 0; c <= inner.degree(); ++c) {
      const Poly& u = inner.coeffs()[static_cast<std::size_t>(c)];
      for (int i = 0; i <= c; ++i) bi_add(out, a + i, c - i, -(binomial(c, i) * u));
    }
  }
  return out;
}

AffinePva::AffinePva(const GradedSetup& st) : st_(&st) {
  const std::size_t n = size();
  gen_.assign(n * n, LambdaPoly(Space::Affine));
  rho_gen_.assign(n * n, LambdaPoly(Space::Affine));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec br = st.alg.bracket(st.lower[i], st.lower[j]);
      LambdaPoly l(Space::Affine);
      l.add(0, element(br));
      l.add(1, Poly::constant(Space::Affine, st.alg.pair(st.lower[i], st.lower[j])));
      l.add(0, st.alg.pair(st.s, br) * Poly::z(Space::Affine));
      gen_[i * n + j] = l;
      rho_gen_[i * n + j] = l.map(Space::Affine, [this](const Poly& p) { return rho(p); });
    }
}

GenBracket AffinePva::gen_fn() const {
  return [this](int i, int j) { return gen(i, j); };
}

GenBracket AffinePva::rho_gen_fn() const {
  return [this](int i, int j) { return rho_gen(i, j); };
}

Poly AffinePva::element(const Vec& v) const {
  Poly p(Space::Affine);
  for (std::size_t q = 0; q < size(); ++q) {
    Rational c = st_->alg.pair(v, st_->upper[q]);
    if (c != 0) p.add_term({make_var(static_cast<int>(q))}, c);
  }
  return p;
}

std::optional<int> AffinePva::weight(const Poly& p) const {
  return conformal_weight2(p, [this](int q) { return weight2(q); }, st_->depth2 + 2);
}

Poly AffinePva::rho(const Poly& p) const {
  return substitute_keys(p, Space::Affine, [this](VarKey k) {
    const int q = var_id(k);
    if (in_le_half(q)) return Poly::var(Space::Affine, q, var_deriv(k));
    if (var_deriv(k) > 0) return Poly(Space::Affine);
    return Poly::constant(Space::Affine, st_->alg.pair(st_->triple.f, st_->lower[static_cast<std::size_t>(q)]));
  });
}

LambdaPoly AffinePva::rho_action(int a, const Poly& g) const {
  if (grade2(a) < 1) throw Error(ErrorKind::InvalidInput, "rho action requires a in g_{>=1/2}");
  LambdaPoly r = master_bracket(rho_gen_fn(), var(a), g);
  if (r.z_degree() > 0) throw Error(ErrorKind::Internal, "rho action depends on z");
  return r;
}

std::string AffinePva::name(int p) const {
  const auto& ix = st_->index[static_cast<std::size_t>(p)];
  std::string s = "q" + std::to_string(ix.j + 1);
  if (ix.n > 0) s += "." + std::to_string(ix.n);
  return s;
}

Namer AffinePva::namer() const {
  return [this](int p) { return name(p); };
}

}  // namespace walg
