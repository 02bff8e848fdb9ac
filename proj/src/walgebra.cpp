#include "walg/walgebra.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <thread>
#include <tuple>

namespace walg {

namespace {

Poly w_zero() { return Poly(Space::W); }
Poly w_const(const Rational& c) { return Poly::constant(Space::W, c); }
Poly w_z() { return Poly::z(Space::W); }

/// [v,w]^sharp as a linear polynomial in the g^f variables u_{(j,0)}.
Poly sharp_affine(const GradedSetup& st, const Vec& v) {
  Poly p(Space::Affine);
  const Vec c = st.sharp_coords(v);
  for (std::size_t j = 0; j < c.size(); ++j)
    if (c[j] != 0) p.add_term({make_var(static_cast<int>(st.position(j, 0)))}, c[j]);
  return p;
}

/// Y -> p Y + c (lambda + d) Y.
LambdaPoly apply_factor(const Poly& p, const Rational& c, const LambdaPoly& y) {
  LambdaPoly out = y.times(p);
  if (c != 0) out += y.lambda_plus_d(1).times(c);
  return out;
}

LambdaPoly lambda_linear(const Poly& p0, const Rational& c1) {
  LambdaPoly out(p0);
  if (c1 != 0) out.add(1, w_const(c1));
  return out;
}

/// Upper positions (j, n) with n < 2 delta(j), i.e. those with a successor q^{n+1}_j.
std::vector<std::size_t> chain_positions(const GradedSetup& st) {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < st.index.size(); ++p)
    if (st.index[p].n < st.delta2[st.index[p].j]) out.push_back(p);
  return out;
}

std::vector<Monomial> weight_ansatz(const AffinePva& v, int target2) {
  std::vector<VarKey> keys;
  for (std::size_t p = 0; p < v.size(); ++p) {
    const int q = static_cast<int>(p);
    if (!v.in_le_half(q)) continue;
    for (int m = 0; v.weight2(q) + 2 * m <= target2; ++m) keys.push_back(make_var(q, m));
  }
  std::sort(keys.begin(), keys.end());
  auto key_weight = [&](VarKey k) { return v.weight2(var_id(k)) + 2 * var_deriv(k); };

  std::vector<Monomial> out;
  Monomial cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t start, int left) {
    if (left == 0) {
      const bool has_ideal = std::any_of(cur.begin(), cur.end(), [&](VarKey k) { return v.is_ideal_var(var_id(k)); });
      const bool single_plain = cur.size() == 1 && var_deriv(cur[0]) == 0;
      if (has_ideal && !single_plain) out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < keys.size(); ++i) {
      const int w = key_weight(keys[i]);
      if (w > left) continue;
      cur.push_back(keys[i]);
      rec(i, left - w);
      cur.pop_back();
    }
  };
  rec(0, target2);
  return out;
}

int ideal_factor_count(const AffinePva& v, const Monomial& m) {
  int c = 0;
  for (VarKey k : m)
    if (k != kZ && v.is_ideal_var(var_id(k))) ++c;
  return c;
}

}  // namespace

Poly linear_term(const AffinePva& v, std::size_t j0) {
  const GradedSetup& st = v.setup();
  const auto chain = chain_positions(st);
  // Lin(u, K) = sum over upper q^j_n of grade in [1/2, K] of
  //   ([u, q^j_n]^sharp - (u|q^j_n) d) (q^{n+1}_j + Lin(q^{n+1}_j, grade - 1)),
  // memoised on the position of q^{n+1}_j.
  std::map<std::size_t, Poly> memo;
  std::function<Poly(const Vec&, int)> lin;
  auto tail_at = [&](std::size_t pos) -> const Poly& {
    auto it = memo.find(pos);
    if (it != memo.end()) return it->second;
    const int k2 = st.upper_grade2(pos - 1);
    Poly x = v.var(static_cast<int>(pos)) + lin(st.lower[pos], k2 - 2);
    return memo.emplace(pos, std::move(x)).first->second;
  };
  lin = [&](const Vec& u, int K2) {
    Poly out(Space::Affine);
    for (std::size_t p : chain) {
      const int k2 = st.upper_grade2(p);
      if (k2 < 1 || k2 > K2) continue;
      const Poly head = sharp_affine(st, st.alg.bracket(u, st.upper[p]));
      const Rational c = st.alg.pair(u, st.upper[p]);
      if (head.is_zero() && c == 0) continue;
      const Poly& x = tail_at(p + 1);
      out += head * x;
      if (c != 0) out -= c * x.derivative();
    }
    return out;
  };
  return lin(st.qj[j0], st.delta2[j0]);
}

WGenerator solve_generator(const AffinePva& v, std::size_t j) {
  const GradedSetup& st = v.setup();
  WGenerator g;
  g.j = j;
  g.weight2 = 2 + st.delta2[j];
  const Poly q = v.var(static_cast<int>(st.position(j, 0)));
  const auto ansatz = weight_ansatz(v, g.weight2);
  g.ansatz_size = ansatz.size();

  SparseSystem sys(ansatz.size());
  for (std::size_t a = 0; a < v.size(); ++a) {
    if (v.grade2(static_cast<int>(a)) < 1) continue;
    // (lambda power, output monomial) -> equation
    std::map<std::pair<int, Monomial>, std::pair<SparseSystem::Row, Rational>> eqs;
    auto collect = [&](const LambdaPoly& r, std::optional<std::size_t> unknown) {
      for (int k = 0; k <= r.degree(); ++k)
        for (const auto& [m, c] : r.coeffs()[static_cast<std::size_t>(k)].terms()) {
          auto& e = eqs[{k, m}];
          if (unknown)
            e.first[*unknown] += c;
          else
            e.second += c;
        }
    };
    collect(v.rho_action(static_cast<int>(a), q), std::nullopt);
    for (std::size_t u = 0; u < ansatz.size(); ++u) {
      Poly m(Space::Affine);
      m.add_term(ansatz[u], 1);
      collect(v.rho_action(static_cast<int>(a), m), u);
    }
    for (auto& [key, e] : eqs) {
      SparseSystem::Row row;
      for (auto& [c, val] : e.first)
        if (val != 0) row.emplace(c, val);
      if (row.empty() && e.second == 0) continue;
      sys.add_equation(std::move(row), e.second);
    }
  }
  if (!sys.consistent())
    throw Error(ErrorKind::Internal, "generator ansatz has no solution for q" + std::to_string(j + 1));
  auto sol = sys.unique_solution();
  if (!sol)
    throw Error(ErrorKind::Internal, "generator ansatz solution is not unique for q" + std::to_string(j + 1));

  g.w = q;
  for (std::size_t u = 0; u < ansatz.size(); ++u)
    if ((*sol)[u] != 0) g.w.add_term(ansatz[u], (*sol)[u]);
  g.linear = g.w.filter([&](const Monomial& m) { return ideal_factor_count(v, m) == 1; });
  if (g.linear != linear_term(v, j))
    throw Error(ErrorKind::Internal, "linear part of w(q" + std::to_string(j + 1) + ") disagrees with the chain formula");
  return g;
}

WAlgebra::WAlgebra(const GradedSetup& st, unsigned jobs) : st_(&st), affine_(st) {
  const std::size_t n = st.nf();
  gens_.resize(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t j = next++; j < n; j = next++) {
      try {
        gens_[j] = solve_generator(affine_, j);
      } catch (...) {
        errors[j] = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  table_.assign(n * n, LambdaPoly(Space::W));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table_[i * n + j] = bracket_closed(i, j);
}

std::optional<int> WAlgebra::weight(const Poly& p) const {
  return conformal_weight2(p, [this](int j) { return weight2(static_cast<std::size_t>(j)); }, st_->depth2 + 2);
}

bool WAlgebra::is_in_w(const Poly& g) const {
  for (std::size_t a = 0; a < affine_.size(); ++a) {
    if (affine_.grade2(static_cast<int>(a)) < 1) continue;
    if (!affine_.rho_action(static_cast<int>(a), g).is_zero()) return false;
  }
  return true;
}

Poly WAlgebra::pi_to_w(const Poly& g, bool require_member) const {
  if (g.space() != Space::Affine) throw Error(ErrorKind::InvalidInput, "pi_to_w expects a polynomial over g_{<=1/2}");
  if (require_member && !is_in_w(g)) throw Error(ErrorKind::NotAMember, "polynomial is not in the W-algebra");
  Poly out(Space::W);
  for (const auto& [m, c] : g.terms()) {
    Monomial r;
    bool keep = true;
    for (VarKey k : m) {
      if (k == kZ) {
        r.push_back(kZ);
        continue;
      }
      const int p = var_id(k);
      if (!affine_.in_le_half(p)) throw Error(ErrorKind::InvalidInput, "variable outside g_{<=1/2}: " + affine_.name(p));
      if (affine_.is_ideal_var(p)) {
        keep = false;
        break;
      }
      r.push_back(make_var(static_cast<int>(st_->index[static_cast<std::size_t>(p)].j), var_deriv(k)));
    }
    if (!keep) continue;
    std::sort(r.begin(), r.end());
    out.add_term(r, c);
  }
  return out;
}

Poly WAlgebra::expand(const Poly& p) const {
  if (p.space() != Space::W) throw Error(ErrorKind::InvalidInput, "expand expects a W polynomial");
  return substitute(p, Space::Affine, [this](int j) { return gens_[static_cast<std::size_t>(j)].w; });
}

Poly WAlgebra::w_of(const Vec& v) const {
  Poly p(Space::W);
  const Vec c = st_->sharp_coords(v);
  for (std::size_t j = 0; j < c.size(); ++j)
    if (c[j] != 0) p.add_term({make_var(static_cast<int>(j))}, c[j]);
  return p;
}

LambdaPoly WAlgebra::bracket_direct(std::size_t i, std::size_t j) const {
  LambdaPoly r = master_bracket(affine_.rho_gen_fn(), gens_[i].w, gens_[j].w);
  return r.map(Space::W, [this](const Poly& p) { return pi_to_w(p); });
}

LambdaPoly WAlgebra::bracket_closed(std::size_t i, std::size_t j, const std::optional<Vec>& zeta0) const {
  const GradedSetup& st = *st_;
  const Vec zeta = zeta0 ? *zeta0 : st.s;
  if (zeta.size() != st.dim()) throw Error(ErrorKind::InvalidInput, "zeta has the wrong dimension", "zeta");
  if (!is_zero(st.alg.bracket(st.triple.e, zeta))) throw Error(ErrorKind::InvalidInput, "zeta must lie in g^e", "zeta");
  const Vec& a = st.qj[i];
  const Vec& b = st.qj[j];
  const int h2 = st.delta2[i];
  const auto chain = chain_positions(st);

  auto zterm = [&](const Vec& br) {
    const Rational c = st.alg.pair(zeta, br);
    return c == 0 ? w_zero() : c * w_z();
  };
  // F_last(u) = w([u,a]^sharp) - (u|a) lambda + z(zeta|[u,a])
  auto last = [&](const Vec& u) {
    const Vec br = st.alg.bracket(u, a);
    return lambda_linear(w_of(br) + zterm(br), -st.alg.pair(u, a));
  };
  std::map<std::size_t, LambdaPoly> memo;
  std::function<LambdaPoly(const Vec&, int)> chain_sum;
  auto tail_at = [&](std::size_t pos) -> const LambdaPoly& {
    auto it = memo.find(pos);
    if (it != memo.end()) return it->second;
    LambdaPoly y = last(st.lower[pos]) + chain_sum(st.lower[pos], st.lower_grade2(pos));
    return memo.emplace(pos, std::move(y)).first->second;
  };
  // C(u) = sum over upper q^j_n of grade in [1-h, -grade(u)] of
  //   (w([u,q^j_n]^sharp) - (u|q^j_n)(lambda+d) + z(zeta|[u,q^j_n])) (F_last(q^{n+1}_j) + C(q^{n+1}_j))
  chain_sum = [&](const Vec& u, int u_grade2) {
    LambdaPoly out(Space::W);
    for (std::size_t p : chain) {
      const int k2 = st.upper_grade2(p);
      if (k2 < 2 - h2 || k2 > -u_grade2) continue;
      const Vec br = st.alg.bracket(u, st.upper[p]);
      const Poly head = w_of(br) + zterm(br);
      const Rational c = st.alg.pair(u, st.upper[p]);
      if (head.is_zero() && c == 0) continue;
      out += apply_factor(head, -c, tail_at(p + 1));
    }
    return out;
  };
  const Vec ab = st.alg.bracket(a, b);
  LambdaPoly out = lambda_linear(w_of(ab) + zterm(ab), st.alg.pair(a, b));
  out -= chain_sum(b, -st.delta2[j]);

  const auto g2 = st.grade2_of(zeta);
  const bool linear_expected = is_zero(zeta) || (g2 && *g2 == st.depth2);
  if (linear_expected && out.z_degree() > 1)
    throw Error(ErrorKind::Internal, "lambda-bracket is not linear in z");
  return out;
}

LambdaPoly WAlgebra::bracket_skewform(std::size_t i, std::size_t j) const {
  const GradedSetup& st = *st_;
  const Vec& a = st.qj[i];
  const Vec& b = st.qj[j];
  const int h2 = st.delta2[i];
  const auto chain = chain_positions(st);
  const LambdaPoly one(w_const(1));

  // Right product: P(x) sums the chains of the a side ending in x, with the sign (-1)^s.
  // O'(x, v) Y = w([q_x, v]^sharp) Y - (q_x|v)(lambda+d) Y.
  std::map<std::size_t, LambdaPoly> pmemo;
  std::function<const LambdaPoly&(std::size_t)> P = [&](std::size_t x) -> const LambdaPoly& {
    auto it = pmemo.find(x);
    if (it != pmemo.end()) return it->second;
    const int kx = st.upper_grade2(x);
    const Vec& ux = st.upper[x];
    LambdaPoly acc(Space::W);
    if (kx <= h2) acc += apply_factor(w_of(st.alg.bracket(ux, a)), -st.alg.pair(ux, a), one);
    for (std::size_t y : chain) {
      if (st.upper_grade2(y) < kx + 2) continue;
      const LambdaPoly& py = P(y);
      if (py.is_zero()) continue;
      const Vec& v = st.lower[y + 1];
      acc += apply_factor(w_of(st.alg.bracket(ux, v)), -st.alg.pair(ux, v), py);
    }
    return pmemo.emplace(x, -acc).first->second;
  };
  // Middle factor M(u, v) with u from the b side and v from the a side.
  auto middle = [&](const Vec& u, const Vec& v, const LambdaPoly& y) {
    const Vec br = st.alg.bracket(v, u);
    Poly p = w_of(br) + w_const(st.alg.pair(st.triple.f, br));
    const Rational zc = st.alg.pair(st.s, br);
    if (zc != 0) p += zc * w_z();
    return apply_factor(p, st.alg.pair(v, u), y);
  };
  auto mid = [&](const Vec& u) {
    LambdaPoly out = middle(u, a, one);
    for (std::size_t x : chain) {
      if (st.upper_grade2(x) < 1) continue;
      const LambdaPoly& px = P(x);
      if (px.is_zero()) continue;
      out += middle(u, st.lower[x + 1], px);
    }
    return out;
  };
  // Left product over the b side chains.
  std::map<std::size_t, LambdaPoly> lmemo;
  std::function<LambdaPoly(const Vec&, int)> left;
  auto left_at = [&](std::size_t pos) -> const LambdaPoly& {
    auto it = lmemo.find(pos);
    if (it != lmemo.end()) return it->second;
    LambdaPoly y = left(st.lower[pos], st.lower_grade2(pos));
    return lmemo.emplace(pos, std::move(y)).first->second;
  };
  left = [&](const Vec& u, int u_grade2) {
    LambdaPoly out = mid(u);
    for (std::size_t y : chain) {
      const int k2 = st.upper_grade2(y);
      if (k2 < 1 || k2 > -u_grade2) continue;
      const Vec br = st.alg.bracket(u, st.upper[y]);
      const Poly head = w_of(br);
      const Rational c = st.alg.pair(u, st.upper[y]);
      if (head.is_zero() && c == 0) continue;
      out += apply_factor(head, -c, left_at(y + 1));
    }
    return out;
  };
  return left(b, -st.delta2[j]);
}

GenBracket WAlgebra::table_fn() const {
  return [this](int i, int j) { return table(static_cast<std::size_t>(i), static_cast<std::size_t>(j)); };
}

LambdaPoly WAlgebra::bracket(const Poly& g, const Poly& h) const { return master_bracket(table_fn(), g, h); }

Namer WAlgebra::namer() const {
  return [](int j) { return "w" + std::to_string(j + 1); };
}

LambdaPoly weight_one_formula(const WAlgebra& W, const Vec& a, const Vec& b) {
  const GradedSetup& st = W.setup();
  const Vec ab = st.alg.bracket(a, b);
  return lambda_linear(W.w_of(ab) + st.alg.pair(st.s, ab) * w_z(), st.alg.pair(a, b));
}

LambdaPoly weight_three_halves_formula(const WAlgebra& W, const Vec& a, const Vec& b) {
  const GradedSetup& st = W.setup();
  const Vec ab = st.alg.bracket(a, b);
  LambdaPoly out(W.w_of(ab) + st.alg.pair(st.s, ab) * w_z());
  const Poly v = W.w_of(st.alg.bracket(a, st.alg.bracket(st.triple.e, b)));
  out.add(0, v.derivative());
  out.add(1, Rational(2) * v);
  out.add(2, w_const(-st.alg.pair(st.triple.e, ab)));
  for (std::size_t p = 0; p < st.index.size(); ++p) {
    if (st.upper_grade2(p) != 1) continue;
    out.add(0, W.w_of(st.alg.bracket(a, st.upper[p])) * W.w_of(st.alg.bracket(st.lower[p + 1], b)));
  }
  return out;
}

LambdaPoly wf_formula(const WAlgebra& W, std::size_t j) {
  const GradedSetup& st = W.setup();
  const Vec& b = st.qj[j];
  const Rational delta = frac(2 + st.delta2[j], 2);
  LambdaPoly out(Space::W);
  for (std::size_t i = 0; i < st.nf(); ++i)
    if (st.delta2[i] >= 1) out.add(0, W.w(i) * W.w_of(st.alg.bracket(st.qjup[i], b)));
  if (st.delta2[j] != 0) {
    out.add(0, W.w(j, 1));
    out.add(1, delta * W.w(j));
  }
  out.add(3, w_const(-st.alg.pair(st.triple.e, b) / 2));
  out.add(0, W.w_of(st.alg.bracket(st.s, b)) * w_z());
  out.add(1, delta * st.alg.pair(st.s, b) * w_z());
  return out;
}

namespace {

/// (d + c lambda) p.
LambdaPoly d_plus(const Poly& p, const Rational& c) {
  LambdaPoly out(p.derivative());
  out.add(1, c * p);
  return out;
}

}  // namespace

Virasoro virasoro(const WAlgebra& W) {
  const GradedSetup& st = W.setup();
  Virasoro v;
  v.checks.title = "Virasoro";
  for (std::size_t j = 0; j < st.nf(); ++j)
    if (st.delta2[j] == 0) v.L0 += frac(1, 2) * (W.w(j) * W.w_of(st.qjup[j]));
  v.wf = W.w_of(st.triple.f);
  v.L = v.wf + v.L0;

  const Rational xx = st.alg.pair(st.triple.x, st.triple.x);
  const Rational sf = st.alg.pair(st.s, st.triple.f);
  LambdaPoly central(Space::W);
  central.add(3, w_const(-xx));
  central.add(1, (2 * sf) * w_z());

  v.checks.add("{L0_lambda L0} = (d+2 lambda) L0", W.bracket(v.L0, v.L0) == d_plus(v.L0, 2));
  v.checks.add("{wf_lambda wf} = (d+2 lambda) wf - (x|x) lambda^3 + 2z(s|f) lambda",
               W.bracket(v.wf, v.wf) == d_plus(v.wf, 2) + central);
  v.checks.add("{wf_lambda L0} = 0", W.bracket(v.wf, v.L0).is_zero());
  v.checks.add("{L0_lambda wf} = 0", W.bracket(v.L0, v.wf).is_zero());
  v.checks.add("{L_lambda L} = (d+2 lambda) L - (x|x) lambda^3 + 2z(s|f) lambda",
               W.bracket(v.L, v.L) == d_plus(v.L, 2) + central);
  bool gens = true;
  std::string detail;
  for (std::size_t j = 0; j < st.nf(); ++j) {
    const Rational delta = frac(2 + st.delta2[j], 2);
    const Vec& a = st.qj[j];
    LambdaPoly expect = d_plus(W.w(j), delta);
    expect.add(3, w_const(-st.alg.pair(st.triple.e, a) / 2));
    expect.add(1, (delta * st.alg.pair(st.s, a)) * w_z());
    if (W.bracket(v.L, W.w(j)) != expect) {
      gens = false;
      detail = "fails for w" + std::to_string(j + 1);
    }
  }
  v.checks.add("{L_lambda w(a)} = (d + Delta lambda) w(a) - (e|a)/2 lambda^3 + z Delta (s|a) lambda", gens, detail);
  return v;
}

Report w_pva_axioms(const WAlgebra& W) {
  Report rep{"W-algebra PVA axioms", {}};
  const std::size_t n = W.size();
  const GenBracket gen = W.table_fn();
  bool skew = true, jac = true;
  std::string sd, jd;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!skew_defect(gen, W.w(i), W.w(j)).is_zero()) {
        skew = false;
        sd = "fails on (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!jacobi_defect(gen, W.w(i), W.w(j), W.w(k)).empty()) {
          jac = false;
          jd = "fails on (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")";
        }
  rep.add("skewsymmetry on generator pairs", skew, sd);
  rep.add("Jacobi on generator triples", jac, jd);
  return rep;
}

}  // namespace walg
