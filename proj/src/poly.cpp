#include "walg/poly.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace walg {

const char* to_string(Space s) {
  switch (s) {
    case Space::Affine: return "affine";
    case Space::W: return "w";
    case Space::Slice: return "slice";
    case Space::Tensor: return "tensor";
  }
  return "?";
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(m));
  return m;
}

Poly Poly::constant(Space space, const Rational& c) {
  Poly p(space);
  p.add_term({}, c);
  return p;
}

Poly Poly::var(Space space, int id, int deriv) {
  if (id < 0 || deriv < 0 || deriv > kMaxDeriv) throw Error(ErrorKind::Internal, "variable out of range");
  Poly p(space);
  p.add_term({make_var(id, deriv)}, 1);
  return p;
}

Poly Poly::z(Space space) {
  Poly p(space);
  p.add_term({kZ}, 1);
  return p;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::check_space(const Poly& o) const {
  if (space_ != o.space_)
    throw Error(ErrorKind::InvalidInput,
                std::string("mixing polynomial spaces ") + to_string(space_) + " and " + to_string(o.space_));
}

Poly& Poly::operator+=(const Poly& o) {
  check_space(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_space(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r(*this);
  r += o;
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r(*this);
  r -= o;
  return r;
}

Poly Poly::operator-() const {
  Poly r(*this);
  r *= Rational(-1);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  check_space(o);
  Poly r(space_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
  return r;
}

Poly Poly::derivative(int times) const {
  Poly cur(*this);
  for (int t = 0; t < times; ++t) {
    Poly next(space_);
    for (const auto& [m, c] : cur.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == kZ) continue;
        if (i > 0 && m[i] == m[i - 1]) continue;  // equal factors handled together
        std::size_t mult = 1;
        while (i + mult < m.size() && m[i + mult] == m[i]) ++mult;
        if (var_deriv(m[i]) >= kMaxDeriv) throw Error(ErrorKind::Internal, "derivative order overflow");
        Monomial d(m);
        d.erase(d.begin() + static_cast<long>(i));
        VarKey up = m[i] + 1;
        d.insert(std::upper_bound(d.begin(), d.end(), up), up);
        next.add_term(d, c * static_cast<long>(mult));
      }
    }
    cur = std::move(next);
  }
  return cur;
}

Poly Poly::partial(VarKey v) const {
  Poly r(space_);
  for (const auto& [m, c] : terms_) {
    auto range = std::equal_range(m.begin(), m.end(), v);
    const long e = range.second - range.first;
    if (e == 0) continue;
    Monomial d(m);
    d.erase(d.begin() + (range.first - m.begin()));
    r.add_term(d, c * e);
  }
  return r;
}

std::set<VarKey> Poly::variables() const {
  std::set<VarKey> vs;
  for (const auto& [m, c] : terms_)
    for (VarKey k : m)
      if (k != kZ) vs.insert(k);
  return vs;
}

int Poly::z_degree() const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(std::count(m.begin(), m.end(), kZ)));
  return d;
}

Poly Poly::z_coefficient(int k) const {
  Poly r(space_);
  for (const auto& [m, c] : terms_) {
    if (std::count(m.begin(), m.end(), kZ) != k) continue;
    r.add_term(Monomial(m.begin() + k, m.end()), c);  // z sorts first
  }
  return r;
}

Poly Poly::at_z(const Rational& value) const {
  Poly r(space_);
  for (const auto& [m, c] : terms_) {
    const long k = std::count(m.begin(), m.end(), kZ);
    Rational f = c;
    for (long i = 0; i < k; ++i) f *= value;
    r.add_term(Monomial(m.begin() + k, m.end()), f);
  }
  return r;
}

Poly Poly::relabel(Space target) const {
  Poly r(*this);
  r.space_ = target;
  return r;
}

Poly Poly::filter(const std::function<bool(const Monomial&)>& pred) const {
  Poly r(space_);
  for (const auto& [m, c] : terms_)
    if (pred(m)) r.terms_.emplace(m, c);
  return r;
}

Poly substitute_keys(const Poly& p, Space target, const std::function<Poly(VarKey)>& image) {
  std::unordered_map<VarKey, Poly> cache;
  auto img = [&](VarKey k) -> const Poly& {
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    Poly v = k == kZ ? Poly::z(target) : image(k);
    if (v.space() != target) throw Error(ErrorKind::Internal, "substitution image in wrong space");
    return cache.emplace(k, std::move(v)).first->second;
  };
  Poly r(target);
  for (const auto& [m, c] : p.terms()) {
    Poly t = Poly::constant(target, c);
    for (VarKey k : m) {
      t = t * img(k);
      if (t.is_zero()) break;
    }
    r += t;
  }
  return r;
}

Poly substitute(const Poly& p, Space target, const std::function<Poly(int)>& image) {
  std::unordered_map<int, Poly> base;
  return substitute_keys(p, target, [&](VarKey k) {
    const int id = var_id(k);
    auto it = base.find(id);
    if (it == base.end()) it = base.emplace(id, image(id)).first;
    return it->second.derivative(var_deriv(k));
  });
}

std::optional<int> conformal_weight2(const Poly& p, const std::function<int(int)>& var_weight2, int z_weight2) {
  std::optional<int> w;
  for (const auto& [m, c] : p.terms()) {
    int mw = 0;
    for (VarKey k : m) mw += k == kZ ? z_weight2 : var_weight2(var_id(k)) + 2 * var_deriv(k);
    if (w && *w != mw) return std::nullopt;
    w = mw;
  }
  return w ? *w : 0;
}

namespace {

std::string factor_name(VarKey k, const Namer& name) {
  if (k == kZ) return "z";
  std::string s = name(var_id(k));
  s.append(static_cast<std::size_t>(var_deriv(k)), '\'');
  return s;
}

std::string render_monomial(const Monomial& m, const Namer& name) {
  std::string out;
  for (std::size_t i = 0; i < m.size();) {
    std::size_t e = 1;
    while (i + e < m.size() && m[i + e] == m[i]) ++e;
    if (!out.empty()) out += "*";
    out += factor_name(m[i], name);
    if (e > 1) out += "^" + std::to_string(e);
    i += e;
  }
  return out;
}

}  // namespace

std::string render(const Poly& p, const Namer& name) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    const bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (m.empty()) {
      out += to_string(a);
    } else {
      if (a != 1) out += to_string(a) + "*";
      out += render_monomial(m, name);
    }
  }
  return out;
}

LambdaPoly LambdaPoly::lambda_power(Space space, int k, const Rational& c) {
  LambdaPoly l(space);
  l.set(k, Poly::constant(space, c));
  return l;
}

Poly LambdaPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Poly(space_);
  return c_[static_cast<std::size_t>(k)];
}

void LambdaPoly::set(int k, const Poly& p) {
  if (p.space() != space_) throw Error(ErrorKind::InvalidInput, "lambda coefficient in wrong space");
  if (static_cast<int>(c_.size()) <= k) c_.resize(static_cast<std::size_t>(k + 1), Poly(space_));
  c_[static_cast<std::size_t>(k)] = p;
  trim();
}

void LambdaPoly::add(int k, const Poly& p) {
  if (p.is_zero()) return;
  if (static_cast<int>(c_.size()) <= k) c_.resize(static_cast<std::size_t>(k + 1), Poly(space_));
  c_[static_cast<std::size_t>(k)] += p;
  trim();
}

void LambdaPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

LambdaPoly& LambdaPoly::operator+=(const LambdaPoly& o) {
  if (o.space_ != space_) throw Error(ErrorKind::InvalidInput, "mixing lambda-polynomial spaces");
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Poly(space_));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

LambdaPoly& LambdaPoly::operator-=(const LambdaPoly& o) {
  if (o.space_ != space_) throw Error(ErrorKind::InvalidInput, "mixing lambda-polynomial spaces");
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Poly(space_));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

LambdaPoly LambdaPoly::operator+(const LambdaPoly& o) const {
  LambdaPoly r(*this);
  r += o;
  return r;
}

LambdaPoly LambdaPoly::operator-(const LambdaPoly& o) const {
  LambdaPoly r(*this);
  r -= o;
  return r;
}

LambdaPoly LambdaPoly::operator-() const { return times(Rational(-1)); }

LambdaPoly LambdaPoly::times(const Poly& p) const {
  LambdaPoly r(space_);
  for (std::size_t k = 0; k < c_.size(); ++k) r.add(static_cast<int>(k), p * c_[k]);
  return r;
}

LambdaPoly LambdaPoly::times(const Rational& c) const {
  LambdaPoly r(*this);
  for (auto& p : r.c_) p *= c;
  r.trim();
  return r;
}

LambdaPoly LambdaPoly::shift(int k) const {
  LambdaPoly r(space_);
  if (c_.empty()) return r;
  r.c_.assign(static_cast<std::size_t>(k), Poly(space_));
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

LambdaPoly LambdaPoly::lambda_plus_d(int n) const {
  if (n == 0) return *this;
  LambdaPoly r(space_);
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    Poly d = c_[k];
    for (int i = 0; i <= n; ++i) {
      if (i > 0) d = d.derivative();
      if (d.is_zero()) break;
      r.add(n - i + static_cast<int>(k), binomial(n, i) * d);
    }
  }
  return r;
}

LambdaPoly LambdaPoly::map(Space target, const std::function<Poly(const Poly&)>& f) const {
  LambdaPoly r(target);
  for (std::size_t k = 0; k < c_.size(); ++k) r.add(static_cast<int>(k), f(c_[k]));
  return r;
}

int LambdaPoly::z_degree() const {
  int d = -1;
  for (const auto& p : c_) d = std::max(d, p.z_degree());
  return d;
}

LambdaPoly minus_lambda_minus_d(const Poly& p, int n) {
  LambdaPoly r(p.space());
  Poly d = p;
  for (int i = 0; i <= n; ++i) {
    if (i > 0) d = d.derivative();
    if (d.is_zero()) break;
    Rational c = binomial(n, i);
    if (n % 2) c = -c;
    r.add(n - i, c * d);
  }
  return r;
}

std::string render(const LambdaPoly& p, const Namer& name) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const Poly& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    std::string lam = k == 0 ? "" : (k == 1 ? "lambda" : "lambda^" + std::to_string(k));
    std::string body = render(c, name);
    if (!out.empty()) out += " + ";
    if (lam.empty()) {
      out += body;
    } else if (c.size() == 1 && c.terms().begin()->first.empty()) {
      const Rational& v = c.terms().begin()->second;
      out += v == 1 ? lam : (v == -1 ? "-" + lam : to_string(v) + "*" + lam);
    } else {
      out += "(" + body + ")*" + lam;
    }
  }
  return out;
}

}  // namespace walg
