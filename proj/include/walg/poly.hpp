#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "walg/rational.hpp"

namespace walg {

/// Which generating set a polynomial is written in. Mixing spaces is an error.
enum class Space {
  Affine,  // adapted basis of g (the lower basis q_j^n), also used for V(g_{<=1/2})
  W,       // W-algebra generators w_j
  Slice,   // g^f coordinates q_j of the Slodowy slice
  Tensor,  // g_0 (+) g_{1/2} for the Miura target
};
const char* to_string(Space s);

/// A derivative variable v_id^{(deriv)} packed into one word so that the
/// natural order is (id, deriv). Id -1 is reserved for the formal parameter z,
/// which is constant under the derivation.
using VarKey = std::uint32_t;
constexpr VarKey make_var(int id, int deriv = 0) {
  return (static_cast<VarKey>(id + 1) << 8) | static_cast<VarKey>(deriv);
}
constexpr int var_id(VarKey k) { return static_cast<int>(k >> 8) - 1; }
constexpr int var_deriv(VarKey k) { return static_cast<int>(k & 0xffu); }
constexpr VarKey kZ = 0;
constexpr int kMaxDeriv = 255;

/// Sorted multiset of variables.
using Monomial = std::vector<VarKey>;
Monomial mono_mul(const Monomial& a, const Monomial& b);

/// Sparse differential polynomial with rational coefficients.
class Poly {
 public:
  using Terms = std::map<Monomial, Rational>;

  explicit Poly(Space space = Space::Affine) : space_(space) {}
  static Poly constant(Space space, const Rational& c);
  static Poly var(Space space, int id, int deriv = 0);
  static Poly z(Space space);

  Space space() const { return space_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Monomial& m, const Rational& c);
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const { return coefficient({}); }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  bool operator==(const Poly& o) const { return space_ == o.space_ && terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  /// Total derivative: v^{(m)} -> v^{(m+1)}, Leibniz on products, z' = 0.
  Poly derivative(int times = 1) const;
  /// Partial derivative with respect to one derivative variable.
  Poly partial(VarKey v) const;

  /// All variables except z.
  std::set<VarKey> variables() const;
  int z_degree() const;
  /// Coefficient of z^k, with z removed.
  Poly z_coefficient(int k) const;
  /// Evaluate z at a rational value.
  Poly at_z(const Rational& value) const;

  /// Same terms reinterpreted in another space (variable ids unchanged).
  Poly relabel(Space target) const;
  /// Keeps the terms whose monomial satisfies pred.
  Poly filter(const std::function<bool(const Monomial&)>& pred) const;

 private:
  void check_space(const Poly& o) const;
  Space space_;
  Terms terms_;
};

inline Poly operator*(const Rational& c, Poly p) {
  p *= c;
  return p;
}

/// Differential algebra homomorphism into `target` given by the images of the
/// underived variables: v^{(m)} -> d^m image(v). z maps to z.
Poly substitute(const Poly& p, Space target, const std::function<Poly(int id)>& image);
/// Like substitute but the image is given per derivative variable.
Poly substitute_keys(const Poly& p, Space target, const std::function<Poly(VarKey)>& image);

/// Doubled conformal weight: var_weight2(id) + 2*deriv per factor; z has
/// weight z_weight2. Returns nullopt for inhomogeneous input; the zero
/// polynomial is assigned weight 0.
std::optional<int> conformal_weight2(const Poly& p, const std::function<int(int)>& var_weight2, int z_weight2 = 0);

using Namer = std::function<std::string(int id)>;
/// Canonical text form, e.g. "3/2*x'*x + f''"; z prints as "z".
std::string render(const Poly& p, const Namer& name);

/// Polynomial in lambda with Poly coefficients.
class LambdaPoly {
 public:
  explicit LambdaPoly(Space space = Space::Affine) : space_(space) {}
  explicit LambdaPoly(const Poly& p) : space_(p.space()) { set(0, p); }
  static LambdaPoly lambda_power(Space space, int k, const Rational& c = 1);

  Space space() const { return space_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<Poly>& coeffs() const { return c_; }
  Poly coeff(int k) const;
  void set(int k, const Poly& p);
  void add(int k, const Poly& p);

  LambdaPoly& operator+=(const LambdaPoly& o);
  LambdaPoly& operator-=(const LambdaPoly& o);
  LambdaPoly operator+(const LambdaPoly& o) const;
  LambdaPoly operator-(const LambdaPoly& o) const;
  LambdaPoly operator-() const;
  bool operator==(const LambdaPoly& o) const { return space_ == o.space_ && c_ == o.c_; }
  bool operator!=(const LambdaPoly& o) const { return !(*this == o); }

  /// Multiply every coefficient on the left by p.
  LambdaPoly times(const Poly& p) const;
  LambdaPoly times(const Rational& c) const;
  /// Multiply by lambda^k.
  LambdaPoly shift(int k) const;
  /// (lambda + d)^n applied to this, d acting on the coefficients.
  LambdaPoly lambda_plus_d(int n) const;
  /// Apply a map coefficient-wise; the images live in `target`.
  LambdaPoly map(Space target, const std::function<Poly(const Poly&)>& f) const;

  int z_degree() const;

 private:
  void trim();
  Space space_;
  std::vector<Poly> c_;
};

/// (-lambda - d)^n p.
LambdaPoly minus_lambda_minus_d(const Poly& p, int n);

std::string render(const LambdaPoly& p, const Namer& name);

}  // namespace walg
