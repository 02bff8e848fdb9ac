#include "doctest.h"
#include "walg/poly.hpp"

using namespace walg;

namespace {

Poly v(int id, int d = 0) { return Poly::var(Space::Affine, id, d); }
Poly c(const Rational& r) { return Poly::constant(Space::Affine, r); }
std::string nm(int id) { return std::string(1, static_cast<char>('a' + id)); }
int w2(int id) { return 2 * (id + 1); }  // a has weight 1, b weight 2, ...

}  // namespace

TEST_SUITE("poly") {
  TEST_CASE("total derivative") {
    CHECK(c(5).derivative().is_zero());
    CHECK((v(0) * v(1)).derivative() == v(0, 1) * v(1) + v(0) * v(1, 1));
    CHECK((v(0) * v(0)).derivative() == Rational(2) * v(0) * v(0, 1));
    CHECK(v(2, 3).derivative(2) == v(2, 5));
    CHECK(Poly::z(Space::Affine).derivative().is_zero());
    Poly p = v(0) * v(1, 2) + frac(3, 2) * v(2) * v(1);
    auto w = conformal_weight2(p, w2);
    REQUIRE(w.has_value());
    CHECK(conformal_weight2(p.derivative(), w2) == *w + 2);
  }

  TEST_CASE("conformal weight") {
    CHECK(conformal_weight2(v(1), w2) == 4);
    CHECK(conformal_weight2(v(0, 1), w2) == 4);
    CHECK_FALSE(conformal_weight2(v(0) + v(0) * v(0), w2).has_value());
    CHECK(conformal_weight2(Poly(Space::Affine), w2) == 0);
    CHECK(conformal_weight2(Poly::z(Space::Affine) * v(0), w2, 3) == 5);
  }

  TEST_CASE("partial derivatives and z handling") {
    Poly z = Poly::z(Space::Affine);
    Poly p = v(0) * v(0) * v(1, 1) + z * v(0);
    CHECK(p.partial(make_var(0)) == Rational(2) * v(0) * v(1, 1) + z);
    CHECK(p.partial(make_var(1, 1)) == v(0) * v(0));
    CHECK(p.z_degree() == 1);
    CHECK(p.z_coefficient(1) == v(0));
    CHECK(p.at_z(2) == v(0) * v(0) * v(1, 1) + Rational(2) * v(0));
    CHECK(p.variables() == std::set<VarKey>{make_var(0), make_var(1, 1)});
  }

  TEST_CASE("spaces do not mix") {
    Poly a = Poly::var(Space::W, 0);
    CHECK_THROWS_AS(a + v(0), Error);
    CHECK_THROWS_AS(a * v(0), Error);
  }

  TEST_CASE("substitution is a differential algebra homomorphism") {
    auto img = [](int id) { return id == 0 ? v(1) * v(1) + c(1) : v(0, 1); };
    Poly p = v(0) * v(1) + v(0, 1);
    Poly lhs = substitute(p.derivative(), Space::Affine, img);
    Poly rhs = substitute(p, Space::Affine, img).derivative();
    CHECK(lhs == rhs);
    Poly q = v(1, 2);
    CHECK(substitute(p * q, Space::Affine, img) ==
          substitute(p, Space::Affine, img) * substitute(q, Space::Affine, img));
  }

  TEST_CASE("rendering") {
    Poly p = frac(3, 2) * v(0, 1) * v(0) + v(1, 2);
    CHECK(render(p, nm) == "3/2*a*a' + b''");
    CHECK(render(v(0) * v(0) - c(1), nm) == "-1 + a^2");
    CHECK(render(Poly(Space::Affine), nm) == "0");
    LambdaPoly l(v(0).derivative());
    l.add(1, Rational(2) * v(0));
    l.add(3, c(frac(-1, 2)));
    CHECK(render(l, nm) == "-1/2*lambda^3 + (2*a)*lambda + a'");
  }

  TEST_CASE("lambda shifts") {
    // (lambda + d)^2 a = lambda^2 a + 2 lambda a' + a''
    LambdaPoly l(v(0));
    LambdaPoly r = l.lambda_plus_d(2);
    CHECK(r.coeff(2) == v(0));
    CHECK(r.coeff(1) == Rational(2) * v(0, 1));
    CHECK(r.coeff(0) == v(0, 2));
    // (-lambda - d) a = -lambda a - a'
    LambdaPoly m = minus_lambda_minus_d(v(0), 1);
    CHECK(m.coeff(1) == -v(0));
    CHECK(m.coeff(0) == -v(0, 1));
    CHECK(LambdaPoly(Space::Affine).degree() == -1);
    LambdaPoly t = l - l;
    CHECK(t.is_zero());
  }
}
