#include <doctest.h>

#include "helpers.hpp"
#include "walg/miura.hpp"

using namespace walg;
using testing_helpers::sl_setup;

TEST_SUITE("miura") {
  TEST_CASE("tensor brackets") {
    GradedSetup st = sl_setup(3, {2, 1});
    AffinePva v(st);
    std::vector<int> half, zero;
    for (std::size_t p = 0; p < v.size(); ++p) {
      const int g = v.grade2(static_cast<int>(p));
      if (g == 1) half.push_back(static_cast<int>(p));
      if (g == 0) zero.push_back(static_cast<int>(p));
    }
    REQUIRE(half.size() == 2);
    for (int a : zero)
      for (int c : half) {
        CHECK(tensor_bracket_gen(v, a, c).is_zero());
        CHECK(tensor_bracket_gen(v, c, a).is_zero());
      }
    for (int c : half)
      for (int d : half) {
        LambdaPoly l = tensor_bracket_gen(v, c, d);
        const Rational expect = -st.alg.pair(st.triple.f, st.alg.bracket(st.lower[static_cast<std::size_t>(c)], st.lower[static_cast<std::size_t>(d)]));
        CHECK(l.degree() <= 0);
        CHECK(l.coeff(0) == Poly::constant(Space::Tensor, expect));
        CHECK(l == -tensor_bracket_gen(v, d, c));
      }
  }

  TEST_CASE("sl2 classical Miura map") {
    GradedSetup st = sl_setup(2, {2});
    WAlgebra W(st);
    // x = -u1 with (x|x) = 1/2: mu(L) = x' + x^2.
    const Poly x = -Poly::var(Space::Tensor, 1);
    CHECK(miura(W, W.w(0)) == x.derivative() + x * x);
    CHECK(miura_virasoro_formula(W) == x.derivative() + x * x);
  }

  TEST_CASE("mu(L) formula") {
    for (auto st : {sl_setup(2, {2}), sl_setup(3, {2, 1}), sl_setup(3, {3}), testing_helpers::sl4_rect()}) {
      WAlgebra W(st);
      CHECK(miura(W, virasoro(W).L) == miura_virasoro_formula(W));
    }
  }

  TEST_CASE("differential algebra homomorphism") {
    GradedSetup st = sl_setup(3, {2, 1});
    WAlgebra W(st);
    Poly p = W.w(1) * W.w(2, 1), q = W.w(3) + W.w(0) * W.w(0);
    CHECK(miura(W, p.derivative()) == miura(W, p).derivative());
    CHECK(miura(W, p * q) == miura(W, p) * miura(W, q));
    CHECK(miura(W, Poly::constant(Space::W, 5)) == Poly::constant(Space::Tensor, 5));
  }

  TEST_CASE("homomorphism report") {
    for (auto st : {sl_setup(2, {2}), sl_setup(3, {2, 1}), sl_setup(3, {3})}) {
      WAlgebra W(st);
      Report r = miura_hom_check(W);
      for (const auto& c : r.checks) CHECK_MESSAGE(c.passed, (c.name + " " + c.detail));
    }
  }

  TEST_CASE("sl2 tensor Virasoro bracket") {
    GradedSetup st = sl_setup(2, {2});
    WAlgebra W(st);
    const Poly mL = miura(W, W.w(0));
    LambdaPoly b = master_bracket(tensor_gen_fn(W.affine()), mL, mL);
    LambdaPoly expect(mL.derivative());
    expect.add(1, Rational(2) * mL);
    expect.add(3, Poly::constant(Space::Tensor, frac(-1, 2)));
    CHECK(b == expect);
  }
}
