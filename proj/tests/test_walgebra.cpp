#include <doctest.h>

#include "helpers.hpp"
#include "walg/walgebra.hpp"

using namespace walg;
using testing_helpers::sl_setup;

namespace {

Poly u(int p, int d = 0) { return Poly::var(Space::Affine, p, d); }

/// Substitutes w_i -> w_i + z (zeta|q_i) in every lambda coefficient.
LambdaPoly shift_by_zeta(const WAlgebra& W, const LambdaPoly& l, const Vec& zeta) {
  const GradedSetup& st = W.setup();
  return l.map(Space::W, [&](const Poly& p) {
    return substitute(p, Space::W, [&](int i) {
      return W.w(static_cast<std::size_t>(i)) + st.alg.pair(zeta, st.qj[static_cast<std::size_t>(i)]) * Poly::z(Space::W);
    });
  });
}

void check_routes(const GradedSetup& st) {
  WAlgebra W(st);
  for (std::size_t i = 0; i < W.size(); ++i)
    for (std::size_t j = 0; j < W.size(); ++j) {
      CAPTURE(i);
      CAPTURE(j);
      LambdaPoly direct = W.bracket_direct(i, j);
      CHECK(direct == W.bracket_closed(i, j));
      CHECK(direct == W.bracket_skewform(i, j));
      CHECK(direct.z_degree() <= 1);
    }
}

}  // namespace

TEST_SUITE("walgebra") {
  TEST_CASE("sl2 generator is f + x' + x^2") {
    GradedSetup st = sl_setup(2, {2});
    AffinePva v(st);
    // lower basis f, -x, -e/2: x = -u1.
    CHECK(linear_term(v, 0) == -u(1, 1));
    WGenerator g = solve_generator(v, 0);
    CHECK(g.w == u(0) - u(1, 1) + u(1) * u(1));
    CHECK(g.linear == -u(1, 1));
    CHECK(g.weight2 == 4);
  }

  TEST_CASE("membership and projection") {
    GradedSetup st = sl_setup(2, {2});
    WAlgebra W(st);
    CHECK(W.is_in_w(Poly::constant(Space::Affine, 3)));
    CHECK_FALSE(W.is_in_w(u(0)));
    CHECK(W.is_in_w(W.generator(0).w));
    CHECK_THROWS_AS(W.pi_to_w(u(0), true), Error);
    CHECK(W.pi_to_w(W.generator(0).w, true) == W.w(0));

    GradedSetup st3 = sl_setup(3, {2, 1});
    WAlgebra W3(st3);
    for (std::size_t j = 0; j < W3.size(); ++j) {
      CHECK(W3.is_in_w(W3.generator(j).w));
      CHECK(W3.pi_to_w(W3.generator(j).w, true) == W3.w(j));
    }
    Poly sample = W3.w(0) * W3.w(1, 1) + frac(2, 3) * W3.w(2, 2) + W3.w(3) * W3.w(3) * W3.w(0);
    Poly expanded = W3.expand(sample);
    CHECK(W3.is_in_w(expanded));
    CHECK(W3.pi_to_w(expanded, true) == sample);
  }

  TEST_CASE("generators are weight homogeneous") {
    GradedSetup st = sl_setup(3, {2, 1});
    WAlgebra W(st);
    for (std::size_t j = 0; j < W.size(); ++j) {
      auto wt = conformal_weight2(W.generator(j).w, [&](int p) { return W.affine().weight2(p); });
      CHECK(wt == W.weight2(j));
    }
  }

  TEST_CASE("weight zero generators have no linear term") {
    GradedSetup st = sl_setup(3, {2, 1});
    AffinePva v(st);
    for (std::size_t j = 0; j < st.nf(); ++j)
      if (st.delta2[j] == 0) CHECK(linear_term(v, j).is_zero());
  }

  TEST_CASE("Delta = 3/2 linear term") {
    GradedSetup st = sl_setup(3, {2, 1});
    AffinePva v(st);
    for (std::size_t j0 = 0; j0 < st.nf(); ++j0) {
      if (st.delta2[j0] != 1) continue;
      Poly expect = -u(static_cast<int>(st.position(j0, 1)), 1);
      for (std::size_t p = 0; p < st.index.size(); ++p) {
        if (st.upper_grade2(p) != 1) continue;
        Vec c = st.sharp_coords(st.alg.bracket(st.qj[j0], st.upper[p]));
        for (std::size_t j = 0; j < c.size(); ++j)
          if (c[j] != 0) expect += c[j] * (u(static_cast<int>(st.position(j, 0))) * u(static_cast<int>(p + 1)));
      }
      CHECK(linear_term(v, j0) == expect);
    }
  }

  TEST_CASE("sl2 Virasoro bracket") {
    GradedSetup st = sl_setup(2, {2});
    WAlgebra W(st);
    LambdaPoly b = W.bracket_direct(0, 0);
    // (d + 2 lambda) w - 1/2 lambda^3 + 2 z lambda, with (s|f) = 1.
    LambdaPoly expect(W.w(0, 1));
    expect.add(1, Rational(2) * W.w(0) + Rational(2) * Poly::z(Space::W));
    expect.add(3, Poly::constant(Space::W, frac(-1, 2)));
    CHECK(b == expect);
  }

  TEST_CASE("three routes agree") {
    check_routes(sl_setup(2, {2}));
    check_routes(sl_setup(3, {2, 1}));
    check_routes(sl_setup(3, {3}));
    check_routes(testing_helpers::sl4_rect());
  }

  TEST_CASE("special cases on sl3 minimal") {
    GradedSetup st = sl_setup(3, {2, 1});
    WAlgebra W(st);
    for (std::size_t i = 0; i < W.size(); ++i)
      for (std::size_t j = 0; j < W.size(); ++j) {
        CAPTURE(i);
        CAPTURE(j);
        if (st.delta2[i] == 0 || st.delta2[j] == 0)
          CHECK(W.bracket_direct(i, j) == weight_one_formula(W, st.qj[i], st.qj[j]));
        if (st.delta2[i] == 1 && st.delta2[j] == 1)
          CHECK(W.bracket_direct(i, j) == weight_three_halves_formula(W, st.qj[i], st.qj[j]));
      }
    const Poly wf = W.w_of(st.triple.f);
    for (std::size_t j = 0; j < W.size(); ++j) CHECK(W.bracket(wf, W.w(j)) == wf_formula(W, j));
  }

  TEST_CASE("Virasoro checks") {
    for (auto st : {sl_setup(2, {2}), sl_setup(3, {2, 1}), sl_setup(3, {3})}) {
      WAlgebra W(st);
      Virasoro v = virasoro(W);
      for (const auto& c : v.checks.checks) CHECK_MESSAGE(c.passed, c.name);
    }
  }

  TEST_CASE("W PVA axioms") {
    for (auto st : {sl_setup(2, {2}), sl_setup(3, {2, 1})}) {
      WAlgebra W(st);
      Report r = w_pva_axioms(W);
      for (const auto& c : r.checks) CHECK_MESSAGE(c.passed, (c.name + " " + c.detail));
    }
  }

  TEST_CASE("zeta deformation is the shift automorphism") {
    GradedSetup st = sl_setup(3, {2, 1});
    WAlgebra W(st);
    const Vec zero = zero_vec(st.dim());
    for (const Vec& zeta : st.qjup)
      for (std::size_t i = 0; i < W.size(); ++i)
        for (std::size_t j = 0; j < W.size(); ++j) {
          CAPTURE(i);
          CAPTURE(j);
          CHECK(W.bracket_closed(i, j, zeta) == shift_by_zeta(W, W.bracket_closed(i, j, zero), zeta));
        }
    CHECK_THROWS_AS(W.bracket_closed(0, 0, st.triple.f), Error);
  }
}
