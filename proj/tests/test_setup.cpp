#include "doctest.h"
#include "helpers.hpp"
#include "walg/setup.hpp"

#include <map>
#include <random>

using namespace walg;
using testing_helpers::sl_setup;

namespace {

std::map<int, std::size_t> grade_dims(const GradedSetup& st) {
  std::map<int, std::size_t> d;
  for (const auto& [k2, b] : st.eigenspaces) d[k2] = b.size();
  return d;
}

Vec random_vec(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
  Vec v(n);
  for (auto& x : v) x = frac(num(rng), den(rng));
  return v;
}

}  // namespace

TEST_SUITE("setup") {
  TEST_CASE("sl2 principal grading") {
    GradedSetup st = sl_setup(2, {2});
    CHECK(grade_dims(st) == std::map<int, std::size_t>{{-2, 1}, {0, 1}, {2, 1}});
    REQUIRE(st.nf() == 1);
    CHECK(st.delta2[0] == 2);
    CHECK(st.depth2 == 2);
    CHECK(st.s == st.triple.e);
    // lower basis: f, -x, -e/2
    CHECK(st.lower[0] == st.triple.f);
    CHECK(st.lower[1] == Rational(-1) * st.triple.x);
    CHECK(st.lower[2] == frac(-1, 2) * st.triple.e);
  }

  TEST_CASE("sl3 principal and minimal grading") {
    GradedSetup p = sl_setup(3, {3});
    CHECK(grade_dims(p) == std::map<int, std::size_t>{{-4, 1}, {-2, 2}, {0, 2}, {2, 2}, {4, 1}});
    CHECK(p.delta2 == std::vector<int>{2, 4});
    // e = 2E12 + 2E23 gives g_d spanned by E13.
    CHECK(p.s == testing_helpers::elementary(3, 1, 3));

    GradedSetup m = sl_setup(3, {2, 1});
    CHECK(m.nf() == 4);
    CHECK(m.nf() == 8 - rank(m.alg.ad(m.triple.f)));
    CHECK(m.delta2 == std::vector<int>{0, 1, 1, 2});
  }

  TEST_CASE("g_d of dimension > 1 requires an explicit s") {
    LieAlgebra sl4 = build_sl(4);
    Sl2Triple t = sl2_triple_from_partition(sl4, {2, 2});
    CHECK_THROWS_AS(graded_setup(sl4, t), Error);
    GradedSetup st = graded_setup(sl4, t, t.e);
    CHECK(st.s == t.e);
    CHECK_THROWS_AS(graded_setup(sl4, t, t.f), Error);
  }

  TEST_CASE("projections") {
    std::mt19937 rng(1);
    for (auto st : {sl_setup(2, {2}), sl_setup(3, {3}), sl_setup(3, {2, 1})}) {
      for (const auto& q : st.qj) CHECK(project(st, q, Projection::Gf) == q);
      for (int t = 0; t < 5; ++t) {
        Vec a = random_vec(rng, st.dim());
        CHECK(project(st, a, Projection::Gf) + project(st, a, Projection::EBracket) == a);
        CHECK(project(st, a, Projection::Ge) + project(st, a, Projection::FBracket) == a);
        CHECK(is_zero(st.alg.bracket(st.triple.f, project(st, a, Projection::Gf))));
        CHECK(is_zero(st.alg.bracket(st.triple.e, project(st, a, Projection::Ge))));
      }
    }
    GradedSetup sl2 = sl_setup(2, {2});
    CHECK(is_zero(project(sl2, sl2.triple.e, Projection::Gf)));
    CHECK(project(sl2, sl2.triple.e, Projection::EBracket) == sl2.triple.e);
    CHECK_THROWS_AS(project(sl2, Vec{1, 2}, Projection::Gf), Error);
  }

  TEST_CASE("inverse of ad f on [f,g]") {
    std::mt19937 rng(2);
    for (auto st : {sl_setup(2, {2}), sl_setup(3, {3}), sl_setup(3, {2, 1}), testing_helpers::sl4_rect()}) {
      for (const auto& v : st.qjup) CHECK(is_zero(ad_f_inverse_pi(st, v)));
      for (int t = 0; t < 5; ++t) {
        Vec a = random_vec(rng, st.dim());
        Vec out = ad_f_inverse_pi(st, a);
        CHECK(st.alg.bracket(st.triple.f, out) == project(st, a, Projection::FBracket));
        CHECK(project(st, out, Projection::EBracket) == out);
      }
    }
    GradedSetup sl2 = sl_setup(2, {2});
    Vec out = ad_f_inverse_pi(sl2, sl2.triple.f);
    CHECK(sl2.alg.bracket(sl2.triple.f, out) == project(sl2, sl2.triple.f, Projection::FBracket));
  }

  TEST_CASE("validate_setup passes on the test algebras") {
    for (auto st : {sl_setup(2, {2}), sl_setup(3, {3}), sl_setup(3, {2, 1}), sl_setup(4, {4}),
                    sl_setup(4, {3, 1}), sl_setup(4, {2, 1, 1}), testing_helpers::sl4_rect()}) {
      Report r = validate_setup(st);
      for (const auto& c : r.checks) CHECK_MESSAGE(c.passed, c.name << " " << c.detail);
    }
    Report principal = validate_setup(sl_setup(3, {3}));
    bool has_direct = false;
    for (const auto& c : principal.checks) has_direct |= c.name.find("principal") != std::string::npos;
    CHECK(has_direct);
    Report minimal = validate_setup(sl_setup(3, {2, 1}));
    for (const auto& c : minimal.checks) CHECK(c.name.find("principal") == std::string::npos);
  }

  TEST_CASE("grade bookkeeping") {
    GradedSetup st = sl_setup(3, {2, 1});
    for (std::size_t p = 0; p < st.index.size(); ++p) {
      CHECK(st.grade2_of(st.upper[p]) == st.upper_grade2(p));
      CHECK(st.grade2_of(st.lower[p]) == st.lower_grade2(p));
    }
    CHECK_FALSE(st.grade2_of(st.triple.e + st.triple.f).has_value());
    CHECK(st.grade_component(st.triple.e + st.triple.f, 2) == st.triple.e);
  }
}
