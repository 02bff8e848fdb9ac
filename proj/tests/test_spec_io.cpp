#include <doctest.h>

#include "helpers.hpp"
#include "walg/spec_io.hpp"

using namespace walg;

namespace {

std::string field_of(const std::string& text) {
  try {
    parse_algebra_text(text);
  } catch (const Error& e) {
    return e.field();
  }
  return "<no error>";
}

/// The custom-format description of an algebra with a given triple.
Json custom_json(const LieAlgebra& alg, const Sl2Triple& t) {
  const std::size_t n = alg.dim();
  Json brackets = Json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec& b = alg.bracket_basis(i, j);
      bool zero = true;
      for (const auto& c : b)
        if (c != 0) zero = false;
      if (!zero) brackets.push_back(Json{i, j, vec_json(b)});
    }
  Json form = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < n; ++j) row.push_back(to_string(alg.form()(i, j)));
    form.push_back(row);
  }
  return Json{{"type", "custom"},       {"dim", n},
              {"brackets", brackets},   {"form", form},
              {"triple", {{"e", vec_json(t.e)}, {"h", vec_json(t.h)}, {"f", vec_json(t.f)}}}};
}

}  // namespace

TEST_SUITE("spec_io") {
  TEST_CASE("sl shorthand matches the direct construction") {
    AlgebraInput in = parse_algebra_text(R"({"type":"sl","n":3,"nilpotent":{"partition":[2,1]}})");
    GradedSetup a = make_setup(in);
    GradedSetup b = testing_helpers::sl_setup(3, {2, 1});
    CHECK(setup_json(a) == setup_json(b));
    CHECK(in.name == "sl3 [2,1]");
  }

  TEST_CASE("s = e shorthand") {
    GradedSetup a = make_setup(parse_algebra_text(R"({"type":"sl","n":4,"nilpotent":{"partition":[2,2]},"s":"e"})"));
    GradedSetup b = testing_helpers::sl4_rect();
    CHECK(a.s == b.s);
  }

  TEST_CASE("custom format round trip") {
    AlgebraInput sl = sl_input(3, {3});
    AlgebraInput custom = parse_algebra(custom_json(sl.alg, sl.triple));
    GradedSetup a = make_setup(sl), b = make_setup(custom);
    CHECK(finite_table_json(a, true, std::nullopt) == finite_table_json(b, true, std::nullopt));
    WAlgebra Wa(a), Wb(b);
    CHECK(generators_json(Wa) == generators_json(Wb));
  }

  TEST_CASE("errors name the offending field") {
    CHECK(field_of("{\"type\":\"sl\",") == "");
    CHECK(field_of("[]") == "");
    CHECK(field_of(R"({"n":3})") == "type");
    CHECK(field_of(R"({"type":"so","n":3})") == "type");
    CHECK(field_of(R"({"type":"sl","n":1,"nilpotent":{"partition":[1]}})") == "n");
    CHECK(field_of(R"({"type":"sl","n":3})") == "nilpotent");
    CHECK(field_of(R"({"type":"sl","n":3,"nilpotent":{"partition":[2,2]}})") == "nilpotent.partition");
    CHECK(field_of(R"({"type":"sl","n":3,"nilpotent":{"partition":[2,-1]}})") == "nilpotent.partition");
    CHECK(field_of(R"({"type":"sl","n":2,"nilpotent":{"partition":[2]},"s":[1,2]})") == "s");

    AlgebraInput sl = sl_input(2, {2});
    Json j = custom_json(sl.alg, sl.triple);
    Json bad = j;
    bad["brackets"][0][2] = Json::array({"1"});
    CHECK(field_of(bad.dump()) == "brackets[0][2]");
    bad = j;
    bad["brackets"][0][0] = 7;
    CHECK(field_of(bad.dump()) == "brackets[0][0]");
    bad = j;
    bad["triple"]["e"][0] = "1/0";
    CHECK(field_of(bad.dump()) == "triple.e[0]");
    bad = j;
    bad["triple"]["e"] = bad["triple"]["f"];
    CHECK(field_of(bad.dump()) == "triple");
    bad = j;
    bad.erase("form");
    CHECK(field_of(bad.dump()) == "form");
  }
}
