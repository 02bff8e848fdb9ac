#include "walg/spec_io.hpp"

#include <fstream>
#include <sstream>

namespace walg {

namespace {

Rational rational_field(const Json& j, const std::string& field) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
      throw Error(ErrorKind::InvalidInput, e.what(), field);
    }
  }
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw Error(ErrorKind::InvalidInput, "expected a rational string \"p/q\"", field);
}

Vec vec_field(const Json& j, std::size_t dim, const std::string& field) {
  if (!j.is_array()) throw Error(ErrorKind::InvalidInput, "expected an array of rationals", field);
  if (j.size() != dim) throw Error(ErrorKind::InvalidInput, "expected " + std::to_string(dim) + " coordinates", field);
  Vec v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = rational_field(j[i], field + "[" + std::to_string(i) + "]");
  return v;
}

const Json& member(const Json& j, const std::string& key, const std::string& field) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::InvalidInput, "missing field", field);
  return j.at(key);
}

std::size_t index_field(const Json& j, std::size_t dim, const std::string& field) {
  if (!j.is_number_integer() || j.get<long>() < 0 || static_cast<std::size_t>(j.get<long>()) >= dim)
    throw Error(ErrorKind::InvalidInput, "expected a basis index in [0, dim)", field);
  return static_cast<std::size_t>(j.get<long>());
}

// "default" lets the setup choose; "e" selects the nilpositive element.
std::optional<Vec> s_field(const Json& j, std::size_t dim, const Vec& e) {
  if (!j.contains("s")) return std::nullopt;
  const Json& s = j.at("s");
  if (s.is_string() && s.get<std::string>() == "default") return std::nullopt;
  if (s.is_string() && s.get<std::string>() == "e") return e;
  return vec_field(s, dim, "s");
}

}  // namespace

AlgebraInput sl_input(int n, const std::vector<int>& partition, const std::optional<Vec>& s) {
  LieAlgebra alg = build_sl(n);
  Sl2Triple t = sl2_triple_from_partition(alg, partition);
  std::string name = "sl" + std::to_string(n) + " [";
  for (std::size_t i = 0; i < partition.size(); ++i) name += (i ? "," : "") + std::to_string(partition[i]);
  return AlgebraInput{std::move(alg), std::move(t), s, name + "]"};
}

AlgebraInput parse_algebra(const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::InvalidInput, "algebra spec must be a JSON object", "");
  const Json& type = member(j, "type", "type");
  if (!type.is_string()) throw Error(ErrorKind::InvalidInput, "expected \"sl\" or \"custom\"", "type");
  const std::string kind = type.get<std::string>();
  if (kind == "sl") {
    const Json& n = member(j, "n", "n");
    if (!n.is_number_integer() || n.get<long>() < 2 || n.get<long>() > 12)
      throw Error(ErrorKind::InvalidInput, "n must be an integer in [2, 12]", "n");
    const Json& part = member(member(j, "nilpotent", "nilpotent"), "partition", "nilpotent.partition");
    if (!part.is_array()) throw Error(ErrorKind::InvalidInput, "expected an array of positive integers", "nilpotent.partition");
    std::vector<int> p;
    for (const auto& x : part) {
      if (!x.is_number_integer() || x.get<long>() <= 0)
        throw Error(ErrorKind::InvalidInput, "expected an array of positive integers", "nilpotent.partition");
      p.push_back(x.get<int>());
    }
    const int dim = n.get<int>() * n.get<int>() - 1;
    try {
      AlgebraInput in = sl_input(n.get<int>(), p);
      in.s = s_field(j, static_cast<std::size_t>(dim), in.triple.e);
      return in;
    } catch (const Error& e) {
      if (e.field() == "partition") throw Error(e.kind(), e.what(), "nilpotent.partition");
      throw;
    }
  }
  if (kind != "custom") throw Error(ErrorKind::InvalidInput, "expected \"sl\" or \"custom\"", "type");

  const Json& dj = member(j, "dim", "dim");
  if (!dj.is_number_integer() || dj.get<long>() <= 0) throw Error(ErrorKind::InvalidInput, "dim must be a positive integer", "dim");
  LieSpec spec;
  spec.dim = dj.get<std::size_t>();
  if (j.contains("labels")) {
    const Json& l = j.at("labels");
    if (!l.is_array() || l.size() != spec.dim) throw Error(ErrorKind::InvalidInput, "expected dim label strings", "labels");
    for (const auto& s : l) {
      if (!s.is_string()) throw Error(ErrorKind::InvalidInput, "expected dim label strings", "labels");
      spec.labels.push_back(s.get<std::string>());
    }
  }
  const Json& br = member(j, "brackets", "brackets");
  if (!br.is_array()) throw Error(ErrorKind::InvalidInput, "expected an array of [i, j, [coeffs]]", "brackets");
  for (std::size_t k = 0; k < br.size(); ++k) {
    const std::string field = "brackets[" + std::to_string(k) + "]";
    const Json& e = br[k];
    if (!e.is_array() || e.size() != 3) throw Error(ErrorKind::InvalidInput, "expected [i, j, [coeffs]]", field);
    spec.brackets.push_back({index_field(e[0], spec.dim, field + "[0]"), index_field(e[1], spec.dim, field + "[1]"),
                             vec_field(e[2], spec.dim, field + "[2]")});
  }
  const Json& form = member(j, "form", "form");
  if (!form.is_array() || form.size() != spec.dim) throw Error(ErrorKind::InvalidInput, "expected a dim x dim matrix", "form");
  spec.form = Matrix(spec.dim, spec.dim);
  for (std::size_t r = 0; r < spec.dim; ++r) {
    Vec row = vec_field(form[r], spec.dim, "form[" + std::to_string(r) + "]");
    for (std::size_t c = 0; c < spec.dim; ++c) spec.form(r, c) = row[c];
  }
  LieAlgebra alg = build_from_spec(spec);
  const Json& tj = member(j, "triple", "triple");
  Sl2Triple t = make_triple(vec_field(member(tj, "e", "triple.e"), spec.dim, "triple.e"),
                            vec_field(member(tj, "h", "triple.h"), spec.dim, "triple.h"),
                            vec_field(member(tj, "f", "triple.f"), spec.dim, "triple.f"));
  try {
    validate_triple(alg, t);
  } catch (const Error& e) {
    throw Error(e.kind(), e.what(), "triple");
  }
  std::string name = j.contains("name") && j.at("name").is_string() ? j.at("name").get<std::string>() : "custom";
  AlgebraInput in{std::move(alg), std::move(t), std::nullopt, name};
  in.s = s_field(j, spec.dim, in.triple.e);
  return in;
}

AlgebraInput parse_algebra_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what(), "");
  }
  return parse_algebra(j);
}

AlgebraInput load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot read algebra file " + path, "algebra");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_algebra_text(ss.str());
}

GradedSetup make_setup(const AlgebraInput& in) { return graded_setup(in.alg, in.triple, in.s); }

Json vec_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(to_string(c));
  return out;
}

Json report_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json e{{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) e["detail"] = c.detail;
    checks.push_back(std::move(e));
  }
  return Json{{"title", r.title}, {"passed", r.ok()}, {"checks", std::move(checks)}};
}

Json lambda_json(const LambdaPoly& l, const Namer& name) {
  Json out = Json::array();
  for (const auto& c : l.coeffs()) {
    Json split = Json::array();
    for (int k = 0; k <= std::max(0, c.z_degree()); ++k) split.push_back(render(c.z_coefficient(k), name));
    out.push_back(std::move(split));
  }
  return out;
}

Json setup_json(const GradedSetup& st) {
  Json grades = Json::array();
  for (const auto& [k2, basis] : st.eigenspaces) grades.push_back(Json{{"grade2", k2}, {"dim", basis.size()}});
  Json jf = Json::array();
  for (std::size_t j = 0; j < st.nf(); ++j)
    jf.push_back(Json{{"j", j + 1}, {"delta2", st.delta2[j]}, {"q", vec_json(st.qj[j])}, {"q_dual", vec_json(st.qjup[j])}});
  Json labels = Json::array();
  for (const auto& l : st.alg.labels()) labels.push_back(l);
  return Json{{"dim", st.dim()}, {"labels", labels}, {"depth2", st.depth2}, {"grades", grades},
              {"jf", jf}, {"s", vec_json(st.s)}};
}

Json finite_table_json(const GradedSetup& st, bool formal_z, const std::optional<Rational>& z) {
  Json out = Json::array();
  const Namer name = slice_namer();
  for (std::size_t i = 0; i < st.nf(); ++i)
    for (std::size_t j = 0; j < st.nf(); ++j) {
      Poly p = finite_bracket(st, st.qj[i], st.qj[j], formal_z ? std::nullopt : std::optional<Rational>(z.value_or(0)));
      out.push_back(Json{{"pair", {i + 1, j + 1}}, {"bracket", render(p, name)}});
    }
  return out;
}

Json generators_json(const WAlgebra& W) {
  Json out = Json::array();
  const Namer name = W.affine().namer();
  for (std::size_t j = 0; j < W.size(); ++j) {
    const WGenerator& g = W.generator(j);
    out.push_back(Json{{"j", j + 1},
                       {"weight2", g.weight2},
                       {"w", render(g.w, name)},
                       {"linear_term", render(g.linear, name)},
                       {"ansatz_size", g.ansatz_size}});
  }
  return out;
}

Json zhu_table_json(const WAlgebra& W) {
  Json out = Json::array();
  const Namer name = W.namer();
  for (std::size_t i = 0; i < W.size(); ++i)
    for (std::size_t j = 0; j < W.size(); ++j) {
      const Poly p = zhu_bracket_closed(W, i, j);
      Json zp = Json::array();
      for (int k = 0; k <= std::max(0, p.z_degree()); ++k) zp.push_back(render(p.z_coefficient(k), name));
      out.push_back(Json{{"pair", {i + 1, j + 1}}, {"z_poly", std::move(zp)}});
    }
  return out;
}

Json miura_json(const WAlgebra& W) {
  Json out = Json::array();
  const Namer name = W.affine().namer();
  for (std::size_t j = 0; j < W.size(); ++j) out.push_back(Json{{"j", j + 1}, {"mu", render(miura(W, W.w(j)), name)}});
  return out;
}

std::string report_text(const Report& r) {
  std::ostringstream os;
  os << r.title << "\n";
  for (const auto& c : r.checks) {
    os << "  " << (c.passed ? "PASS" : "FAIL") << "  " << c.name;
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    os << "\n";
  }
  return os.str();
}

}  // namespace walg
