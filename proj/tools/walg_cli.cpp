#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "walg/spec_io.hpp"
#include "walg/verify.hpp"

using namespace walg;

namespace {

constexpr const char* kSchema = "walgebra/1";

struct RunConfig {
  std::string algebra;
  std::string out;
  std::string format = "json";
  std::string z = "formal";
  std::string zeta;
  std::string route = "closed";
  bool cross_check = false;
  unsigned jobs = 1;
};

std::optional<Rational> z_value(const RunConfig& cfg) {
  if (cfg.z == "formal") return std::nullopt;
  try {
    return parse_rational(cfg.z);
  } catch (const Error& e) {
    throw Error(ErrorKind::InvalidInput, e.what(), "z");
  }
}

Vec parse_zeta(const std::string& text, std::size_t dim) {
  std::string s = text;
  for (char& c : s)
    if (c == ',' || c == '[' || c == ']') c = ' ';
  std::istringstream is(s);
  Vec v;
  std::string tok;
  while (is >> tok) {
    try {
      v.push_back(parse_rational(tok));
    } catch (const Error& e) {
      throw Error(ErrorKind::InvalidInput, e.what(), "zeta");
    }
  }
  if (v.size() != dim) throw Error(ErrorKind::InvalidInput, "expected " + std::to_string(dim) + " coordinates", "zeta");
  return v;
}

GradedSetup load_setup(const RunConfig& cfg) {
  if (cfg.algebra.empty()) throw Error(ErrorKind::InvalidInput, "--algebra is required", "algebra");
  return make_setup(load_algebra(cfg.algebra));
}

// Text rendering: one "path: value" line per scalar leaf.
void flatten(const Json& j, const std::string& path, std::ostream& os) {
  if (j.is_object() && j.contains("name") && j.contains("passed")) {
    os << (j["passed"].get<bool>() ? "PASS  " : "FAIL  ") << j["name"].get<std::string>();
    if (j.contains("detail")) os << "  (" << j["detail"].get<std::string>() << ")";
    os << "\n";
  } else if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, os);
  } else if (j.is_array()) {
    bool scalars = true;
    for (const auto& v : j)
      if (v.is_structured()) scalars = false;
    if (scalars) {
      os << path << ":";
      for (const auto& v : j) os << " " << (v.is_string() ? v.get<std::string>() : v.dump());
      os << "\n";
      return;
    }
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", os);
  } else {
    os << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void emit(const RunConfig& cfg, const Json& doc) {
  std::ostringstream os;
  if (cfg.format == "text")
    flatten(doc, "", os);
  else
    os << doc.dump(2) << "\n";
  if (cfg.out.empty()) {
    std::cout << os.str();
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw Error(ErrorKind::InvalidInput, "cannot write " + cfg.out, "out");
  f << os.str();
}

Json header(const std::string& command) { return Json{{"schema", kSchema}, {"command", command}}; }

int cmd_setup(const RunConfig& cfg) {
  GradedSetup st = load_setup(cfg);
  Report r = validate_setup(st);
  Json doc = header("setup");
  doc["setup"] = setup_json(st);
  doc["report"] = report_json(r);
  emit(cfg, doc);
  return r.ok() ? 0 : 1;
}

int cmd_finite(const RunConfig& cfg) {
  GradedSetup st = load_setup(cfg);
  const auto z = z_value(cfg);
  Json doc = header("finite-bracket");
  doc["z"] = cfg.z;
  doc["untwisted"] = finite_table_json(st, false, Rational(0));
  doc["twisted"] = finite_table_json(st, !z.has_value(), z);
  emit(cfg, doc);
  return 0;
}

int cmd_generators(const RunConfig& cfg) {
  GradedSetup st = load_setup(cfg);
  WAlgebra W(st, cfg.jobs);
  Json doc = header("generators");
  doc["generators"] = generators_json(W);
  emit(cfg, doc);
  return 0;
}

int cmd_lambda(const RunConfig& cfg) {
  GradedSetup st = load_setup(cfg);
  const auto z = z_value(cfg);
  std::optional<Vec> zeta;
  if (!cfg.zeta.empty()) {
    if (cfg.route != "closed") throw Error(ErrorKind::InvalidInput, "zeta requires --route closed", "zeta");
    zeta = parse_zeta(cfg.zeta, st.dim());
  }
  WAlgebra W(st, cfg.jobs);
  const bool verify = cfg.cross_check || cfg.route == "all";
  Report rep{"cross-route verification", {}};
  Json table = Json::array();
  const Namer name = W.namer();
  for (std::size_t i = 0; i < W.size(); ++i)
    for (std::size_t j = 0; j < W.size(); ++j) {
      LambdaPoly l(Space::W);
      if (cfg.route == "direct")
        l = W.bracket_direct(i, j);
      else if (cfg.route == "skew")
        l = W.bracket_skewform(i, j);
      else
        l = zeta ? W.bracket_closed(i, j, zeta) : W.table(i, j);
      if (verify && !zeta) {
        const std::string pair = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
        const LambdaPoly d = W.bracket_direct(i, j);
        rep.add("direct = closed on " + pair, d == W.table(i, j));
        rep.add("direct = skew form on " + pair, d == W.bracket_skewform(i, j));
      }
      if (z) l = l.map(Space::W, [&](const Poly& p) { return p.at_z(*z); });
      table.push_back(Json{{"pair", {i + 1, j + 1}}, {"lambda", lambda_json(l, name)}});
    }
  Json doc = header("lambda-bracket");
  doc["route"] = cfg.route;
  doc["z"] = cfg.z;
  if (zeta) doc["zeta"] = vec_json(*zeta);
  doc["table"] = std::move(table);
  if (verify) doc["report"] = report_json(rep);
  emit(cfg, doc);
  return rep.ok() ? 0 : 1;
}

int cmd_zhu(const RunConfig& cfg) {
  GradedSetup st = load_setup(cfg);
  WAlgebra W(st, cfg.jobs);
  Report rep = zhu_iso_check(W);
  Json doc = header("zhu");
  doc["table"] = zhu_table_json(W);
  doc["report"] = report_json(rep);
  emit(cfg, doc);
  return rep.ok() ? 0 : 1;
}

int cmd_miura(const RunConfig& cfg) {
  GradedSetup st = load_setup(cfg);
  WAlgebra W(st, cfg.jobs);
  Report rep = miura_hom_check(W);
  Json doc = header("miura");
  doc["images"] = miura_json(W);
  doc["report"] = report_json(rep);
  emit(cfg, doc);
  return rep.ok() ? 0 : 1;
}

int cmd_verify(const RunConfig& cfg) {
  Json doc = header("verify");
  bool ok = true;
  if (!cfg.algebra.empty()) {
    GradedSetup st = load_setup(cfg);
    Report rep = verify_algebra(st, cfg.jobs);
    doc["report"] = report_json(rep);
    ok = rep.ok();
  } else {
    Json crit = Json::array();
    for (const auto& c : run_acceptance(cfg.jobs)) {
      Json e{{"id", c.id}, {"name", c.name}, {"passed", c.passed}};
      if (!c.detail.empty()) e["detail"] = c.detail;
      crit.push_back(std::move(e));
      ok = ok && c.passed;
    }
    doc["criteria"] = std::move(crit);
    doc["passed"] = ok;
  }
  emit(cfg, doc);
  return ok ? 0 : 1;
}

int emit_error(const std::string& kind, const std::string& field, const std::string& message) {
  Json doc{{"schema", kSchema}, {"error", {{"kind", kind}, {"field", field}, {"message", message}}}};
  std::cout << doc.dump(2) << "\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classical finite and affine W-algebras over exact rationals"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--algebra", cfg.algebra, "algebra spec file (JSON)");
    sub->add_option("--out", cfg.out, "output file (default stdout)");
    sub->add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  };
  std::vector<std::pair<CLI::App*, int (*)(const RunConfig&)>> commands;
  auto add = [&](const std::string& name, const std::string& help, int (*fn)(const RunConfig&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub);
    commands.emplace_back(sub, fn);
    return sub;
  };
  add("setup", "graded setup summary and validation", cmd_setup);
  add("finite-bracket", "Poisson bracket table of the finite W-algebra", cmd_finite)
      ->add_option("--z", cfg.z, "formal or P/Q for the twisted table");
  add("generators", "generators w(q_j) with their linear terms", cmd_generators);
  CLI::App* lam = add("lambda-bracket", "lambda-bracket table of the affine W-algebra", cmd_lambda);
  lam->add_option("--route", cfg.route, "direct, closed, skew or all")
      ->check(CLI::IsMember({"direct", "closed", "skew", "all"}));
  lam->add_option("--z", cfg.z, "formal or P/Q");
  lam->add_option("--zeta", cfg.zeta, "zeta0 coordinates for the closed route");
  lam->add_flag("--cross-check", cfg.cross_check, "compare all three routes");
  add("zhu", "Zhu algebra table and isomorphism report", cmd_zhu);
  add("miura", "Miura images and homomorphism report", cmd_miura);
  add("verify", "acceptance suite, or all checks on --algebra", cmd_verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return emit_error(to_string(ErrorKind::InvalidInput), "", e.what());
  }
  try {
    for (const auto& [sub, fn] : commands)
      if (sub->parsed()) return fn(cfg);
  } catch (const Error& e) {
    return emit_error(to_string(e.kind()), e.field(), e.what());
  } catch (const std::exception& e) {
    return emit_error(to_string(ErrorKind::Internal), "", e.what());
  }
  return 1;
}
