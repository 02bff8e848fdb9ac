#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "walg/miura.hpp"
#include "walg/report.hpp"
#include "walg/setup.hpp"
#include "walg/zhu.hpp"

namespace walg {

using Json = nlohmann::ordered_json;

/// A parsed algebra file: the algebra, its sl2-triple and the optional choice of s.
struct AlgebraInput {
  LieAlgebra alg;
  Sl2Triple triple;
  std::optional<Vec> s;
  std::string name;
};

/// Accepts
///   {"type":"sl","n":3,"nilpotent":{"partition":[2,1]},"s":"default"}
///   {"type":"custom","dim":N,"labels":[...],"brackets":[[i,j,[c...]],...],"form":[[...]],
///    "triple":{"e":[...],"h":[...],"f":[...]},"s":[...]}
/// where "s" may also be "default" or "e".
/// with 0-based indices and rationals as "p/q" strings (integers also accepted).
/// Errors carry the offending field.
AlgebraInput parse_algebra(const Json& j);
AlgebraInput parse_algebra_text(const std::string& text);
AlgebraInput load_algebra(const std::string& path);
GradedSetup make_setup(const AlgebraInput& in);

/// The sl_n algebra with a partition nilpotent, as an algebra file would describe it.
AlgebraInput sl_input(int n, const std::vector<int>& partition, const std::optional<Vec>& s = std::nullopt);

Json vec_json(const Vec& v);
Json report_json(const Report& r);
/// One entry per power of lambda, each split into its z-degree coefficients.
Json lambda_json(const LambdaPoly& l, const Namer& name);
Json setup_json(const GradedSetup& st);
Json finite_table_json(const GradedSetup& st, bool formal_z, const std::optional<Rational>& z);
Json generators_json(const WAlgebra& W);
Json zhu_table_json(const WAlgebra& W);
Json miura_json(const WAlgebra& W);

/// Text rendering of a report, one line per check.
std::string report_text(const Report& r);

}  // namespace walg
