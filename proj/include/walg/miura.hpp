#pragma once

#include "walg/report.hpp"
#include "walg/walgebra.hpp"

namespace walg {

/// Generator brackets of V(g_{<=0}) (x) F(g_{1/2}); variable ids are adapted
/// positions in g_{<=1/2}:
///   g_{<=0} x g_{<=0}: [a,b] + (a|b) lambda,   g_{1/2} x g_{1/2}: -(f|[a,b]),   mixed: 0.
LambdaPoly tensor_bracket_gen(const AffinePva& v, int i, int j);
GenBracket tensor_gen_fn(const AffinePva& v);

/// Deletes monomials containing variables of negative grade, landing in V(g_0) (x) F(g_{1/2}).
Poly miura_project(const WAlgebra& W, const Poly& affine);
/// The generalized Miura map on W polynomials.
Poly miura(const WAlgebra& W, const Poly& p);

/// x' + 1/2 sum a^i a_i + 1/2 sum v^k dv_k with dual bases of g_0 and g_{1/2}.
Poly miura_virasoro_formula(const WAlgebra& W);

/// Homomorphism identity at z = 0 on all generator pairs, through g_{<=0} and g_0,
/// plus the leading terms witnessing injectivity.
Report miura_hom_check(const WAlgebra& W);

}  // namespace walg
