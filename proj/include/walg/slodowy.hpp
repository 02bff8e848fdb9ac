#pragma once

#include <optional>

#include "walg/poly.hpp"
#include "walg/report.hpp"
#include "walg/setup.hpp"

namespace walg {

/// Vector of g whose coordinates are polynomials (Slice space) in the
/// indeterminates r_j, identified with the g^f symbols q_j, and z.
struct SymVec {
  std::vector<Poly> c;
};

/// The generic element r = sum_j r_j q^j of g^e, plus z x when twisted.
SymVec generic_ge(const GradedSetup& st, bool twisted);

/// Phi^(r)(a) for symbolic r in g_{>=0}. Asserts that the series truncates.
SymVec phi_r(const GradedSetup& st, const SymVec& a, const SymVec& r);

/// (p | Phi^(r)([q,r])) with r_j read as q_j; `twisted` replaces r by zx + r.
Poly finite_bracket_oracle(const GradedSetup& st, const Vec& p, const Vec& q, bool twisted = false);

/// Chain formula for the (z-twisted) Poisson bracket of the Slodowy slice with
/// z formal; pass a value to specialise z.
Poly finite_bracket(const GradedSetup& st, const Vec& p, const Vec& q, const std::optional<Rational>& z = std::nullopt);

/// q_j -> q_j + (z^2/4)(q_j|e), z formal.
Poly slice_shift(const GradedSetup& st, const Poly& P);
Poly slice_shift(const GradedSetup& st, const Poly& P, const Rational& z);

/// Bracket table on generators of a Poisson algebra S(V): (i, j) -> {v_i, v_j}.
using PoissonTable = std::vector<std::vector<Poly>>;
/// Leibniz extension {P, Q} = sum dP/dv_i dQ/dv_j {v_i, v_j}.
Poly poisson_bracket(const PoissonTable& table, const Poly& P, const Poly& Q);
/// Antisymmetry and Jacobi on all generator pairs and triples.
Report poisson_axioms(const PoissonTable& table, const std::string& title);

PoissonTable finite_table(const GradedSetup& st, bool formal_z);
Namer slice_namer();

/// Doubled conformal weight of the slice symbol q_j (1 + delta(j)); z has weight 1.
int slice_weight2(const GradedSetup& st, int j);

}  // namespace walg
