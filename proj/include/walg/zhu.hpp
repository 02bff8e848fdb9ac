#pragma once

#include "walg/report.hpp"
#include "walg/slodowy.hpp"
#include "walg/walgebra.hpp"

namespace walg {

/// Eliminates derivatives modulo d A = -z Delta(A) A:
/// w_j^(m) -> (-z)^m Delta_j (Delta_j + 1) ... (Delta_j + m - 1) w_j. z is formal.
Poly zhu_reduce(const WAlgebra& W, const Poly& p);

/// {w_i, w_j}_z from the lambda-bracket (at zero PVA twist) by lambda^k -> z^k (Delta_i - 1)...(Delta_i - k).
Poly zhu_bracket_generic(const WAlgebra& W, std::size_t i, std::size_t j);
/// The closed chain formula with -z(x|[.,.]) insertions.
Poly zhu_bracket_closed(const WAlgebra& W, std::size_t i, std::size_t j);

/// Generator bracket table (W space, formal z) by the closed formula.
PoissonTable zhu_table(const WAlgebra& W);

/// w_j -> w_j + (z^2/4)(q_j|e).
Poly zhu_shift(const WAlgebra& W, const Poly& p);

/// Route equality, the comparison with the finite W-algebra, and the shift isomorphism.
Report zhu_iso_check(const WAlgebra& W);

}  // namespace walg
