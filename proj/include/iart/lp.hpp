#pragma once

// Exact linear programming:  minimize c.x  subject to  A x >= b,  x free.
// Solved through the dual  max b.y, A^T y = c, y >= 0  with a two-phase
// tableau simplex and Bland's rule; the primal optimum is recovered from the
// final dual basis and re-verified by substitution.

#include <vector>

#include "iart/linalg.hpp"

namespace iart {

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPResult {
    LPStatus status = LPStatus::Infeasible;
    Q value;
    QVec x;  // primal optimum when Optimal
    QVec y;  // dual optimum when Optimal
};

// A is m x k (m constraints on k variables).  The Infeasible/Unbounded
// distinction is exact: a dual that is infeasible is resolved by a separate
// feasibility test of the primal.
LPResult lp_minimize(const QMat& A, const QVec& b, const QVec& c);

// Faster variant for the enumeration hot path: the caller guarantees the
// primal is bounded in direction c whenever it is feasible, so an infeasible
// dual is reported as Infeasible without the extra feasibility test.
LPResult lp_minimize_bounded(const QMat& A, const QVec& b, const QVec& c);

// Is {x : A x >= b} nonempty?
bool lp_feasible(const QMat& A, const QVec& b);

// A nonzero r with A r >= 0 and c.r < 0, or empty if none exists.
QVec lp_descent_ray(const QMat& A, const QVec& c);

}  // namespace iart
