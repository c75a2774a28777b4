// Dense two-phase simplex over exact rationals with Bland's rule.
//
// Solves min c.x s.t. Ax = b, x >= 0. Infeasible systems come back with a
// Farkas certificate y (y.A <= 0 componentwise, y.b > 0), which is how
// separating planes are extracted. Small systems only; no scaling, no
// floating point.
#pragma once

#include "esgeo/core.hpp"

namespace esgeo {

using Matrix = std::vector<std::vector<Rat>>;

struct LpResult {
    enum class Status { Optimal, Infeasible, Unbounded };
    Status status = Status::Infeasible;
    Rat objective;
    std::vector<Rat> x;       // primal solution when Optimal
    std::vector<Rat> farkas;  // certificate when Infeasible
};

LpResult lp_minimize(const Matrix& A, const std::vector<Rat>& b, const std::vector<Rat>& c);

// Feasibility of Ax = b, x >= 0 (phase one only).
LpResult lp_feasible(const Matrix& A, const std::vector<Rat>& b);

}  // namespace esgeo
