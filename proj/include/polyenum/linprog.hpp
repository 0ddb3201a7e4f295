#pragma once

#include "polyenum/rational.hpp"

#include <vector>

namespace polyenum {

/// Small dense exact LP: maximize objective . x subject to
/// ineq_lhs[i] . x >= ineq_rhs[i] and eq_lhs[j] . x = eq_rhs[j], x free.
struct LinearSystem {
    int num_vars = 0;
    std::vector<std::vector<Rational>> ineq_lhs;
    std::vector<Rational> ineq_rhs;
    std::vector<std::vector<Rational>> eq_lhs;
    std::vector<Rational> eq_rhs;
    std::vector<Rational> objective;  // empty means maximize 0

    // Optional sign restriction x_j >= 0 per variable (empty: all free).
    // Semantically identical to adding a unit inequality row; the solver
    // just handles it without the extra row and column split.
    std::vector<char> nonneg;

    void add_ineq(std::vector<Rational> lhs, Rational rhs);
    void add_eq(std::vector<Rational> lhs, Rational rhs);
};

/// Every status carries a witness that check_witness re-verifies:
/// feasible -> optimal point and value; infeasible -> Farkas multipliers
/// (nonnegative on inequalities) combining the rows into 0 >= positive;
/// unbounded -> feasible point plus improving recession ray.
struct LPOutcome {
    enum class Status { Feasible, Infeasible, Unbounded };
    Status status = Status::Infeasible;

    std::vector<Rational> point;
    Rational optimum;

    std::vector<Rational> farkas_ineq;  // one per inequality row, >= 0
    std::vector<Rational> farkas_eq;    // one per equality row, free sign

    std::vector<Rational> ray;
};

/// Exact rational simplex; Dantzig pricing with a permanent switch to
/// Bland's rule after a stall, so it terminates on every input.
LPOutcome solve(const LinearSystem& system);

bool check_witness(const LinearSystem& system, const LPOutcome& outcome);

/// When enabled, every solve() re-checks its own witness before returning
/// and throws std::logic_error on a mismatch. Counts the checked calls.
void set_lp_selfcheck(bool on);
long lp_selfcheck_count();

}  // namespace polyenum
