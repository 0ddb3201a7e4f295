#include "polyenum/linprog.hpp"

#include <atomic>
#include <stdexcept>

namespace polyenum {

namespace {
std::atomic<bool> g_selfcheck{false};
std::atomic<long> g_selfcheck_count{0};
}  // namespace

void set_lp_selfcheck(bool on) { g_selfcheck = on; }
long lp_selfcheck_count() { return g_selfcheck_count; }

void LinearSystem::add_ineq(std::vector<Rational> lhs, Rational rhs) {
    if (static_cast<int>(lhs.size()) != num_vars)
        throw std::invalid_argument("linear system: row width mismatch");
    ineq_lhs.push_back(std::move(lhs));
    ineq_rhs.push_back(std::move(rhs));
}

void LinearSystem::add_eq(std::vector<Rational> lhs, Rational rhs) {
    if (static_cast<int>(lhs.size()) != num_vars)
        throw std::invalid_argument("linear system: row width mismatch");
    eq_lhs.push_back(std::move(lhs));
    eq_rhs.push_back(std::move(rhs));
}

namespace {

// Tableau simplex over the standard form produced by splitting the free
// variables (x = xp - xm; nonneg-flagged variables keep one column), adding
// one slack per inequality and artificials where the slack cannot start
// basic.
struct Simplex {
    int n = 0;            // original variables
    int mi = 0, me = 0;   // inequality / equality row counts
    int m = 0;            // total rows
    int cols = 0;         // structural + artificial columns
    int slack0 = 0, art0 = 0;
    std::vector<int> row_sign;  // +1 kept, -1 negated during normalization

    // structural column -> (variable, +1/-1)
    std::vector<std::pair<int, int>> col_var;
    std::vector<int> var_col;  // first column of each variable

    std::vector<std::vector<Rational>> t;  // m x (cols+1), last column = rhs
    std::vector<Rational> zrow;            // reduced costs, size cols+1 (last = -value)
    std::vector<int> basis;
    std::vector<Rational> cost;

    long pivots = 0;
    bool bland = false;

    explicit Simplex(const LinearSystem& sys) {
        n = sys.num_vars;
        mi = static_cast<int>(sys.ineq_lhs.size());
        me = static_cast<int>(sys.eq_lhs.size());
        m = mi + me;

        var_col.assign(n, 0);
        for (int j = 0; j < n; ++j) {
            bool nn = j < static_cast<int>(sys.nonneg.size()) && sys.nonneg[j];
            var_col[j] = static_cast<int>(col_var.size());
            col_var.emplace_back(j, 1);
            if (!nn) col_var.emplace_back(j, -1);
        }
        slack0 = static_cast<int>(col_var.size());
        art0 = slack0 + mi;
        cols = art0 + m;
        t.assign(m, std::vector<Rational>(cols + 1));
        row_sign.assign(m, 1);
        basis.assign(m, -1);

        for (int r = 0; r < m; ++r) {
            const auto& lhs = r < mi ? sys.ineq_lhs[r] : sys.eq_lhs[r - mi];
            const Rational& rhs = r < mi ? sys.ineq_rhs[r] : sys.eq_rhs[r - mi];
            int sign = 1;
            // a.x - s = b for inequalities; flip so the rhs is nonnegative
            if (rhs.sgn() < 0) sign = -1;
            row_sign[r] = sign;
            for (int c = 0; c < slack0; ++c) {
                auto [j, s] = col_var[c];
                Rational v = lhs[j] * Rational(sign * s);
                t[r][c] = v;
            }
            if (r < mi) t[r][slack0 + r] = Rational(-sign);
            t[r][cols] = sign > 0 ? rhs : -rhs;
        }
        // initial basis: slack where it has +1 (negated inequality rows),
        // artificial otherwise; the artificial column is present either way
        // so the final tableau exposes B^{-1} for dual extraction
        for (int r = 0; r < m; ++r) {
            t[r][art0 + r] = Rational(1);
            basis[r] = (r < mi && row_sign[r] < 0) ? slack0 + r : art0 + r;
        }
    }

    void set_costs(std::vector<Rational> c) {
        cost = std::move(c);
        cost.resize(cols, Rational(0));
        zrow.assign(cols + 1, Rational(0));
        for (int j = 0; j < cols; ++j) {
            Rational acc = cost[j];
            for (int r = 0; r < m; ++r)
                if (!t[r][j].is_zero() && !cost[basis[r]].is_zero())
                    acc -= cost[basis[r]] * t[r][j];
            zrow[j] = acc;
        }
        // invariant: zrow = [c | 0] - y [A | b], so the last entry is -value
        Rational v(0);
        for (int r = 0; r < m; ++r)
            if (!cost[basis[r]].is_zero()) v += cost[basis[r]] * t[r][cols];
        zrow[cols] = -v;
    }

    void pivot(int r, int j) {
        Rational p = t[r][j];
        for (int k = 0; k <= cols; ++k)
            if (!t[r][k].is_zero()) t[r][k] /= p;
        for (int i = 0; i < m; ++i) {
            if (i == r || t[i][j].is_zero()) continue;
            Rational f = t[i][j];
            for (int k = 0; k <= cols; ++k)
                if (!t[r][k].is_zero()) t[i][k] -= f * t[r][k];
        }
        if (!zrow[j].is_zero()) {
            Rational f = zrow[j];
            for (int k = 0; k <= cols; ++k)
                if (!t[r][k].is_zero()) zrow[k] -= f * t[r][k];
        }
        basis[r] = j;
        ++pivots;
        if (!bland && pivots > 200 + 20L * (m + cols)) bland = true;
    }

    // Minimizes the current cost; returns false when an unbounded improving
    // column was found (entering column stored in *unbounded_col).
    bool optimize(int usable_cols, int* unbounded_col) {
        for (;;) {
            int enter = -1;
            if (bland) {
                for (int j = 0; j < usable_cols; ++j)
                    if (zrow[j].sgn() < 0) {
                        enter = j;
                        break;
                    }
            } else {
                const Rational* best = nullptr;
                for (int j = 0; j < usable_cols; ++j)
                    if (zrow[j].sgn() < 0 && (!best || zrow[j] < *best)) {
                        best = &zrow[j];
                        enter = j;
                    }
            }
            if (enter < 0) return true;
            int leave = -1;
            Rational best_ratio;
            for (int r = 0; r < m; ++r) {
                if (t[r][enter].sgn() <= 0) continue;
                Rational ratio = t[r][cols] / t[r][enter];
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis[r] < basis[leave])) {
                    leave = r;
                    best_ratio = ratio;
                }
            }
            if (leave < 0) {
                if (unbounded_col) *unbounded_col = enter;
                return false;
            }
            pivot(leave, enter);
        }
    }
};

}  // namespace

namespace {

LPOutcome solve_impl(const LinearSystem& system) {
    LPOutcome out;
    const int n = system.num_vars;
    Simplex sx(system);

    // Phase 1: minimize the artificial sum.
    {
        std::vector<Rational> c(sx.cols, Rational(0));
        for (int r = 0; r < sx.m; ++r) c[sx.art0 + r] = Rational(1);
        sx.set_costs(std::move(c));
    }
    sx.optimize(sx.cols, nullptr);
    Rational phase1 = -sx.zrow[sx.cols];  // value of the artificial sum
    if (phase1.sgn() != 0) {
        // Infeasible. Dual multipliers: y_r = 1 - zrow[artificial_r]; mapped
        // back through the row normalization they give the Farkas witness.
        out.status = LPOutcome::Status::Infeasible;
        out.farkas_ineq.assign(sx.mi, Rational(0));
        out.farkas_eq.assign(sx.me, Rational(0));
        for (int r = 0; r < sx.m; ++r) {
            Rational y = Rational(1) - sx.zrow[sx.art0 + r];
            Rational mult = sx.row_sign[r] > 0 ? y : -y;
            if (r < sx.mi)
                out.farkas_ineq[r] = mult;
            else
                out.farkas_eq[r - sx.mi] = mult;
        }
        return out;
    }

    // Drive leftover artificials out of the basis; drop rows that became
    // identically zero (redundant constraints).
    for (int r = 0; r < sx.m; ++r) {
        if (sx.basis[r] < sx.art0) continue;
        int piv = -1;
        for (int j = 0; j < sx.art0; ++j)
            if (sx.t[r][j].sgn() != 0) {
                piv = j;
                break;
            }
        if (piv >= 0) sx.pivot(r, piv);
    }

    // Phase 2: minimize -objective over structural columns only.
    {
        std::vector<Rational> c(sx.cols, Rational(0));
        for (int col = 0; col < sx.slack0; ++col) {
            auto [j, s] = sx.col_var[col];
            if (j < static_cast<int>(system.objective.size()))
                c[col] = system.objective[j] * Rational(-s);
        }
        // leftover basic artificials are pinned at zero; forbid re-entry by
        // restricting pricing to structural columns
        sx.set_costs(std::move(c));
    }
    int unbounded_col = -1;
    bool optimal = sx.optimize(sx.art0, &unbounded_col);

    auto current_point = [&]() {
        std::vector<Rational> x(n, Rational(0));
        for (int r = 0; r < sx.m; ++r) {
            int b = sx.basis[r];
            if (b < sx.slack0) {
                auto [j, s] = sx.col_var[b];
                if (s > 0)
                    x[j] += sx.t[r][sx.cols];
                else
                    x[j] -= sx.t[r][sx.cols];
            }
        }
        return x;
    };

    if (!optimal) {
        out.status = LPOutcome::Status::Unbounded;
        out.point = current_point();
        out.ray.assign(n, Rational(0));
        if (unbounded_col < sx.slack0) {
            auto [j, s] = sx.col_var[unbounded_col];
            out.ray[j] += Rational(s);
        }
        for (int r = 0; r < sx.m; ++r) {
            int b = sx.basis[r];
            Rational step = -sx.t[r][unbounded_col];
            if (step.is_zero() || b >= sx.slack0) continue;
            auto [j, s] = sx.col_var[b];
            out.ray[j] += step * Rational(s);
        }
        return out;
    }

    out.status = LPOutcome::Status::Feasible;
    out.point = current_point();
    out.optimum = Rational(0);
    for (int j = 0; j < n && j < static_cast<int>(system.objective.size()); ++j)
        out.optimum += system.objective[j] * out.point[j];
    return out;
}

}  // namespace

LPOutcome solve(const LinearSystem& system) {
    LPOutcome out = solve_impl(system);
    if (g_selfcheck) {
        ++g_selfcheck_count;
        if (!check_witness(system, out)) throw std::logic_error("lp: witness self-check failed");
    }
    return out;
}

bool check_witness(const LinearSystem& system, const LPOutcome& outcome) {
    const int n = system.num_vars;
    auto dot = [&](const std::vector<Rational>& a, const std::vector<Rational>& x) {
        Rational acc(0);
        for (int j = 0; j < n; ++j) acc += a[j] * x[j];
        return acc;
    };
    auto is_nonneg_var = [&](int j) {
        return j < static_cast<int>(system.nonneg.size()) && system.nonneg[j];
    };
    auto point_feasible = [&](const std::vector<Rational>& x) {
        if (static_cast<int>(x.size()) != n) return false;
        for (int j = 0; j < n; ++j)
            if (is_nonneg_var(j) && x[j].sgn() < 0) return false;
        for (size_t i = 0; i < system.ineq_lhs.size(); ++i)
            if (dot(system.ineq_lhs[i], x) < system.ineq_rhs[i]) return false;
        for (size_t i = 0; i < system.eq_lhs.size(); ++i)
            if (dot(system.eq_lhs[i], x) != system.eq_rhs[i]) return false;
        return true;
    };
    switch (outcome.status) {
        case LPOutcome::Status::Feasible: {
            if (!point_feasible(outcome.point)) return false;
            Rational val(0);
            for (int j = 0; j < n && j < static_cast<int>(system.objective.size()); ++j)
                val += system.objective[j] * outcome.point[j];
            return val == outcome.optimum;
        }
        case LPOutcome::Status::Infeasible: {
            if (outcome.farkas_ineq.size() != system.ineq_lhs.size()) return false;
            if (outcome.farkas_eq.size() != system.eq_lhs.size()) return false;
            for (const auto& l : outcome.farkas_ineq)
                if (l.sgn() < 0) return false;
            for (int j = 0; j < n; ++j) {
                Rational acc(0);
                for (size_t i = 0; i < system.ineq_lhs.size(); ++i)
                    acc += outcome.farkas_ineq[i] * system.ineq_lhs[i][j];
                for (size_t i = 0; i < system.eq_lhs.size(); ++i)
                    acc += outcome.farkas_eq[i] * system.eq_lhs[i][j];
                // implicit x_j >= 0 rows absorb a nonpositive residual
                if (is_nonneg_var(j) ? acc.sgn() > 0 : !acc.is_zero()) return false;
            }
            Rational rhs(0);
            for (size_t i = 0; i < system.ineq_rhs.size(); ++i)
                rhs += outcome.farkas_ineq[i] * system.ineq_rhs[i];
            for (size_t i = 0; i < system.eq_rhs.size(); ++i)
                rhs += outcome.farkas_eq[i] * system.eq_rhs[i];
            return rhs.sgn() > 0;
        }
        case LPOutcome::Status::Unbounded: {
            if (static_cast<int>(outcome.ray.size()) != n) return false;
            for (int j = 0; j < n; ++j)
                if (is_nonneg_var(j) && outcome.ray[j].sgn() < 0) return false;
            for (size_t i = 0; i < system.ineq_lhs.size(); ++i)
                if (dot(system.ineq_lhs[i], outcome.ray).sgn() < 0) return false;
            for (size_t i = 0; i < system.eq_lhs.size(); ++i)
                if (dot(system.eq_lhs[i], outcome.ray).sgn() != 0) return false;
            Rational gain(0);
            for (int j = 0; j < n && j < static_cast<int>(system.objective.size()); ++j)
                gain += system.objective[j] * outcome.ray[j];
            if (gain.sgn() <= 0) return false;
            // the ray must depart from a genuinely feasible point
            return point_feasible(outcome.point);
        }
    }
    return false;
}

}  // namespace polyenum
