#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyenum/linprog.hpp"

#include <random>

using namespace polyenum;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

std::vector<Rational> row(std::initializer_list<long> xs) {
    std::vector<Rational> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

}  // namespace

TEST_CASE("infeasible pair gives Farkas multipliers (1,1)") {
    LinearSystem sys;
    sys.num_vars = 1;
    sys.add_ineq(row({1}), q(1));    // x >= 1
    sys.add_ineq(row({-1}), q(0));   // -x >= 0
    auto out = solve(sys);
    REQUIRE(out.status == LPOutcome::Status::Infeasible);
    CHECK(check_witness(sys, out));
    // combination: x + (-x) = 0 >= 1
    CHECK(out.farkas_ineq[0].sgn() > 0);
    CHECK(out.farkas_ineq[1].sgn() > 0);
    CHECK(out.farkas_ineq[0] == out.farkas_ineq[1]);
}

TEST_CASE("simple bounded maximum") {
    LinearSystem sys;
    sys.num_vars = 2;
    sys.add_eq(row({1, 1}), q(1));
    sys.add_ineq(row({1, 0}), q(0));
    sys.add_ineq(row({0, 1}), q(0));
    sys.objective = row({1, 0});
    auto out = solve(sys);
    REQUIRE(out.status == LPOutcome::Status::Feasible);
    CHECK(out.optimum == q(1));
    CHECK(out.point == std::vector<Rational>{q(1), q(0)});
    CHECK(check_witness(sys, out));
}

TEST_CASE("epsilon form of opposed strict inequalities maxes out at zero") {
    // v1 - v2 >= eps, v2 - v1 >= eps, eps <= 1, maximize eps
    LinearSystem sys;
    sys.num_vars = 3;  // v1, v2, eps
    sys.add_ineq(row({1, -1, -1}), q(0));
    sys.add_ineq(row({-1, 1, -1}), q(0));
    sys.add_ineq(row({0, 0, -1}), q(-1));  // eps <= 1
    sys.objective = row({0, 0, 1});
    auto out = solve(sys);
    REQUIRE(out.status == LPOutcome::Status::Feasible);
    CHECK(out.optimum == q(0));
    CHECK(check_witness(sys, out));
}

TEST_CASE("unbounded direction carries an improving ray") {
    LinearSystem sys;
    sys.num_vars = 2;
    sys.add_ineq(row({1, 0}), q(0));
    sys.add_ineq(row({0, 1}), q(2));
    sys.objective = row({1, 1});
    auto out = solve(sys);
    REQUIRE(out.status == LPOutcome::Status::Unbounded);
    CHECK(check_witness(sys, out));
}

TEST_CASE("corrupted witnesses fail the check") {
    LinearSystem sys;
    sys.num_vars = 1;
    sys.add_ineq(row({1}), q(1));
    sys.add_ineq(row({-1}), q(0));
    auto out = solve(sys);
    REQUIRE(out.status == LPOutcome::Status::Infeasible);
    auto bad = out;
    bad.farkas_ineq[0] += q(1, 7);
    CHECK_FALSE(check_witness(sys, bad));

    LinearSystem feas;
    feas.num_vars = 2;
    feas.add_eq(row({1, 1}), q(1));
    feas.add_ineq(row({1, 0}), q(0));
    feas.add_ineq(row({0, 1}), q(0));
    feas.objective = row({1, 0});
    auto fo = solve(feas);
    REQUIRE(fo.status == LPOutcome::Status::Feasible);
    auto perturbed = fo;
    perturbed.point[0] += q(1, 1000000);
    CHECK_FALSE(check_witness(feas, perturbed));
}

TEST_CASE("row scaling by positive rationals preserves the status") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coef(-4, 4);
    std::uniform_int_distribution<int> scale_num(1, 9);
    std::uniform_int_distribution<int> scale_den(1, 9);
    for (int trial = 0; trial < 60; ++trial) {
        LinearSystem sys;
        sys.num_vars = 3;
        for (int r = 0; r < 5; ++r) {
            std::vector<Rational> lhs;
            for (int j = 0; j < 3; ++j) lhs.emplace_back(coef(rng));
            sys.add_ineq(std::move(lhs), Rational(coef(rng)));
        }
        sys.objective = row({1, 1, 1});
        auto base = solve(sys);
        CHECK(check_witness(sys, base));

        LinearSystem scaled = sys;
        for (size_t r = 0; r < scaled.ineq_lhs.size(); ++r) {
            Rational s(scale_num(rng), scale_den(rng));
            for (auto& c : scaled.ineq_lhs[r]) c *= s;
            scaled.ineq_rhs[r] *= s;
        }
        auto again = solve(scaled);
        CHECK(again.status == base.status);
        CHECK(check_witness(scaled, again));
    }
}
