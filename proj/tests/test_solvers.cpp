#include "tomo/error.hpp"
#include "tomo/generate.hpp"
#include "tomo/solvers.hpp"
#include "tomo/verifier.hpp"

#include "support/brute_force.hpp"

#include <doctest.h>

#include <algorithm>
#include <string>

using namespace tomo;
using tomo::testing::Rng;

namespace {

BinaryImage ones_at(int m, int n, std::initializer_list<Cell> cells)
{
    BinaryImage x(m, n);
    for (const auto& c : cells)
        x.set(c, true);
    return x;
}

RecInstance perturb(Rng& rng, RecInstance inst)
{
    switch (rng.uniform(0, 2)) {
    case 0: {
        auto& r = inst.row_sums[rng.uniform(0, inst.n - 1)];
        r = std::clamp(r + (rng.coin() ? 1 : -1), 0, inst.m);
        break;
    }
    case 1: {
        // keeps the totals equal so the instance is not trivially rejected
        const int d = rng.coin() ? 1 : -1;
        auto& r = inst.row_sums[rng.uniform(0, inst.n - 1)];
        auto& c = inst.col_sums[rng.uniform(0, inst.m - 1)];
        if (r + d >= 0 && r + d <= inst.m && c + d >= 0 && c + d <= inst.n) {
            r += d;
            c += d;
        }
        break;
    }
    default:
        inst.block_values[rng.uniform(0, static_cast<int>(inst.block_values.size()) - 1)] = 0;
    }
    return inst;
}

struct ClassCase
{
    const char* name;
    Method method;
    int k_lo, k_hi;
    int t;
};

void check_agreement(const ClassCase& cls, std::uint64_t seed)
{
    Rng rng(seed);
    int feasible = 0, infeasible = 0;
    for (int round = 0; round < 600; ++round) {
        const int k = rng.uniform(cls.k_lo, cls.k_hi);
        const int m = k * rng.uniform(1, 6 / k);
        const int n = k * rng.uniform(1, 6 / k);
        int nu = 1;
        int t = cls.t;
        if (cls.method == Method::REC1) {
            nu = rng.uniform(1, 3);
            t = rng.uniform(0, 2);
        }
        else if (cls.method == Method::KV2)
            nu = rng.uniform(k, k * k);
        auto planted = gen_planted(m, n, k, nu, t, rng.coin() ? 0.5 : 0.9, rng.next());
        auto inst = rng.coin() ? planted.instance : perturb(rng, planted.instance);
        const auto ours = solve(inst, cls.method);
        const auto truth = oracle_solve(inst);
        REQUIRE(truth.status != OracleStatus::LIMIT);
        const bool expected = truth.status == OracleStatus::FEASIBLE;
        CHECK((ours.status == SolveStatus::FEASIBLE) == expected);
        if (ours.image) {
            CHECK(verify_rec(inst, *ours.image).ok());
            ++feasible;
        }
        else
            ++infeasible;
    }
    MESSAGE(std::string(cls.name) << ": " << feasible << " feasible, " << infeasible << " infeasible");
    CHECK(feasible > 100);
    CHECK(infeasible > 50);
}

} // namespace

TEST_CASE("classification")
{
    CHECK(classify(RecInstance{1, 7, 2, 1, 1, {0}, {0}, {0}}) == SolveClass::REC1);
    CHECK(classify(RecInstance{3, 1, 0, 3, 3, {0, 0, 0}, {0, 0, 0}, {1}}) == SolveClass::K10);
    CHECK(classify(RecInstance{2, 2, 0, 2, 2, {0, 0}, {0, 0}, {2}}) == SolveClass::UNKNOWN);
    CHECK(classify(RecInstance{2, 2, 2, 2, 2, {0, 0}, {0, 0}, {2}}) == SolveClass::KV2);
    CHECK(classify(RecInstance{3, 2, 2, 3, 3, {0, 0, 0}, {0, 0, 0}, {2}}) == SolveClass::UNKNOWN);
    CHECK(classify(RecInstance{2, 1, 1, 2, 2, {0, 0}, {0, 0}, {1}}) == SolveClass::UNKNOWN);
}

TEST_CASE("k = 1 with a forbidden cell")
{
    const RecInstance inst{1, 1, 0, 2, 2, {1, 1}, {1, 1}, {0, 1, 1, 1}};
    CHECK(testing::brute_rec_solutions(inst).size() == 1);
    const auto res = solve_rec1(inst);
    REQUIRE(res.status == SolveStatus::FEASIBLE);
    CHECK(*res.image == ones_at(2, 2, {{2, 1}, {1, 2}}));
}

TEST_CASE("k = 1 trivial cases")
{
    CHECK(*solve_rec1(RecInstance{1, 3, 1, 2, 2, {0, 0}, {0, 0}, {0, 3, 0, 3}}).image == BinaryImage(2, 2));
    CHECK(solve_rec1(RecInstance{1, 1, 0, 2, 2, {1, 0}, {1, 1}, {1, 1, 1, 1}}).status == SolveStatus::INFEASIBLE);
}

TEST_CASE("k10 on a single block")
{
    const RecInstance inst{2, 1, 0, 2, 2, {1, 0}, {0, 1}, {1}};
    const auto res = solve_rec_k10(inst);
    REQUIRE(res.status == SolveStatus::FEASIBLE);
    CHECK(*res.image == ones_at(2, 2, {{2, 1}}));
}

TEST_CASE("k10 on a 4x4 grid")
{
    // block order (1,1),(3,1),(1,3),(3,3); (1,3) closed
    const RecInstance inst{2, 1, 0, 4, 4, {1, 1, 0, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}};
    const auto eta = k10_block_occupancy(inst);
    REQUIRE(eta);
    CHECK(eta->eta == std::vector<std::uint8_t>{1, 1, 0, 1});
    const auto res = solve_rec_k10(inst);
    REQUIRE(res.status == SolveStatus::FEASIBLE);
    CHECK(*res.image == ones_at(4, 4, {{1, 1}, {3, 2}, {4, 4}}));
    CHECK(verify_rec(inst, *res.image).ok());
    CHECK(oracle_solve(inst).status == OracleStatus::FEASIBLE);
}

TEST_CASE("k10 with all blocks closed")
{
    const RecInstance inst{2, 1, 0, 4, 2, {1, 0}, {1, 0, 0, 0}, {0, 0}};
    CHECK_FALSE(k10_block_occupancy(inst));
    CHECK(solve_rec_k10(inst).status == SolveStatus::INFEASIBLE);
}

TEST_CASE("step 1 success implies a feasible DR(1) instance")
{
    Rng rng(41);
    for (int round = 0; round < 500; ++round) {
        const int k = rng.uniform(2, 3);
        auto planted = gen_planted(k * rng.uniform(1, 4), k * rng.uniform(1, 4), k, 1, 0, 0.6, rng.next());
        const auto inst = rng.coin() ? planted.instance : perturb(rng, planted.instance);
        const auto eta = k10_block_occupancy(inst);
        if (eta)
            CHECK(dr1_feasible(k10_dr1_instance(inst, *eta)));
    }
}

TEST_CASE("kv2 examples")
{
    const RecInstance a{2, 2, 2, 2, 2, {1, 1}, {1, 1}, {2}};
    const auto res = solve_rec_kv2(a);
    REQUIRE(res.status == SolveStatus::FEASIBLE);
    CHECK(verify_rec(a, *res.image).ok());

    const RecInstance b{2, 2, 2, 2, 2, {2, 0}, {1, 1}, {2}};
    CHECK(testing::brute_rec_solutions(b).empty());
    CHECK(solve_rec_kv2(b).status == SolveStatus::INFEASIBLE);

    const RecInstance c{2, 2, 2, 2, 2, {0, 0}, {0, 0}, {0}};
    CHECK(*solve_rec_kv2(c).image == BinaryImage(2, 2));
}

TEST_CASE("dispatch")
{
    const RecInstance rec1{1, 1, 0, 2, 2, {1, 1}, {1, 1}, {1, 1, 1, 1}};
    CHECK(solve(rec1).method == Method::REC1);

    const RecInstance hard{2, 2, 0, 2, 2, {1, 1}, {2, 0}, {2}};
    const auto res = solve(hard);
    CHECK(res.method == Method::ORACLE);
    REQUIRE(res.status == SolveStatus::FEASIBLE);
    CHECK(*res.image == ones_at(2, 2, {{1, 1}, {1, 2}}));

    const RecInstance kv2{2, 2, 2, 2, 2, {1, 1}, {1, 1}, {2}};
    CHECK_THROWS_AS(solve(kv2, Method::K10), InputError);
    CHECK_THROWS_AS(solve(kv2, Method::REC1), InputError);
    CHECK_THROWS_AS(solve(rec1, Method::KV2), InputError);
    CHECK(solve(kv2, Method::ORACLE).status == SolveStatus::FEASIBLE);
}

TEST_CASE("oracle limit surfaces as a status")
{
    auto planted = gen_planted(8, 8, 2, 2, 0, 0.5, 5);
    CHECK(solve(planted.instance).status == SolveStatus::ORACLE_LIMIT);
    OracleLimits lim;
    lim.max_cells = 64;
    lim.max_nodes = 10;
    CHECK(solve(planted.instance, Method::AUTO, lim).status == SolveStatus::ORACLE_LIMIT);
}

TEST_CASE("k = 1 solver agrees with the oracle")
{
    check_agreement({"rec1", Method::REC1, 1, 1, 0}, 42);
}

TEST_CASE("k10 solver agrees with the oracle")
{
    check_agreement({"k10", Method::K10, 2, 3, 0}, 43);
}

TEST_CASE("kv2 solver agrees with the oracle")
{
    check_agreement({"kv2", Method::KV2, 2, 3, 2}, 44);
}
