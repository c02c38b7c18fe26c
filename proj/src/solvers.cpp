#include "tomo/solvers.hpp"

#include "tomo/error.hpp"
#include "tomo/flow.hpp"
#include "tomo/verifier.hpp"

#include <algorithm>

namespace tomo {

std::string to_string(Method m)
{
    switch (m) {
    case Method::AUTO: return "auto";
    case Method::REC1: return "rec1";
    case Method::K10: return "k10";
    case Method::KV2: return "kv2";
    case Method::ORACLE: return "oracle";
    }
    return "?";
}

std::string to_string(SolveClass c)
{
    switch (c) {
    case SolveClass::REC1: return "REC1";
    case SolveClass::K10: return "K10";
    case SolveClass::KV2: return "KV2";
    case SolveClass::UNKNOWN: return "UNKNOWN";
    }
    return "?";
}

std::string to_string(SolveStatus s)
{
    switch (s) {
    case SolveStatus::FEASIBLE: return "FEASIBLE";
    case SolveStatus::INFEASIBLE: return "INFEASIBLE";
    case SolveStatus::ORACLE_LIMIT: return "ORACLE_LIMIT";
    }
    return "?";
}

namespace {

SolveResult feasible(Method method, BinaryImage x)
{
    return {SolveStatus::FEASIBLE, method, std::move(x)};
}

SolveResult infeasible(Method method)
{
    return {SolveStatus::INFEASIBLE, method, std::nullopt};
}

void require_class(const RecInstance& inst, SolveClass expected, const char* name)
{
    inst.validate();
    if (classify(inst) != expected)
        throw InputError(std::string(name) + " does not apply to k=" + std::to_string(inst.k) + ", nu="
                         + std::to_string(inst.nu) + ", t=" + std::to_string(inst.t));
}

} // namespace

SolveClass classify(const RecInstance& inst)
{
    if (inst.k == 1)
        return SolveClass::REC1;
    if (inst.nu == 1 && inst.t == 0)
        return SolveClass::K10;
    if (inst.t == 2 && inst.nu >= inst.k)
        return SolveClass::KV2;
    return SolveClass::UNKNOWN;
}

SolveResult solve_rec1(const RecInstance& inst)
{
    require_class(inst, SolveClass::REC1, "rec1");
    TransportProblem tp;
    tp.m = inst.m;
    tp.n = inst.n;
    tp.row_sums = inst.row_sums;
    tp.col_sums = inst.col_sums;
    for (const auto& c : corner_points(inst.m, inst.n, 1))
        if (inst.block_value(c) == 0)
            tp.forbidden.insert(c);
    auto x = solve_transport(tp);
    if (!x)
        return infeasible(Method::REC1);
    return feasible(Method::REC1, std::move(*x));
}

std::optional<BlockOccupancy> k10_block_occupancy(const RecInstance& inst)
{
    inst.validate();
    const int k = inst.k;
    TransportProblem tp;
    tp.m = inst.blocks_x();
    tp.n = inst.blocks_y();
    tp.row_sums.assign(static_cast<std::size_t>(tp.n), 0);
    tp.col_sums.assign(static_cast<std::size_t>(tp.m), 0);
    for (int q = 1; q <= inst.n; ++q)
        tp.row_sums[(q - 1) / k] += inst.row_sums[q - 1];
    for (int p = 1; p <= inst.m; ++p)
        tp.col_sums[(p - 1) / k] += inst.col_sums[p - 1];
    for (const auto& c : corner_points(inst.m, inst.n, k))
        if (inst.block_value(c) == 0)
            tp.forbidden.insert(Cell{(c.p - 1) / k + 1, (c.q - 1) / k + 1});

    auto eta = solve_transport(tp);
    if (!eta)
        return std::nullopt;
    BlockOccupancy occ;
    occ.blocks_x = tp.m;
    occ.blocks_y = tp.n;
    occ.eta.reserve(static_cast<std::size_t>(tp.m) * tp.n);
    for (int J = 1; J <= tp.n; ++J)
        for (int I = 1; I <= tp.m; ++I)
            occ.eta.push_back(eta->at(I, J) ? 1 : 0);
    return occ;
}

DR1Instance k10_dr1_instance(const RecInstance& inst, const BlockOccupancy& occ)
{
    const int k = inst.k;
    DR1Instance dr;
    dr.k = k;
    dr.m = inst.m;
    dr.n = inst.n;
    const auto corners = corner_points(inst.m, inst.n, k);
    for (std::size_t idx = 0; idx < corners.size(); ++idx) {
        if (!occ.eta[idx])
            continue;
        const auto& c = corners[idx];
        dr.blocks.insert(dr.blocks.end(), c);
        for (int l = 0; l < k; ++l) {
            dr.row_sums[c.q + l] = inst.row_sums[c.q + l - 1];
            dr.col_sums[c.p + l] = inst.col_sums[c.p + l - 1];
        }
    }
    return dr;
}

SolveResult solve_rec_k10(const RecInstance& inst)
{
    require_class(inst, SolveClass::K10, "k10");
    const auto occ = k10_block_occupancy(inst);
    if (!occ)
        return infeasible(Method::K10);

    const auto dr = k10_dr1_instance(inst, *occ);
    if (!dr1_feasible(dr))
        throw ContractError("k10: block occupancy feasible but DR(1) strip sums disagree");
    // Strips without a selected block had their strip total forced to 0.
    for (int q = 1; q <= inst.n; ++q)
        if (!dr.row_sums.count(q) && inst.row_sums[q - 1] != 0)
            throw ContractError("k10: nonzero row sum outside the selected strips");
    for (int p = 1; p <= inst.m; ++p)
        if (!dr.col_sums.count(p) && inst.col_sums[p - 1] != 0)
            throw ContractError("k10: nonzero column sum outside the selected strips");
    return feasible(Method::K10, dr1_construct(dr));
}

SolveResult solve_rec_kv2(const RecInstance& inst)
{
    require_class(inst, SolveClass::KV2, "kv2");
    const int k = inst.k;
    TransportProblem tp;
    tp.m = inst.m;
    tp.n = inst.n;
    tp.row_sums = inst.row_sums;
    tp.col_sums = inst.col_sums;
    for (const auto& c : corner_points(inst.m, inst.n, k)) {
        const int cap = std::min(1, inst.block_value(c));
        for (int l = 0; l < k; ++l) {
            CapacityGroup g;
            g.cap = cap;
            for (int a = 0; a < k; ++a)
                g.cells.push_back({c.p + a, c.q + l});
            tp.groups.push_back(std::move(g));
        }
    }
    auto x = solve_transport(tp);
    if (!x)
        return infeasible(Method::KV2);
    return feasible(Method::KV2, std::move(*x));
}

SolveResult solve(const RecInstance& inst, Method method, const OracleLimits& lim)
{
    inst.validate();
    if (method == Method::AUTO) {
        switch (classify(inst)) {
        case SolveClass::REC1: method = Method::REC1; break;
        case SolveClass::K10: method = Method::K10; break;
        case SolveClass::KV2: method = Method::KV2; break;
        case SolveClass::UNKNOWN: method = Method::ORACLE; break;
        }
    }

    SolveResult result;
    switch (method) {
    case Method::REC1: result = solve_rec1(inst); break;
    case Method::K10: result = solve_rec_k10(inst); break;
    case Method::KV2: result = solve_rec_kv2(inst); break;
    case Method::ORACLE: {
        auto o = oracle_solve(inst, lim);
        result.method = Method::ORACLE;
        if (o.status == OracleStatus::FEASIBLE) {
            result.status = SolveStatus::FEASIBLE;
            result.image = std::move(o.image);
        }
        else
            result.status = o.status == OracleStatus::LIMIT ? SolveStatus::ORACLE_LIMIT : SolveStatus::INFEASIBLE;
        break;
    }
    case Method::AUTO: break;
    }

    if (result.status == SolveStatus::FEASIBLE) {
        const auto report = verify_rec(inst, *result.image);
        if (!report.ok())
            throw ContractError(to_string(result.method) + " returned an image failing verification: "
                                + describe(report.violations.front()));
    }
    return result;
}

} // namespace tomo
