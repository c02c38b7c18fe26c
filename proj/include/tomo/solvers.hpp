#pragma once

#include "tomo/dr1.hpp"
#include "tomo/grid.hpp"
#include "tomo/oracle.hpp"

#include <optional>
#include <string>

namespace tomo {

enum class Method
{
    AUTO,
    REC1,
    K10,
    KV2,
    ORACLE
};

enum class SolveClass
{
    REC1,
    K10,
    KV2,
    UNKNOWN
};

enum class SolveStatus
{
    FEASIBLE,
    INFEASIBLE,
    ORACLE_LIMIT
};

std::string to_string(Method m);
std::string to_string(SolveClass c);
std::string to_string(SolveStatus s);

struct SolveResult
{
    SolveStatus status = SolveStatus::INFEASIBLE;
    Method method = Method::AUTO;  // the method that actually ran
    std::optional<BinaryImage> image;
};

/// Block occupancy eta on the corner grid (corner order).
struct BlockOccupancy
{
    int blocks_x = 0;
    int blocks_y = 0;
    std::vector<std::uint8_t> eta;
};

/// REC1 iff k=1; K10 iff k>=2, nu=1, t=0; KV2 iff k>=2, t=2, nu>=k.
SolveClass classify(const RecInstance& inst);

/// k = 1: zero blocks become forbidden cells, then plain transport.
SolveResult solve_rec1(const RecInstance& inst);

/// Step 1 of the nu=1, t=0 algorithm: which blocks hold a 1. Transport on the
/// corner grid with strip sums, blocks with v=0 forbidden.
std::optional<BlockOccupancy> k10_block_occupancy(const RecInstance& inst);

/// DR(1) instance induced by a block occupancy: I = {eta = 1} with the
/// original sums restricted to the strips of I.
DR1Instance k10_dr1_instance(const RecInstance& inst, const BlockOccupancy& eta);

/// k >= 2, nu = 1, t = 0: block occupancy, then DR(1) placement.
SolveResult solve_rec_k10(const RecInstance& inst);

/// k >= 2, t = 2, nu >= k: each block row becomes a capacity group of
/// min(1, v), solved as one transport.
SolveResult solve_rec_kv2(const RecInstance& inst);

/// Front end. AUTO dispatches by classify(); UNKNOWN falls back to the
/// oracle. Forcing a method that does not apply throws InputError. Every
/// FEASIBLE image is re-verified before return.
SolveResult solve(const RecInstance& inst, Method method = Method::AUTO, const OracleLimits& lim = {});

} // namespace tomo
