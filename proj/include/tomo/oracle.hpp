#pragma once

#include "tomo/grid.hpp"

#include <optional>
#include <vector>

namespace tomo {

struct OracleLimits
{
    long long max_cells = 36;
    long long max_nodes = 10'000'000;
};

enum class OracleStatus
{
    FEASIBLE,
    INFEASIBLE,
    LIMIT
};

struct OracleResult
{
    OracleStatus status = OracleStatus::INFEASIBLE;
    std::optional<BinaryImage> image;
    long long nodes = 0;
};

struct OracleEnumeration
{
    std::vector<BinaryImage> solutions;
    bool truncated = false;    // stopped at the solution cap
    bool limit = false;        // stopped by a size or node budget
    long long nodes = 0;
};

/// Exact depth-first search over cells in (q,p) order. Branches are cut when
/// a row, column or window can no longer meet its bounds, or when the decided
/// part of a window agrees with no admissible pattern. Tries 0 before 1, so
/// the first solution is the lexicographically smallest in that order.
OracleResult oracle_solve(const RecInstance& inst, const OracleLimits& lim = {});
OracleResult oracle_solve(const WRecInstance& inst, const OracleLimits& lim = {});

/// All solutions in search order, up to `cap` of them.
OracleEnumeration oracle_enumerate(const RecInstance& inst, const OracleLimits& lim, std::size_t cap);
OracleEnumeration oracle_enumerate(const WRecInstance& inst, const OracleLimits& lim, std::size_t cap);

} // namespace tomo
