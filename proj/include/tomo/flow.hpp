#pragma once

#include "tomo/grid.hpp"

#include <optional>
#include <set>
#include <vector>

namespace tomo {

/// Cells of one row sharing an upper bound on their total.
struct CapacityGroup
{
    std::vector<Cell> cells;
    int cap = 0;
};

/// Binary reconstruction from row and column sums with forbidden cells and
/// disjoint row-confined capacity groups.
struct TransportProblem
{
    int m = 0;
    int n = 0;
    std::vector<int> row_sums;  // r_1..r_n
    std::vector<int> col_sums;  // c_1..c_m
    std::set<Cell> forbidden;
    std::vector<CapacityGroup> groups;

    /// Throws InputError if a group leaves its row, groups overlap, or a cell
    /// is outside the grid.
    void validate() const;
};

/// Integral max-flow solution, or nullopt when infeasible.
///
/// Network: source -> column p (cap c_p) -> [group node, one arc per allowed
/// cell] -> row q -> sink (cap r_q). Group nodes feed their row with the
/// group's cap; ungrouped cells are direct column->row arcs. The returned
/// image is 1 exactly on saturated cell arcs. Deterministic.
std::optional<BinaryImage> solve_transport(const TransportProblem& tp);

} // namespace tomo
