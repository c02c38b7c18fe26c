#pragma once

#include "tomo/grid.hpp"

#include <map>
#include <set>

namespace tomo {

/// Place exactly one 1 in every selected block so that the sums of the rows
/// and columns crossing the selected strips are met.
///
/// row_sums is keyed by absolute row index j+l for every j in Pi_y(I) and
/// l in [k-1]_0; col_sums likewise by column index.
struct DR1Instance
{
    int k = 1;
    int m = 0;
    int n = 0;
    std::set<Corner> blocks;
    std::map<int, int> row_sums;
    std::map<int, int> col_sums;

    /// Throws InputError unless every selected corner is on the lattice and
    /// the sum keys are exactly the rows/columns of the touched strips.
    void validate() const;
};

/// Strip-sum criterion: for every (i,j) in I the k row sums of strip j add up
/// to rho_j(m) and the k column sums of strip i add up to sigma_i(n).
bool dr1_feasible(const DR1Instance& inst);

/// Explicit solution. For each (i,j) in I, the 1 goes to (a,b) with
///   a = i + min{l : sigma_i(j) <= c_i + ... + c_{i+l}}
///   b = j + min{l : rho_j(i)   <= r_j + ... + r_{j+l}}
/// with l in [k-1]_0. Throws ContractError if the instance is infeasible.
BinaryImage dr1_construct(const DR1Instance& inst);

/// True iff x has exactly one 1 per selected block, none outside G(I), and
/// meets every strip-restricted row and column sum.
bool dr1_check(const DR1Instance& inst, const BinaryImage& x);

} // namespace tomo
