#include "tomo/dr1.hpp"

#include "tomo/error.hpp"

namespace tomo {

namespace {

std::set<int> strip_lines(const std::set<int>& starts, int k)
{
    std::set<int> out;
    for (int s : starts)
        for (int l = 0; l < k; ++l)
            out.insert(s + l);
    return out;
}

template <typename Map>
std::set<int> keys(const Map& m)
{
    std::set<int> out;
    for (const auto& [key, v] : m)
        out.insert(key);
    return out;
}

int strip_total(const std::map<int, int>& sums, int start, int k)
{
    int total = 0;
    for (int l = 0; l < k; ++l)
        total += sums.at(start + l);
    return total;
}

// Per-strip block counts: totals for each column strip i and row strip j.
struct StripCounts
{
    std::map<int, int> per_col;  // sigma_i(n)
    std::map<int, int> per_row;  // rho_j(m)
};

StripCounts count_strips(const std::set<Corner>& blocks)
{
    StripCounts s;
    for (const auto& c : blocks) {
        ++s.per_col[c.p];
        ++s.per_row[c.q];
    }
    return s;
}

} // namespace

void DR1Instance::validate() const
{
    if (k < 1 || m < 1 || n < 1 || m % k != 0 || n % k != 0)
        throw InputError("DR(1) grid must be positive and divisible by k");
    std::set<int> xs;
    std::set<int> ys;
    for (const auto& c : blocks) {
        if (c.p < 1 || c.q < 1 || c.p > m || c.q > n || (c.p - 1) % k != 0 || (c.q - 1) % k != 0)
            throw InputError("selected block " + to_string(c) + " is not a corner point");
        xs.insert(c.p);
        ys.insert(c.q);
    }
    if (keys(row_sums) != strip_lines(ys, k))
        throw InputError("DR(1) row sums must cover exactly the rows of the selected strips");
    if (keys(col_sums) != strip_lines(xs, k))
        throw InputError("DR(1) column sums must cover exactly the columns of the selected strips");
    for (const auto& [key, v] : row_sums)
        if (v < 0)
            throw InputError("DR(1) row sums must be nonnegative");
    for (const auto& [key, v] : col_sums)
        if (v < 0)
            throw InputError("DR(1) column sums must be nonnegative");
}

bool dr1_feasible(const DR1Instance& inst)
{
    inst.validate();
    const auto counts = count_strips(inst.blocks);
    for (const auto& c : inst.blocks) {
        if (strip_total(inst.row_sums, c.q, inst.k) != counts.per_row.at(c.q))
            return false;
        if (strip_total(inst.col_sums, c.p, inst.k) != counts.per_col.at(c.p))
            return false;
    }
    return true;
}

BinaryImage dr1_construct(const DR1Instance& inst)
{
    if (!dr1_feasible(inst))
        throw ContractError("dr1_construct called on an infeasible DR(1) instance");

    const int k = inst.k;
    BinaryImage x(inst.m, inst.n);
    // Corner order visits j ascending, and i ascending within j, so running
    // counters give sigma_i(j) and rho_j(i) directly.
    std::map<int, int> sigma;
    std::map<int, int> rho;
    for (const auto& c : inst.blocks) {
        const int s = ++sigma[c.p];
        const int r = ++rho[c.q];

        int a = -1;
        for (int l = 0, acc = 0; l < k; ++l) {
            acc += inst.col_sums.at(c.p + l);
            if (s <= acc) {
                a = c.p + l;
                break;
            }
        }
        int b = -1;
        for (int l = 0, acc = 0; l < k; ++l) {
            acc += inst.row_sums.at(c.q + l);
            if (r <= acc) {
                b = c.q + l;
                break;
            }
        }
        if (a < 0 || b < 0)
            throw ContractError("DR(1) placement out of strip at " + to_string(c));
        x.set(a, b, true);
    }
    return x;
}

bool dr1_check(const DR1Instance& inst, const BinaryImage& x)
{
    inst.validate();
    if (x.width() != inst.m || x.height() != inst.n)
        return false;
    const int k = inst.k;
    int inside = 0;
    for (const auto& c : inst.blocks) {
        int ones = 0;
        for (const auto& cell : window_cells(c.p, c.q, k))
            ones += x.at(cell);
        if (ones != 1)
            return false;
        inside += ones;
    }
    if (x.count() != inside)
        return false;
    for (const auto& [q, r] : inst.row_sums)
        if (x.row_sum(q) != r)
            return false;
    for (const auto& [p, c] : inst.col_sums)
        if (x.col_sum(p) != c)
            return false;
    return true;
}

} // namespace tomo
