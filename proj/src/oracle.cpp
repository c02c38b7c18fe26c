#include "tomo/oracle.hpp"

#include "tomo/error.hpp"

#include <map>
#include <memory>
#include <numeric>

namespace tomo {

namespace {

// prefix_ok[d][v] != 0 iff some admissible pattern has low d bits equal to v.
// Cells of a window are decided in (dy, dx) order, which is bit order.
struct PrefixTable
{
    std::vector<std::vector<std::uint8_t>> prefix_ok;
};

std::shared_ptr<const PrefixTable> make_prefix_table(const PatternClass& cls)
{
    const int bits = cls.k * cls.k;
    auto table = std::make_shared<PrefixTable>();
    table->prefix_ok.resize(static_cast<std::size_t>(bits) + 1);
    for (int d = 0; d <= bits; ++d)
        table->prefix_ok[d].assign(std::size_t{1} << d, 0);
    for (const auto& pat : pattern_enumerate(cls)) {
        const std::uint32_t mask = pat.mask();
        for (int d = 0; d <= bits; ++d)
            table->prefix_ok[d][mask & ((std::uint32_t{1} << d) - 1)] = 1;
    }
    return table;
}

struct Window
{
    int lo = 0;
    int hi = 0;
    int size = 0;
    std::shared_ptr<const PrefixTable> patterns;  // null: unconstrained
};

struct Membership
{
    int window;
    int bit;
};

struct Model
{
    int m = 0;
    int n = 0;
    std::vector<int> rows;
    std::vector<int> cols;
    std::vector<Window> windows;
    std::vector<std::vector<Membership>> cell_windows;  // by linear index (q-1)*m + (p-1)
};

Model base_model(int m, int n, const std::vector<int>& rows, const std::vector<int>& cols)
{
    Model md;
    md.m = m;
    md.n = n;
    md.rows = rows;
    md.cols = cols;
    md.cell_windows.resize(static_cast<std::size_t>(m) * n);
    return md;
}

void add_window(Model& md, Corner anchor, int k, int lo, int hi, std::shared_ptr<const PrefixTable> patterns)
{
    const int id = static_cast<int>(md.windows.size());
    md.windows.push_back({lo, hi, k * k, std::move(patterns)});
    for (int b = 0; b < k; ++b)
        for (int a = 0; a < k; ++a) {
            const auto idx = static_cast<std::size_t>(anchor.q + b - 1) * md.m + (anchor.p + a - 1);
            md.cell_windows[idx].push_back({id, b * k + a});
        }
}

std::shared_ptr<const PrefixTable> patterns_for(int k, int t)
{
    if (t == 0)
        return nullptr;
    return make_prefix_table(PatternClass(k, t));
}

Model build(const RecInstance& inst)
{
    inst.validate();
    Model md = base_model(inst.m, inst.n, inst.row_sums, inst.col_sums);
    auto pats = patterns_for(inst.k, inst.t);
    for (const auto& c : corner_points(inst.m, inst.n, inst.k))
        add_window(md, c, inst.k, 0, inst.block_value(c), pats);
    return md;
}

Model build(const WRecInstance& inst)
{
    inst.validate();
    Model md = base_model(inst.m, inst.n, inst.row_sums, inst.col_sums);
    auto pats = patterns_for(inst.k, inst.t);
    const int area = inst.k * inst.k;
    for (const auto& [a, w] : inst.windows) {
        switch (w.rel) {
        case Relation::LE: add_window(md, a, inst.k, 0, w.value, pats); break;
        case Relation::GE: add_window(md, a, inst.k, w.value, area, pats); break;
        case Relation::EQ: add_window(md, a, inst.k, w.value, w.value, pats); break;
        }
    }
    return md;
}

class Search
{
public:
    Search(const Model& md, long long max_nodes, std::size_t cap)
        : md_(md), max_nodes_(max_nodes), cap_(cap), x_(md.m, md.n)
    {
        row_count_.assign(md.rows.size(), 0);
        row_left_.assign(md.rows.size(), md.m);
        col_count_.assign(md.cols.size(), 0);
        col_left_.assign(md.cols.size(), md.n);
        win_count_.assign(md.windows.size(), 0);
        win_left_.resize(md.windows.size());
        win_bits_.assign(md.windows.size(), 0);
        for (std::size_t w = 0; w < md.windows.size(); ++w)
            win_left_[w] = md.windows[w].size;
    }

    void run()
    {
        if (!plausible())
            return;
        descend(0);
    }

    std::vector<BinaryImage> solutions;
    long long nodes = 0;
    bool limit = false;
    bool truncated = false;

private:
    bool plausible() const
    {
        const long long tr = std::accumulate(md_.rows.begin(), md_.rows.end(), 0LL);
        const long long tc = std::accumulate(md_.cols.begin(), md_.cols.end(), 0LL);
        if (tr != tc)
            return false;
        for (int r : md_.rows)
            if (r > md_.m)
                return false;
        for (int c : md_.cols)
            if (c > md_.n)
                return false;
        for (const auto& w : md_.windows)
            if (w.lo > w.size || w.lo > w.hi)
                return false;
        return true;
    }

    bool done() const { return limit || truncated; }

    void descend(int idx)
    {
        if (idx == md_.m * md_.n) {
            solutions.push_back(x_);
            if (solutions.size() >= cap_)
                truncated = true;
            return;
        }
        const int p = idx % md_.m + 1;
        const int q = idx / md_.m + 1;
        for (int v = 0; v <= 1 && !done(); ++v) {
            if (++nodes > max_nodes_) {
                limit = true;
                return;
            }
            if (assign(idx, p, q, v)) {
                if (v)
                    x_.set(p, q, true);
                descend(idx + 1);
                if (v)
                    x_.set(p, q, false);
            }
            unassign(idx, p, q, v);
        }
    }

    // Applies the assignment unconditionally and reports whether all touched
    // constraints can still be met. unassign() must follow either way.
    bool assign(int idx, int p, int q, int v)
    {
        bool ok = true;
        auto& rc = row_count_[q - 1];
        auto& rl = row_left_[q - 1];
        rc += v;
        --rl;
        ok = ok && rc <= md_.rows[q - 1] && rc + rl >= md_.rows[q - 1];
        auto& cc = col_count_[p - 1];
        auto& cl = col_left_[p - 1];
        cc += v;
        --cl;
        ok = ok && cc <= md_.cols[p - 1] && cc + cl >= md_.cols[p - 1];
        for (const auto& mem : md_.cell_windows[idx]) {
            const auto& w = md_.windows[mem.window];
            auto& wc = win_count_[mem.window];
            auto& wl = win_left_[mem.window];
            wc += v;
            --wl;
            if (v)
                win_bits_[mem.window] |= std::uint32_t{1} << mem.bit;
            ok = ok && wc <= w.hi && wc + wl >= w.lo;
            if (ok && w.patterns)
                ok = w.patterns->prefix_ok[mem.bit + 1][win_bits_[mem.window]] != 0;
        }
        return ok;
    }

    void unassign(int idx, int p, int q, int v)
    {
        row_count_[q - 1] -= v;
        ++row_left_[q - 1];
        col_count_[p - 1] -= v;
        ++col_left_[p - 1];
        for (const auto& mem : md_.cell_windows[idx]) {
            win_count_[mem.window] -= v;
            ++win_left_[mem.window];
            win_bits_[mem.window] &= ~(std::uint32_t{1} << mem.bit);
        }
    }

    const Model& md_;
    long long max_nodes_;
    std::size_t cap_;
    BinaryImage x_;
    std::vector<int> row_count_, row_left_, col_count_, col_left_;
    std::vector<int> win_count_, win_left_;
    std::vector<std::uint32_t> win_bits_;
};

template <typename Instance>
OracleEnumeration enumerate_impl(const Instance& inst, const OracleLimits& lim, std::size_t cap)
{
    if (lim.max_cells < 1 || lim.max_nodes < 1)
        throw InputError("oracle limits must be positive");
    OracleEnumeration out;
    inst.validate();
    if (static_cast<long long>(inst.m) * inst.n > lim.max_cells) {
        out.limit = true;
        return out;
    }
    Model md;
    try {
        md = build(inst);
    }
    catch (const ResourceError&) {
        out.limit = true;
        return out;
    }
    if (cap == 0) {
        out.truncated = true;
        return out;
    }
    Search s(md, lim.max_nodes, cap);
    s.run();
    out.solutions = std::move(s.solutions);
    out.truncated = s.truncated;
    out.limit = s.limit;
    out.nodes = s.nodes;
    return out;
}

template <typename Instance>
OracleResult solve_impl(const Instance& inst, const OracleLimits& lim)
{
    auto e = enumerate_impl(inst, lim, 1);
    OracleResult r;
    r.nodes = e.nodes;
    if (!e.solutions.empty()) {
        r.status = OracleStatus::FEASIBLE;
        r.image = std::move(e.solutions.front());
    }
    else if (e.limit)
        r.status = OracleStatus::LIMIT;
    else
        r.status = OracleStatus::INFEASIBLE;
    return r;
}

} // namespace

OracleResult oracle_solve(const RecInstance& inst, const OracleLimits& lim)
{
    return solve_impl(inst, lim);
}

OracleResult oracle_solve(const WRecInstance& inst, const OracleLimits& lim)
{
    return solve_impl(inst, lim);
}

OracleEnumeration oracle_enumerate(const RecInstance& inst, const OracleLimits& lim, std::size_t cap)
{
    return enumerate_impl(inst, lim, cap);
}

OracleEnumeration oracle_enumerate(const WRecInstance& inst, const OracleLimits& lim, std::size_t cap)
{
    return enumerate_impl(inst, lim, cap);
}

} // namespace tomo
