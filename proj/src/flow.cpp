#include "tomo/flow.hpp"

#include "tomo/error.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>

namespace tomo {

namespace {

// Dinic max-flow: BFS level graph, DFS blocking flow. Arcs are visited in
// insertion order so the result depends only on the construction order.
class MaxFlow
{
public:
    explicit MaxFlow(int nodes) : adj_(static_cast<std::size_t>(nodes)) {}

    int add_arc(int from, int to, int cap)
    {
        const int id = static_cast<int>(arcs_.size());
        arcs_.push_back({to, cap});
        adj_[from].push_back(id);
        arcs_.push_back({from, 0});
        adj_[to].push_back(id + 1);
        return id;
    }

    long long run(int s, int t)
    {
        long long total = 0;
        level_.resize(adj_.size());
        next_.resize(adj_.size());
        while (bfs(s, t)) {
            std::fill(next_.begin(), next_.end(), 0);
            while (int f = augment(s, t, std::numeric_limits<int>::max()))
                total += f;
        }
        return total;
    }

    bool saturated(int arc) const { return arcs_[arc].cap == 0; }

private:
    struct Arc
    {
        int to;
        int cap;
    };

    bool bfs(int s, int t)
    {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<int> todo;
        level_[s] = 0;
        todo.push(s);
        while (!todo.empty()) {
            const int u = todo.front();
            todo.pop();
            for (int id : adj_[u]) {
                const auto& a = arcs_[id];
                if (a.cap > 0 && level_[a.to] < 0) {
                    level_[a.to] = level_[u] + 1;
                    todo.push(a.to);
                }
            }
        }
        return level_[t] >= 0;
    }

    int augment(int u, int t, int limit)
    {
        if (u == t)
            return limit;
        for (auto& i = next_[u]; i < static_cast<int>(adj_[u].size()); ++i) {
            const int id = adj_[u][i];
            auto& a = arcs_[id];
            if (a.cap <= 0 || level_[a.to] != level_[u] + 1)
                continue;
            if (int f = augment(a.to, t, std::min(limit, a.cap)); f > 0) {
                a.cap -= f;
                arcs_[id ^ 1].cap += f;
                return f;
            }
        }
        return 0;
    }

    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> level_;
    std::vector<int> next_;
};

} // namespace

void TransportProblem::validate() const
{
    if (m < 1 || n < 1)
        throw InputError("transport grid must be nonempty");
    if (static_cast<int>(row_sums.size()) != n || static_cast<int>(col_sums.size()) != m)
        throw InputError("transport sums do not match the grid");
    for (int r : row_sums)
        if (r < 0)
            throw InputError("row sums must be nonnegative");
    for (int c : col_sums)
        if (c < 0)
            throw InputError("column sums must be nonnegative");
    auto inside = [this](const Cell& c) { return c.p >= 1 && c.p <= m && c.q >= 1 && c.q <= n; };
    for (const auto& c : forbidden)
        if (!inside(c))
            throw InputError("forbidden cell " + to_string(c) + " outside the grid");
    std::set<Cell> seen;
    for (const auto& g : groups) {
        if (g.cap < 0)
            throw InputError("group cap must be nonnegative");
        if (g.cells.empty())
            continue;
        const int row = g.cells.front().q;
        for (const auto& c : g.cells) {
            if (!inside(c))
                throw InputError("group cell " + to_string(c) + " outside the grid");
            if (c.q != row)
                throw InputError("group spans more than one row");
            if (!seen.insert(c).second)
                throw InputError("groups overlap at " + to_string(c));
        }
    }
}

std::optional<BinaryImage> solve_transport(const TransportProblem& tp)
{
    tp.validate();
    const long long total_r = std::accumulate(tp.row_sums.begin(), tp.row_sums.end(), 0LL);
    const long long total_c = std::accumulate(tp.col_sums.begin(), tp.col_sums.end(), 0LL);
    if (total_r != total_c)
        return std::nullopt;

    const int m = tp.m;
    const int n = tp.n;
    const int groups = static_cast<int>(tp.groups.size());
    const int source = 0;
    auto col_node = [](int p) { return p; };
    auto row_node = [m](int q) { return m + q; };
    auto group_node = [m, n](int g) { return m + n + 1 + g; };
    const int sink = m + n + 1 + groups;

    // cell -> group index, -1 when ungrouped
    std::vector<int> group_of(static_cast<std::size_t>(m) * n, -1);
    auto idx = [m](int p, int q) { return static_cast<std::size_t>(q - 1) * m + (p - 1); };
    for (int g = 0; g < groups; ++g)
        for (const auto& c : tp.groups[g].cells)
            group_of[idx(c.p, c.q)] = g;

    MaxFlow net(sink + 1);
    for (int p = 1; p <= m; ++p)
        net.add_arc(source, col_node(p), tp.col_sums[p - 1]);

    std::vector<int> cell_arc(static_cast<std::size_t>(m) * n, -1);
    for (int q = 1; q <= n; ++q) {
        for (int p = 1; p <= m; ++p) {
            if (tp.forbidden.count(Cell{p, q}))
                continue;
            const int g = group_of[idx(p, q)];
            const int head = g < 0 ? row_node(q) : group_node(g);
            cell_arc[idx(p, q)] = net.add_arc(col_node(p), head, 1);
        }
    }
    for (int g = 0; g < groups; ++g)
        if (!tp.groups[g].cells.empty())
            net.add_arc(group_node(g), row_node(tp.groups[g].cells.front().q), tp.groups[g].cap);
    for (int q = 1; q <= n; ++q)
        net.add_arc(row_node(q), sink, tp.row_sums[q - 1]);

    if (net.run(source, sink) != total_r)
        return std::nullopt;

    BinaryImage x(m, n);
    for (int q = 1; q <= n; ++q)
        for (int p = 1; p <= m; ++p)
            if (const int a = cell_arc[idx(p, q)]; a >= 0 && net.saturated(a))
                x.set(p, q, true);
    return x;
}

} // namespace tomo
