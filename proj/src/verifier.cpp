#include "tomo/verifier.hpp"

#include "tomo/error.hpp"

#include <sstream>

namespace tomo {

namespace {

void check_shape(int m, int n, const BinaryImage& x)
{
    if (x.width() != m || x.height() != n)
        throw InputError("solution is " + std::to_string(x.width()) + "x" + std::to_string(x.height())
                         + ", instance is " + std::to_string(m) + "x" + std::to_string(n));
}

void check_lines(const std::vector<int>& rows, const std::vector<int>& cols, const BinaryImage& x,
                 ViolationReport& report)
{
    const auto actual_rows = x.row_sums();
    for (std::size_t q = 0; q < rows.size(); ++q)
        if (actual_rows[q] != rows[q])
            report.violations.emplace_back(violation::RowSum{static_cast<int>(q) + 1, rows[q], actual_rows[q]});
    const auto actual_cols = x.col_sums();
    for (std::size_t p = 0; p < cols.size(); ++p)
        if (actual_cols[p] != cols[p])
            report.violations.emplace_back(violation::ColSum{static_cast<int>(p) + 1, cols[p], actual_cols[p]});
}

bool holds(Relation rel, int actual, int value)
{
    switch (rel) {
    case Relation::LE: return actual <= value;
    case Relation::GE: return actual >= value;
    case Relation::EQ: return actual == value;
    }
    return false;
}

} // namespace

std::string describe(const Violation& v)
{
    std::ostringstream os;
    std::visit(
        [&os](const auto& r) {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, violation::RowSum>)
                os << "row " << r.q << ": sum " << r.actual << ", expected " << r.expected;
            else if constexpr (std::is_same_v<T, violation::ColSum>)
                os << "column " << r.p << ": sum " << r.actual << ", expected " << r.expected;
            else if constexpr (std::is_same_v<T, violation::BlockCap>)
                os << "block " << to_string(Cell{r.i, r.j}) << ": " << r.actual << " ones, cap " << r.cap;
            else if constexpr (std::is_same_v<T, violation::PatternViolation>) {
                os << "window " << to_string(Cell{r.i, r.j}) << ": pattern {";
                bool first = true;
                for (const auto& o : r.pattern.offsets()) {
                    os << (first ? "" : ",") << "(" << o.dx << "," << o.dy << ")";
                    first = false;
                }
                os << "} not admissible";
            }
            else
                os << "window " << to_string(Cell{r.i, r.j}) << ": sum " << r.actual << " violates "
                   << to_string(r.rel) << " " << r.value;
        },
        v);
    return os.str();
}

ViolationReport verify_rec(const RecInstance& inst, const BinaryImage& x)
{
    inst.validate();
    check_shape(inst.m, inst.n, x);
    ViolationReport report;
    check_lines(inst.row_sums, inst.col_sums, x, report);

    const PatternClass cls(inst.k, inst.t);
    for (const auto& c : corner_points(inst.m, inst.n, inst.k)) {
        auto pat = pattern_of(x, c.p, c.q, inst.k);
        const int cap = inst.block_value(c);
        const int actual = static_cast<int>(pat.size());
        if (actual > cap)
            report.violations.emplace_back(violation::BlockCap{c.p, c.q, cap, actual});
        if (!pattern_member(pat, cls))
            report.violations.emplace_back(violation::PatternViolation{c.p, c.q, std::move(pat)});
    }
    return report;
}

ViolationReport verify_wrec(const WRecInstance& inst, const BinaryImage& x)
{
    inst.validate();
    check_shape(inst.m, inst.n, x);
    ViolationReport report;
    check_lines(inst.row_sums, inst.col_sums, x, report);

    const PatternClass cls(inst.k, inst.t);
    for (const auto& [a, w] : inst.windows) {
        auto pat = pattern_of(x, a.p, a.q, inst.k);
        const int actual = static_cast<int>(pat.size());
        if (!holds(w.rel, actual, w.value))
            report.violations.emplace_back(violation::WindowRel{a.p, a.q, w.rel, w.value, actual});
        if (!pattern_member(pat, cls))
            report.violations.emplace_back(violation::PatternViolation{a.p, a.q, std::move(pat)});
    }
    return report;
}

} // namespace tomo
