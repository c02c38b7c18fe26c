#pragma once

#include "tomo/grid.hpp"

#include <string>
#include <variant>
#include <vector>

namespace tomo {

namespace violation {

struct RowSum
{
    int q;
    int expected;
    int actual;
    friend bool operator==(const RowSum&, const RowSum&) = default;
};

struct ColSum
{
    int p;
    int expected;
    int actual;
    friend bool operator==(const ColSum&, const ColSum&) = default;
};

struct BlockCap
{
    int i;
    int j;
    int cap;
    int actual;
    friend bool operator==(const BlockCap&, const BlockCap&) = default;
};

struct PatternViolation
{
    int i;
    int j;
    Pattern pattern;
    friend bool operator==(const PatternViolation&, const PatternViolation&) = default;
};

struct WindowRel
{
    int i;
    int j;
    Relation rel;
    int value;
    int actual;
    friend bool operator==(const WindowRel&, const WindowRel&) = default;
};

} // namespace violation

using Violation = std::variant<violation::RowSum, violation::ColSum, violation::BlockCap,
                               violation::PatternViolation, violation::WindowRel>;

std::string describe(const Violation& v);

/// Every violated constraint, in order: rows, columns, then per block/window
/// in anchor order. Empty iff the candidate is feasible.
struct ViolationReport
{
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }
    std::size_t size() const noexcept { return violations.size(); }

    template <typename T>
    std::size_t count() const
    {
        std::size_t c = 0;
        for (const auto& v : violations)
            c += std::holds_alternative<T>(v) ? 1 : 0;
        return c;
    }
};

/// Checks x against a Rec instance. Throws InputError on dimension mismatch.
ViolationReport verify_rec(const RecInstance& inst, const BinaryImage& x);

/// Checks x against a WRec instance; overlapping windows are checked
/// independently.
ViolationReport verify_wrec(const WRecInstance& inst, const BinaryImage& x);

} // namespace tomo
