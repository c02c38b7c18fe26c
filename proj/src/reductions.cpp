#include "tomo/reductions.hpp"

#include "tomo/error.hpp"

namespace tomo {

namespace {

void check_line(const std::vector<int>& v, int len, const char* what)
{
    if (static_cast<int>(v.size()) != len)
        throw InputError(std::string(what) + " has the wrong length");
    for (int s : v)
        if (s < 0)
            throw InputError(std::string(what) + " must be nonnegative");
}

// Source line s (1-based, two per strip) -> target line for window side K.
int corner_line(int s, int K)
{
    const int strip = (s - 1) / 2;
    const int off = (s - 1) % 2;
    return strip * K + 1 + (off == 0 ? 0 : K - 1);
}

int leading_line(int s, int K)
{
    return ((s - 1) / 2) * K + 1 + (s - 1) % 2;
}

void check_target(int target_k)
{
    if (target_k < 2)
        throw InputError("target window side must be at least 2");
}

void check_strip_pad_source(const WRecInstance& inst)
{
    inst.validate();
    if (inst.k != 2)
        throw InputError("padding expects a k=2 source instance");
    if (inst.t != 0)
        throw InputError("padding expects an unconstrained-pattern (t=0) source instance");
    for (const auto& [a, w] : inst.windows)
        if ((a.p - 1) % 2 != 0 || (a.q - 1) % 2 != 0)
            throw InputError("window at " + to_string(a) + " is not block-aligned");
}

WRecInstance strip_pad(const WRecInstance& inst, int K, bool fill)
{
    check_target(K);
    check_strip_pad_source(inst);
    WRecInstance out;
    out.k = K;
    out.t = 0;
    out.m = inst.m / 2 * K;
    out.n = inst.n / 2 * K;
    const int pad_cols = out.m - inst.m;
    const int pad_rows = out.n - inst.n;
    out.row_sums.assign(static_cast<std::size_t>(out.n), fill ? out.m : 0);
    out.col_sums.assign(static_cast<std::size_t>(out.m), fill ? out.n : 0);
    for (int q = 1; q <= inst.n; ++q)
        out.row_sums[leading_line(q, K) - 1] = inst.row_sums[q - 1] + (fill ? pad_cols : 0);
    for (int p = 1; p <= inst.m; ++p)
        out.col_sums[leading_line(p, K) - 1] = inst.col_sums[p - 1] + (fill ? pad_rows : 0);
    const int shift = fill ? K * K - 4 : 0;
    for (const auto& [a, w] : inst.windows)
        out.windows[Corner{leading_line(a.p, K), leading_line(a.q, K)}] = {w.rel, w.value + shift};
    return out;
}

} // namespace

void ThreeColorInstance::validate() const
{
    if (m < 1 || n < 1)
        throw InputError("three-color grid must be nonempty");
    check_line(r1, n, "color-1 row sums");
    check_line(r2, n, "color-2 row sums");
    check_line(c1, m, "color-1 column sums");
    check_line(c2, m, "color-2 column sums");
}

bool three_color_check(const ThreeColorInstance& tc, const ThreeColorSolution& s)
{
    tc.validate();
    for (const auto* x : {&s.xi1, &s.xi2})
        if (x->width() != tc.m || x->height() != tc.n)
            return false;
    for (int q = 1; q <= tc.n; ++q)
        for (int p = 1; p <= tc.m; ++p)
            if (s.xi1.at(p, q) && s.xi2.at(p, q))
                return false;
    return s.xi1.row_sums() == tc.r1 && s.xi2.row_sums() == tc.r2 && s.xi1.col_sums() == tc.c1
           && s.xi2.col_sums() == tc.c2;
}

RecInstance three_color_to_rec(const ThreeColorInstance& tc)
{
    tc.validate();
    RecInstance out;
    out.k = 2;
    out.nu = 1;
    out.t = 1;
    out.m = 2 * tc.m;
    out.n = 2 * tc.n;
    out.row_sums.resize(static_cast<std::size_t>(out.n));
    out.col_sums.resize(static_cast<std::size_t>(out.m));
    for (int q = 1; q <= tc.n; ++q) {
        out.row_sums[2 * q - 2] = tc.r1[q - 1];
        out.row_sums[2 * q - 1] = tc.r2[q - 1];
    }
    for (int p = 1; p <= tc.m; ++p) {
        out.col_sums[2 * p - 2] = tc.c1[p - 1];
        out.col_sums[2 * p - 1] = tc.c2[p - 1];
    }
    out.block_values.assign(static_cast<std::size_t>(tc.m) * tc.n, 1);
    return out;
}

ThreeColorSolution decode_three_color(const BinaryImage& x)
{
    if (x.width() % 2 != 0 || x.height() % 2 != 0)
        throw InputError("three-color decoding needs even dimensions");
    const int m = x.width() / 2;
    const int n = x.height() / 2;
    ThreeColorSolution s{BinaryImage(m, n), BinaryImage(m, n)};
    for (int q = 1; q <= n; ++q) {
        for (int p = 1; p <= m; ++p) {
            const auto pat = pattern_of(x, 2 * p - 1, 2 * q - 1, 2);
            if (pat.empty())
                continue;
            if (pat.size() == 1 && pat.contains({0, 0}))
                s.xi1.set(p, q, true);
            else if (pat.size() == 1 && pat.contains({1, 1}))
                s.xi2.set(p, q, true);
            else
                throw InputError("block " + to_string(Cell{2 * p - 1, 2 * q - 1}) + " is not a three-color block type");
        }
    }
    return s;
}

BinaryImage encode_three_color(const ThreeColorSolution& s)
{
    const int m = s.xi1.width();
    const int n = s.xi1.height();
    if (s.xi2.width() != m || s.xi2.height() != n)
        throw InputError("color images differ in size");
    BinaryImage x(2 * m, 2 * n);
    for (int q = 1; q <= n; ++q)
        for (int p = 1; p <= m; ++p) {
            if (s.xi1.at(p, q) && s.xi2.at(p, q))
                throw InputError("colors overlap at " + to_string(Cell{p, q}));
            if (s.xi1.at(p, q))
                x.set(2 * p - 1, 2 * q - 1, true);
            if (s.xi2.at(p, q))
                x.set(2 * p, 2 * q, true);
        }
    return x;
}

RecInstance pad_to_k(const RecInstance& inst, int target_k)
{
    inst.validate();
    if (inst.k != 2)
        throw InputError("pad_to_k expects a k=2 source instance");
    check_target(target_k);
    RecInstance out;
    out.k = target_k;
    out.nu = inst.nu;
    out.t = inst.t;
    out.m = inst.m / 2 * target_k;
    out.n = inst.n / 2 * target_k;
    out.row_sums.assign(static_cast<std::size_t>(out.n), 0);
    out.col_sums.assign(static_cast<std::size_t>(out.m), 0);
    for (int q = 1; q <= inst.n; ++q)
        out.row_sums[corner_line(q, target_k) - 1] = inst.row_sums[q - 1];
    for (int p = 1; p <= inst.m; ++p)
        out.col_sums[corner_line(p, target_k) - 1] = inst.col_sums[p - 1];
    out.block_values = inst.block_values;
    return out;
}

BinaryImage pad_to_k_embed(const BinaryImage& x, int target_k)
{
    check_target(target_k);
    if (x.width() % 2 != 0 || x.height() % 2 != 0)
        throw InputError("pad_to_k source image needs even dimensions");
    BinaryImage out(x.width() / 2 * target_k, x.height() / 2 * target_k);
    for (int q = 1; q <= x.height(); ++q)
        for (int p = 1; p <= x.width(); ++p)
            if (x.at(p, q))
                out.set(corner_line(p, target_k), corner_line(q, target_k), true);
    return out;
}

BinaryImage pad_to_k_extract(const BinaryImage& x, int target_k)
{
    check_target(target_k);
    if (x.width() % target_k != 0 || x.height() % target_k != 0)
        throw InputError("padded image is not a multiple of the window side");
    BinaryImage out(x.width() / target_k * 2, x.height() / target_k * 2);
    for (int q = 1; q <= out.height(); ++q)
        for (int p = 1; p <= out.width(); ++p)
            out.set(p, q, x.at(corner_line(p, target_k), corner_line(q, target_k)));
    return out;
}

WRecInstance t1_invert(const WRecInstance& inst)
{
    inst.validate();
    if (inst.t == 1)
        throw InputError("color inversion of pattern class t=1 has no representation");
    const int area = inst.k * inst.k;
    WRecInstance out;
    out.k = inst.k;
    out.m = inst.m;
    out.n = inst.n;
    if (inst.k == 1)
        out.t = inst.t;  // P(1,2) is all of P(1,0) and closed under complement
    else
        out.t = inst.t == 2 ? 3 : inst.t == 3 ? 2 : 0;
    out.row_sums.reserve(inst.row_sums.size());
    for (int r : inst.row_sums)
        out.row_sums.push_back(inst.m - r);
    out.col_sums.reserve(inst.col_sums.size());
    for (int c : inst.col_sums)
        out.col_sums.push_back(inst.n - c);
    for (const auto& [a, w] : inst.windows) {
        if (w.value > area)
            throw InputError("window value " + std::to_string(w.value) + " exceeds the window area");
        Relation rel = w.rel;
        if (rel == Relation::LE)
            rel = Relation::GE;
        else if (rel == Relation::GE)
            rel = Relation::LE;
        out.windows[a] = {rel, area - w.value};
    }
    for (int r : out.row_sums)
        if (r < 0)
            throw InputError("row sum exceeds the row length");
    for (int c : out.col_sums)
        if (c < 0)
            throw InputError("column sum exceeds the column length");
    return out;
}

WRecInstance t2_zero_pad(const WRecInstance& inst, int target_k)
{
    return strip_pad(inst, target_k, false);
}

WRecInstance t3_one_pad(const WRecInstance& inst, int target_k)
{
    return strip_pad(inst, target_k, true);
}

BinaryImage strip_pad_embed(const BinaryImage& x, int target_k, bool fill)
{
    check_target(target_k);
    if (x.width() % 2 != 0 || x.height() % 2 != 0)
        throw InputError("padding source image needs even dimensions");
    BinaryImage out(x.width() / 2 * target_k, x.height() / 2 * target_k);
    if (fill)
        for (int q = 1; q <= out.height(); ++q)
            for (int p = 1; p <= out.width(); ++p)
                if ((p - 1) % target_k >= 2 || (q - 1) % target_k >= 2)
                    out.set(p, q, true);
    for (int q = 1; q <= x.height(); ++q)
        for (int p = 1; p <= x.width(); ++p)
            out.set(leading_line(p, target_k), leading_line(q, target_k), x.at(p, q));
    return out;
}

BinaryImage strip_pad_extract(const BinaryImage& x, int target_k)
{
    check_target(target_k);
    if (x.width() % target_k != 0 || x.height() % target_k != 0)
        throw InputError("padded image is not a multiple of the window side");
    BinaryImage out(x.width() / target_k * 2, x.height() / target_k * 2);
    for (int q = 1; q <= out.height(); ++q)
        for (int p = 1; p <= out.width(); ++p)
            out.set(p, q, x.at(leading_line(p, target_k), leading_line(q, target_k)));
    return out;
}

} // namespace tomo
