#include "tomo/grid.hpp"

#include "tomo/error.hpp"

#include <algorithm>

namespace tomo {

std::string to_string(const Cell& c)
{
    return "(" + std::to_string(c.p) + "," + std::to_string(c.q) + ")";
}

std::string to_string(Relation rel)
{
    switch (rel) {
    case Relation::LE: return "<=";
    case Relation::GE: return ">=";
    case Relation::EQ: return "=";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// BinaryImage

BinaryImage::BinaryImage(int m, int n) : m_(m), n_(n)
{
    if (m < 1 || n < 1)
        throw InputError("image dimensions must be positive");
    bits_.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(n), 0);
}

std::size_t BinaryImage::index(int p, int q) const
{
    if (!contains(p, q))
        throw InputError("cell " + to_string(Cell{p, q}) + " outside " + std::to_string(m_) + "x"
                         + std::to_string(n_) + " image");
    return static_cast<std::size_t>(q - 1) * static_cast<std::size_t>(m_) + static_cast<std::size_t>(p - 1);
}

int BinaryImage::row_sum(int q) const
{
    int s = 0;
    for (int p = 1; p <= m_; ++p)
        s += at(p, q);
    return s;
}

int BinaryImage::col_sum(int p) const
{
    int s = 0;
    for (int q = 1; q <= n_; ++q)
        s += at(p, q);
    return s;
}

int BinaryImage::count() const
{
    return static_cast<int>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::vector<int> BinaryImage::row_sums() const
{
    std::vector<int> out(static_cast<std::size_t>(n_), 0);
    for (int q = 1; q <= n_; ++q)
        for (int p = 1; p <= m_; ++p)
            out[q - 1] += bits_[static_cast<std::size_t>(q - 1) * m_ + (p - 1)];
    return out;
}

std::vector<int> BinaryImage::col_sums() const
{
    std::vector<int> out(static_cast<std::size_t>(m_), 0);
    for (int q = 1; q <= n_; ++q)
        for (int p = 1; p <= m_; ++p)
            out[p - 1] += bits_[static_cast<std::size_t>(q - 1) * m_ + (p - 1)];
    return out;
}

BinaryImage BinaryImage::complement() const
{
    BinaryImage out = *this;
    for (auto& b : out.bits_)
        b = b ? 0 : 1;
    return out;
}

// ---------------------------------------------------------------------------
// Pattern

Pattern::Pattern(int k, std::vector<Offset> offsets) : k_(k), offsets_(std::move(offsets))
{
    if (k < 1)
        throw InputError("pattern window side must be positive");
    for (const auto& o : offsets_)
        if (o.dx < 0 || o.dx >= k || o.dy < 0 || o.dy >= k)
            throw InputError("pattern offset outside [k-1]_0^2");
    std::sort(offsets_.begin(), offsets_.end());
    offsets_.erase(std::unique(offsets_.begin(), offsets_.end()), offsets_.end());
}

Pattern Pattern::from_mask(int k, std::uint32_t mask)
{
    std::vector<Offset> offs;
    for (int dy = 0; dy < k; ++dy)
        for (int dx = 0; dx < k; ++dx)
            if (mask & (std::uint32_t{1} << (dy * k + dx)))
                offs.push_back({dx, dy});
    return Pattern(k, std::move(offs));
}

bool Pattern::contains(Offset o) const
{
    return std::binary_search(offsets_.begin(), offsets_.end(), o);
}

int Pattern::row_count(int dy) const
{
    return static_cast<int>(std::count_if(offsets_.begin(), offsets_.end(), [dy](const Offset& o) { return o.dy == dy; }));
}

std::uint32_t Pattern::mask() const
{
    if (k_ > 5)
        throw ResourceError("pattern mask needs k <= 5");
    std::uint32_t mask = 0;
    for (const auto& o : offsets_)
        mask |= std::uint32_t{1} << (o.dy * k_ + o.dx);
    return mask;
}

PatternClass::PatternClass(int k_, int t_) : k(k_), t(t_)
{
    if (k < 1)
        throw InputError("pattern class needs k >= 1");
    if (t < 0 || t > 3)
        throw InputError("pattern class t must be in {0,1,2,3}");
    if (t == 3 && k < 2)
        throw InputError("pattern class t=3 needs k >= 2");
}

// ---------------------------------------------------------------------------
// Instances

namespace {

void check_sums(const std::vector<int>& sums, int expected_len, const char* what)
{
    if (static_cast<int>(sums.size()) != expected_len)
        throw InputError(std::string(what) + " has " + std::to_string(sums.size()) + " entries, expected "
                         + std::to_string(expected_len));
    for (int s : sums)
        if (s < 0)
            throw InputError(std::string(what) + " must be nonnegative");
}

void check_dims(int k, int m, int n)
{
    if (k < 1)
        throw InputError("k must be positive");
    if (m < 1 || n < 1)
        throw InputError("m and n must be positive");
    if (m % k != 0 || n % k != 0)
        throw InputError("m and n must be divisible by k");
}

} // namespace

void RecInstance::validate() const
{
    check_dims(k, m, n);
    if (nu < 1)
        throw InputError("nu must be positive");
    if (t < 0 || t > 2)
        throw InputError("Rec pattern class t must be in {0,1,2}");
    check_sums(row_sums, n, "row sums");
    check_sums(col_sums, m, "column sums");
    const auto expected = static_cast<std::size_t>(blocks_x()) * static_cast<std::size_t>(blocks_y());
    if (block_values.size() != expected)
        throw InputError("expected " + std::to_string(expected) + " block values, got "
                         + std::to_string(block_values.size()));
    for (int v : block_values)
        if (v != 0 && v != nu)
            throw InputError("block value " + std::to_string(v) + " not in {0, nu}");
}

int RecInstance::block_value(Corner c) const
{
    if (c.p < 1 || c.q < 1 || (c.p - 1) % k != 0 || (c.q - 1) % k != 0 || c.p > m || c.q > n)
        throw InputError("not a corner point: " + to_string(c));
    return block_values[static_cast<std::size_t>((c.q - 1) / k) * blocks_x() + (c.p - 1) / k];
}

void RecInstance::set_block_value(Corner c, int v)
{
    if (c.p < 1 || c.q < 1 || (c.p - 1) % k != 0 || (c.q - 1) % k != 0 || c.p > m || c.q > n)
        throw InputError("not a corner point: " + to_string(c));
    block_values[static_cast<std::size_t>((c.q - 1) / k) * blocks_x() + (c.p - 1) / k] = v;
}

void WRecInstance::validate() const
{
    check_dims(k, m, n);
    PatternClass cls(k, t);
    check_sums(row_sums, n, "row sums");
    check_sums(col_sums, m, "column sums");
    for (const auto& [a, w] : windows) {
        if (a.p < 1 || a.q < 1 || a.p + k - 1 > m || a.q + k - 1 > n)
            throw InputError("window at " + to_string(a) + " exceeds the grid");
        if (w.value < 0)
            throw InputError("window value must be nonnegative");
    }
}

// ---------------------------------------------------------------------------
// Geometry

std::vector<Corner> corner_points(int m, int n, int k)
{
    check_dims(k, m, n);
    std::vector<Corner> out;
    out.reserve(static_cast<std::size_t>(m / k) * static_cast<std::size_t>(n / k));
    for (int j = 1; j <= n; j += k)
        for (int i = 1; i <= m; i += k)
            out.push_back({i, j});
    return out;
}

std::vector<Cell> window_cells(int i, int j, int k)
{
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(k) * k);
    for (int b = 0; b < k; ++b)
        for (int a = 0; a < k; ++a)
            out.push_back({i + a, j + b});
    return out;
}

Pattern pattern_of(const BinaryImage& x, int i, int j, int k)
{
    if (k < 1 || !x.contains(i, j) || !x.contains(i + k - 1, j + k - 1))
        throw InputError("window at " + to_string(Cell{i, j}) + " outside the image");
    std::vector<Offset> offs;
    for (int b = 0; b < k; ++b)
        for (int a = 0; a < k; ++a)
            if (x.at(i + a, j + b))
                offs.push_back({a, b});
    return Pattern(k, std::move(offs));
}

bool pattern_member(const Pattern& pattern, const PatternClass& cls)
{
    const int k = cls.k;
    if (cls.t == 3 && k < 2)
        throw InputError("pattern class t=3 needs k >= 2");
    if (pattern.k() != k)
        throw InputError("pattern window size does not match the class");
    switch (cls.t) {
    case 0:
        return true;
    case 1: {
        const auto& o = pattern.offsets();
        if (o.empty())
            return true;
        if (o.size() != 1)
            return false;
        return o[0] == Offset{0, 0} || o[0] == Offset{k - 1, k - 1};
    }
    case 2:
        for (int dy = 0; dy < k; ++dy)
            if (pattern.row_count(dy) > 1)
                return false;
        return true;
    case 3:
        for (int dy = 0; dy < k; ++dy)
            if (pattern.row_count(dy) < k - 1)
                return false;
        return true;
    default:
        throw InputError("pattern class t must be in {0,1,2,3}");
    }
}

std::vector<Pattern> pattern_enumerate(const PatternClass& cls)
{
    if (cls.k > kMaxEnumerateK)
        throw ResourceError("pattern enumeration limited to k <= " + std::to_string(kMaxEnumerateK));
    const std::uint32_t total = std::uint32_t{1} << (cls.k * cls.k);
    std::vector<Pattern> out;
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        auto p = Pattern::from_mask(cls.k, mask);
        if (pattern_member(p, cls))
            out.push_back(std::move(p));
    }
    return out;
}

int strip_rank(const std::set<Corner>& corners, Axis axis, int i, int j)
{
    int count = 0;
    for (const auto& c : corners) {
        if (axis == Axis::VERTICAL && c.p == i && c.q <= j)
            ++count;
        else if (axis == Axis::HORIZONTAL && c.q == j && c.p <= i)
            ++count;
    }
    return count;
}

Region region_and_projections(const std::set<Corner>& corners, int k)
{
    Region r;
    for (const auto& c : corners) {
        for (const auto& cell : window_cells(c.p, c.q, k))
            r.cells.insert(cell);
        r.xs.insert(c.p);
        r.ys.insert(c.q);
    }
    return r;
}

} // namespace tomo
