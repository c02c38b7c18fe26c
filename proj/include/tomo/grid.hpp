#pragma once

// Grid geometry for binary-matrix reconstruction.
//
// Coordinates are Cartesian and 1-based: p is the column (x), q the row (y).
// Row 1 is the bottom row. Every ordered container in this library iterates
// cells row-major from the bottom: by q first, then by p.

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace tomo {

struct Cell
{
    int p = 0;
    int q = 0;

    friend bool operator==(const Cell&, const Cell&) = default;
    friend std::strong_ordering operator<=>(const Cell& a, const Cell& b)
    {
        if (auto c = a.q <=> b.q; c != 0)
            return c;
        return a.p <=> b.p;
    }
};

/// Lower-left anchor of a block or window. Same ordering as Cell.
using Corner = Cell;

/// Position of a cell relative to its window anchor, in [k-1]_0^2.
struct Offset
{
    int dx = 0;
    int dy = 0;

    friend bool operator==(const Offset&, const Offset&) = default;
    friend std::strong_ordering operator<=>(const Offset& a, const Offset& b)
    {
        if (auto c = a.dy <=> b.dy; c != 0)
            return c;
        return a.dx <=> b.dx;
    }
};

std::string to_string(const Cell& c);

/// Dense m x n 0/1 image.
class BinaryImage
{
public:
    BinaryImage() = default;
    BinaryImage(int m, int n);

    int width() const noexcept { return m_; }
    int height() const noexcept { return n_; }

    bool at(int p, int q) const { return bits_[index(p, q)] != 0; }
    bool at(Cell c) const { return at(c.p, c.q); }
    void set(int p, int q, bool value) { bits_[index(p, q)] = value ? 1 : 0; }
    void set(Cell c, bool value) { set(c.p, c.q, value); }

    bool contains(int p, int q) const noexcept { return p >= 1 && p <= m_ && q >= 1 && q <= n_; }

    int row_sum(int q) const;
    int col_sum(int p) const;
    int count() const;

    std::vector<int> row_sums() const;
    std::vector<int> col_sums() const;

    /// Bitwise complement; same dimensions.
    BinaryImage complement() const;

    friend bool operator==(const BinaryImage&, const BinaryImage&) = default;

private:
    std::size_t index(int p, int q) const;

    int m_ = 0;
    int n_ = 0;
    std::vector<std::uint8_t> bits_;
};

/// Set of offsets inside a k x k window, kept sorted by (dy, dx).
class Pattern
{
public:
    Pattern() = default;
    Pattern(int k, std::vector<Offset> offsets);

    /// Builds the pattern whose bit (dy*k + dx) is set in `mask`.
    static Pattern from_mask(int k, std::uint32_t mask);

    int k() const noexcept { return k_; }
    const std::vector<Offset>& offsets() const noexcept { return offsets_; }
    bool empty() const noexcept { return offsets_.empty(); }
    std::size_t size() const noexcept { return offsets_.size(); }
    bool contains(Offset o) const;

    /// Number of offsets with the given dy.
    int row_count(int dy) const;

    /// Bitmask (dy*k + dx); requires k <= 5.
    std::uint32_t mask() const;

    friend bool operator==(const Pattern&, const Pattern&) = default;

private:
    int k_ = 1;
    std::vector<Offset> offsets_;
};

/// Pattern family P(k,t).
///   t=0: unconstrained
///   t=1: empty, {(0,0)} or {(k-1,k-1)}
///   t=2: at most one offset per window row
///   t=3: at least k-1 offsets per window row (needs k >= 2)
struct PatternClass
{
    int k = 1;
    int t = 0;

    PatternClass() = default;
    PatternClass(int k, int t);

    friend bool operator==(const PatternClass&, const PatternClass&) = default;
};

// Largest k accepted by pattern_enumerate.
inline constexpr int kMaxEnumerateK = 4;

/// Rec(k, nu, t) instance. Sums are stored 0-based: row_sums[q-1] = r_q.
/// block_values is in corner order.
struct RecInstance
{
    int k = 1;
    int nu = 1;
    int t = 0;
    int m = 0;
    int n = 0;
    std::vector<int> row_sums;
    std::vector<int> col_sums;
    std::vector<int> block_values;

    /// Throws InputError if any structural invariant is broken.
    void validate() const;

    int blocks_x() const noexcept { return m / k; }
    int blocks_y() const noexcept { return n / k; }
    int block_value(Corner c) const;
    void set_block_value(Corner c, int v);

    friend bool operator==(const RecInstance&, const RecInstance&) = default;
};

enum class Relation
{
    LE,
    GE,
    EQ
};

std::string to_string(Relation rel);

struct WindowMeasurement
{
    Relation rel = Relation::EQ;
    int value = 0;

    friend bool operator==(const WindowMeasurement&, const WindowMeasurement&) = default;
};

/// WRec instance: k x k windows at arbitrary (possibly overlapping) anchors.
/// The anchor set is the key set of `windows`.
struct WRecInstance
{
    int k = 1;
    int t = 0;
    int m = 0;
    int n = 0;
    std::vector<int> row_sums;
    std::vector<int> col_sums;
    std::map<Corner, WindowMeasurement> windows;

    void validate() const;

    friend bool operator==(const WRecInstance&, const WRecInstance&) = default;
};

enum class Axis
{
    VERTICAL,
    HORIZONTAL
};

/// C(m,n,k) in corner order. Throws InputError unless k divides m and n.
std::vector<Corner> corner_points(int m, int n, int k);

/// Cells (i,j) + [k-1]_0^2, ordered by (q,p).
std::vector<Cell> window_cells(int i, int j, int k);

/// pat_k(x,i,j). Throws InputError if the window leaves the image.
Pattern pattern_of(const BinaryImage& x, int i, int j, int k);

/// Membership in P(k,t). The pattern must have the class's k.
bool pattern_member(const Pattern& pattern, const PatternClass& cls);

/// All members of P(k,t), in ascending mask order. Throws ResourceError for
/// k > kMaxEnumerateK.
std::vector<Pattern> pattern_enumerate(const PatternClass& cls);

/// sigma_i(j) for VERTICAL, rho_j(i) for HORIZONTAL.
int strip_rank(const std::set<Corner>& corners, Axis axis, int i, int j);

struct Region
{
    std::set<Cell> cells;
    std::set<int> xs;
    std::set<int> ys;
};

/// G(I) with the projections Pi_x(I), Pi_y(I).
Region region_and_projections(const std::set<Corner>& corners, int k);

} // namespace tomo
