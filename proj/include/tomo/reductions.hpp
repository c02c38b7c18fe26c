#pragma once

#include "tomo/grid.hpp"

#include <vector>

namespace tomo {

/// Two disjoint binary images from per-color row and column sums.
struct ThreeColorInstance
{
    int m = 0;
    int n = 0;
    std::vector<int> r1, r2;  // length n
    std::vector<int> c1, c2;  // length m

    void validate() const;
};

struct ThreeColorSolution
{
    BinaryImage xi1;
    BinaryImage xi2;
};

/// True iff the pair meets every per-color sum and the two supports are
/// disjoint.
bool three_color_check(const ThreeColorInstance& tc, const ThreeColorSolution& s);

/// Rec(2,1,1) instance on a 2m x 2n grid: r_{2q-1} = r1_q, r_{2q} = r2_q,
/// columns likewise, every block value 1. Color 1 is a 1 at a block's
/// lower-left cell, color 2 at its upper-right cell, blank an empty block.
RecInstance three_color_to_rec(const ThreeColorInstance& tc);

/// Reads the colors back from a solution of the reduced instance. Throws
/// InputError on a block that is not one of the three types.
ThreeColorSolution decode_three_color(const BinaryImage& x);

/// Inverse of decode_three_color.
BinaryImage encode_three_color(const ThreeColorSolution& s);

/// Rec(2,nu,t) -> Rec(K,nu,t). Each 2x2 block sits in the corner rows and
/// columns (offsets 0 and K-1) of a K x K block; all other rows and columns
/// of the strip get sum 0.
RecInstance pad_to_k(const RecInstance& inst, int target_k);
BinaryImage pad_to_k_embed(const BinaryImage& x, int target_k);
BinaryImage pad_to_k_extract(const BinaryImage& x, int target_k);

/// Color inversion: sums become m - r and n - c, each window (rel, v)
/// becomes (flipped rel, k^2 - v), and the pattern class is complemented
/// (2 <-> 3, 0 fixed). x solves the source iff its complement solves the
/// image. Throws InputError for t = 1 or window values above k^2.
WRecInstance t1_invert(const WRecInstance& inst);

/// Zero padding of a k = 2, t = 0 instance to window side K: the two data
/// rows/columns of each strip come first, the remaining K-2 carry sum 0.
/// Window anchors must be block-aligned.
WRecInstance t2_zero_pad(const WRecInstance& inst, int target_k);

/// As t2_zero_pad, but the padding rows and columns are all ones: window
/// values shift by K^2 - 4 and data line sums by the number of padding
/// cells they cross.
WRecInstance t3_one_pad(const WRecInstance& inst, int target_k);

/// Solution maps for T2 (fill = false) and T3 (fill = true).
BinaryImage strip_pad_embed(const BinaryImage& x, int target_k, bool fill);
BinaryImage strip_pad_extract(const BinaryImage& x, int target_k);

} // namespace tomo
