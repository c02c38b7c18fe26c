#pragma once

// Exhaustive reference implementations used only by the tests. None of these
// call the library's verifier, solvers or oracle.

#include "tomo/dr1.hpp"
#include "tomo/flow.hpp"
#include "tomo/grid.hpp"
#include "tomo/reductions.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace tomo::testing {

/// Image whose cell (p,q) is bit (q-1)*m + (p-1) of mask.
BinaryImage image_from_mask(int m, int n, std::uint64_t mask);

/// Direct transcription of the Rec / WRec constraint lists.
bool naive_rec_ok(const RecInstance& inst, const BinaryImage& x);
bool naive_wrec_ok(const WRecInstance& inst, const BinaryImage& x);
bool naive_transport_ok(const TransportProblem& tp, const BinaryImage& x);

/// Every image of the grid that passes the naive check, in mask order.
std::vector<BinaryImage> brute_rec_solutions(const RecInstance& inst);
std::vector<BinaryImage> brute_wrec_solutions(const WRecInstance& inst);
bool brute_transport_feasible(const TransportProblem& tp);

/// 3^(mn) sweep over color assignments.
bool brute_three_color_feasible(const ThreeColorInstance& tc);

/// DR(1) as a WRec system: selected blocks hold exactly one 1, all other
/// blocks none, lines outside the selected strips sum to zero.
WRecInstance dr1_as_wrec(const DR1Instance& dr);

/// Exhaustive DR(1) decision: one of k^2 positions per selected block.
bool brute_dr1_feasible(const DR1Instance& dr);

struct Rng
{
    explicit Rng(std::uint64_t seed) : gen(seed) {}

    int uniform(int lo, int hi)  // inclusive
    {
        return lo + static_cast<int>(gen() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    bool coin(double p = 0.5) { return static_cast<double>(gen() >> 11) * 0x1.0p-53 < p; }
    std::uint64_t next() { return gen(); }

    std::mt19937_64 gen;
};

/// Random WRec instance with windows at random (possibly overlapping)
/// anchors; sums come from a random image so instances are often feasible.
WRecInstance random_wrec(Rng& rng, int m, int n, int k, int t, bool block_aligned);

/// Same shape but sums and values from a random image, which is returned.
WRecInstance planted_wrec(Rng& rng, int m, int n, int k, int t, bool block_aligned, BinaryImage& witness);

} // namespace tomo::testing
