#pragma once

#include "tomo/grid.hpp"

#include <cstdint>

namespace tomo {

struct PlantedInstance
{
    RecInstance instance;
    BinaryImage witness;
};

/// Random feasible Rec instance built around a witness. Each block, with
/// probability `density`, receives a uniformly chosen nonempty member of
/// P(k,t) with at most nu ones; otherwise it stays empty. Nonempty blocks get
/// v = nu, empty ones 0 or nu with equal odds. Sums are read off the witness.
/// Deterministic for a given seed. Needs k <= kMaxEnumerateK.
PlantedInstance gen_planted(int m, int n, int k, int nu, int t, double density, std::uint64_t seed);

} // namespace tomo
