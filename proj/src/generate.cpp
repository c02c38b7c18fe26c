#include "tomo/generate.hpp"

#include "tomo/error.hpp"
#include "tomo/verifier.hpp"

#include <random>

namespace tomo {

namespace {

// Distribution objects are implementation-defined; these are not, so seeds
// reproduce across standard libraries.
double unit(std::mt19937_64& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::size_t pick(std::mt19937_64& rng, std::size_t n)
{
    return static_cast<std::size_t>(rng() % n);
}

} // namespace

PlantedInstance gen_planted(int m, int n, int k, int nu, int t, double density, std::uint64_t seed)
{
    if (t < 0 || t > 2)
        throw InputError("planted instances need t in {0,1,2}");
    if (nu < 1)
        throw InputError("nu must be positive");
    if (!(density >= 0.0 && density <= 1.0))
        throw InputError("density must lie in [0,1]");
    const auto corners = corner_points(m, n, k);

    std::vector<Pattern> candidates;
    for (auto& p : pattern_enumerate(PatternClass(k, t)))
        if (!p.empty() && static_cast<int>(p.size()) <= nu)
            candidates.push_back(std::move(p));
    if (candidates.empty())
        throw InputError("no nonempty admissible pattern fits the block cap");

    std::mt19937_64 rng(seed);
    PlantedInstance out{RecInstance{}, BinaryImage(m, n)};
    auto& inst = out.instance;
    inst.k = k;
    inst.nu = nu;
    inst.t = t;
    inst.m = m;
    inst.n = n;
    inst.block_values.reserve(corners.size());
    for (const auto& c : corners) {
        if (unit(rng) < density) {
            const auto& pat = candidates[pick(rng, candidates.size())];
            for (const auto& o : pat.offsets())
                out.witness.set(c.p + o.dx, c.q + o.dy, true);
            inst.block_values.push_back(nu);
        }
        else
            inst.block_values.push_back((rng() & 1) ? nu : 0);
    }
    inst.row_sums = out.witness.row_sums();
    inst.col_sums = out.witness.col_sums();

    if (!verify_rec(inst, out.witness).ok())
        throw ContractError("planted witness fails its own instance");
    return out;
}

} // namespace tomo
