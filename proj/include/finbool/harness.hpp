#pragma once

#include <cstdint>
#include <vector>

#include "finbool/algebra.hpp"
#include "finbool/mask.hpp"
#include "finbool/report.hpp"
#include "finbool/rng.hpp"

namespace finbool {

enum class Profile { quick, full };

// Randomized inputs used by the verification suite and the tests.

Mask random_mask(Rng& rng, std::size_t ground);
Mask random_nonempty_proper(Rng& rng, std::size_t ground);

// Any two members are nested or disjoint, so no two are independent.
SetFamily random_laminar_family(Rng& rng, std::size_t ground, std::size_t want);

// Union of (n-1) laminar families: any n members include two from one
// layer, so no n members are independent.
SetFamily low_independence_family(Rng& rng, std::size_t ground, std::size_t want,
                                  std::size_t n);

Algebra random_algebra(Rng& rng, std::size_t ground, std::size_t max_atoms);

// k coordinate sets over 2^k points, padded with `extra` free points and
// relabeled by a random permutation; independent by construction.
SetFamily random_independent_family(Rng& rng, std::size_t k, std::size_t extra);

std::vector<std::uint32_t> random_permutation(Rng& rng, std::uint32_t n);

// The acceptance checks, in fixed order, all derive their randomness from
// `seed` through per-check substreams.
std::vector<CheckResult> run_acceptance(std::uint64_t seed, Profile profile);

}  // namespace finbool
