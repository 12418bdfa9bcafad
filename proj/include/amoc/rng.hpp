// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <random>

namespace amoc {

// SplitMix64 finalizer; decorrelates nearby seeds.
constexpr std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Counter-based sub-stream seed. Every permutation replicate and every
// Monte Carlo trial draws its own engine from (base, index), so results do
// not depend on evaluation order or parallel scheduling.
constexpr std::uint64_t deriveSeed(std::uint64_t base, std::uint64_t index) {
    return splitmix64(base ^ splitmix64(index ^ 0x632be59bd9b4e019ULL));
}

// In-place Fisher-Yates shuffle of the array coefficients.
template <typename Rng>
void shuffleValues(Eigen::Ref<Eigen::ArrayXd> values, Rng& rng) {
    for (Eigen::Index i = values.size() - 1; i > 0; --i) {
        std::uniform_int_distribution<Eigen::Index> pick(0, i);
        Eigen::Index j = pick(rng);
        std::swap(values[i], values[j]);
    }
}

} // namespace amoc
