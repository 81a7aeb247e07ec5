#pragma once

#include "hookenum/common.hpp"
#include "hookenum/perm.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace testsupport {

inline std::mt19937& rng()
{
    static std::mt19937 gen(20240611);
    return gen;
}

inline hookenum::Permutation random_permutation(int n)
{
    std::vector<int> e(static_cast<std::size_t>(n));
    std::iota(e.begin(), e.end(), 1);
    std::shuffle(e.begin(), e.end(), rng());
    return hookenum::Permutation(std::move(e));
}

inline std::vector<hookenum::Permutation> all_permutations(int n)
{
    std::vector<int> e(static_cast<std::size_t>(n));
    std::iota(e.begin(), e.end(), 1);
    std::vector<hookenum::Permutation> out;
    do {
        out.emplace_back(e);
    } while (std::next_permutation(e.begin(), e.end()));
    return out;
}

inline hookenum::Count big(const char* s) { return hookenum::Count(s); }

} // namespace testsupport
