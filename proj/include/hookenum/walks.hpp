#pragma once

#include "hookenum/common.hpp"

#include <array>
#include <vector>

namespace hookenum {

/// The five steps (-1,0), (-1,1), (0,-1), (0,1), (1,-1).
inline constexpr std::array<std::array<int, 2>, 5> kQuadrantSteps{{{-1, 0}, {-1, 1}, {0, -1}, {0, 1}, {1, -1}}};

/// Counts of walks of a fixed length ending at each (x, y); coordinates never exceed the length.
struct WalkCountVector {
    int k = 0;
    std::vector<std::vector<Count>> counts; // counts[x][y]
};

/// Walk counts after k steps from the origin inside the quarter plane.
inline WalkCountVector walk_count_vector(int k)
{
    const int side = k + 1;
    std::vector<std::vector<Count>> cur(static_cast<std::size_t>(side), std::vector<Count>(static_cast<std::size_t>(side)));
    cur[0][0] = 1;
    for (int step = 0; step < k; ++step) {
        std::vector<std::vector<Count>> next(cur.size(), std::vector<Count>(cur.size()));
        for (int x = 0; x < side; ++x) {
            for (int y = 0; y < side; ++y) {
                if (cur[x][y] == 0) {
                    continue;
                }
                for (const auto& s : kQuadrantSteps) {
                    const int nx = x + s[0], ny = y + s[1];
                    if (nx >= 0 && ny >= 0 && nx < side && ny < side) {
                        next[nx][ny] += cur[x][y];
                    }
                }
            }
        }
        cur = std::move(next);
    }
    return {k, std::move(cur)};
}

/// w(k): closed walks of length k at the origin confined to x, y >= 0.
inline Count walk_counts(int k)
{
    if (k < 0) {
        return 0;
    }
    return walk_count_vector(k).counts[0][0];
}

/// w(0..k_max) in one pass.
inline std::vector<Count> walk_sequence(int k_max)
{
    std::vector<Count> out;
    if (k_max < 0) {
        return out;
    }
    const int side = k_max + 1;
    std::vector<std::vector<Count>> cur(static_cast<std::size_t>(side), std::vector<Count>(static_cast<std::size_t>(side)));
    cur[0][0] = 1;
    out.push_back(1);
    for (int step = 1; step <= k_max; ++step) {
        std::vector<std::vector<Count>> next(cur.size(), std::vector<Count>(cur.size()));
        for (int x = 0; x < side; ++x) {
            for (int y = 0; y < side; ++y) {
                if (cur[x][y] == 0) {
                    continue;
                }
                for (const auto& s : kQuadrantSteps) {
                    const int nx = x + s[0], ny = y + s[1];
                    if (nx >= 0 && ny >= 0 && nx < side && ny < side) {
                        next[nx][ny] += cur[x][y];
                    }
                }
            }
        }
        cur = std::move(next);
        out.push_back(cur[0][0]);
    }
    return out;
}

} // namespace hookenum
