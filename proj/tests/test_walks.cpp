#include "hookenum/counting.hpp"
#include "hookenum/walks.hpp"

#include <gtest/gtest.h>

using namespace hookenum;

namespace {

// Every step sequence of length k, kept when it stays in the quadrant and returns home.
long exhaustive_walks(int k)
{
    long total = 0, codes = 1;
    for (int i = 0; i < k; ++i) {
        codes *= 5;
    }
    for (long code = 0; code < codes; ++code) {
        long c = code;
        int x = 0, y = 0;
        bool inside = true;
        for (int i = 0; i < k && inside; ++i) {
            const auto& s = kQuadrantSteps[static_cast<std::size_t>(c % 5)];
            c /= 5;
            x += s[0];
            y += s[1];
            inside = x >= 0 && y >= 0;
        }
        total += (inside && x == 0 && y == 0) ? 1 : 0;
    }
    return total;
}

} // namespace

TEST(Walks, Examples)
{
    EXPECT_EQ(walk_counts(0), 1);
    EXPECT_EQ(walk_counts(1), 0);
    EXPECT_EQ(walk_counts(2), 1);
    EXPECT_EQ(walk_counts(3), 1);
}

TEST(Walks, DynamicProgramMatchesExhaustiveSearch)
{
    for (int k = 0; k <= 8; ++k) {
        EXPECT_EQ(walk_counts(k), Count(exhaustive_walks(k))) << k;
    }
}

TEST(Walks, SequenceMatchesSingleLengths)
{
    const auto w = walk_sequence(14);
    for (int k = 0; k <= 14; ++k) {
        EXPECT_EQ(w[k], walk_counts(k)) << k;
        EXPECT_GE(w[k], 0);
    }
}

TEST(Walks, CountVectorStaysInQuadrant)
{
    const WalkCountVector v = walk_count_vector(6);
    Count total = 0;
    for (const auto& col : v.counts) {
        for (const Count& c : col) {
            total += c;
        }
    }
    EXPECT_GT(total, 0);
    EXPECT_LE(total, Count(15625));
}

TEST(WalkIdentity, Examples)
{
    EXPECT_EQ(walk_counts(0) + 2 * walk_counts(1) + walk_counts(2), count_av312(3));
    EXPECT_EQ(sankar_sum(10), 7647);
    const WalkIdentityReport rep = walk_identity_check(17);
    EXPECT_TRUE(rep.ok);
    EXPECT_FALSE(rep.first_mismatch.has_value());
}

TEST(WalkIdentity, HoldsToTwenty) { EXPECT_TRUE(walk_identity_check(20).ok); }
