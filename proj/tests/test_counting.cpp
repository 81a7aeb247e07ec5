#include "hookenum/counting.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace hookenum;
using testsupport::big;

namespace {

// Brute-force |VHC(Av_n(patterns))| for n = 0..9, computed once per pattern set.
const std::vector<Count>& brute(const std::string& patterns)
{
    static std::map<std::string, std::vector<Count>> cache;
    auto it = cache.find(patterns);
    if (it == cache.end()) {
        std::vector<Count> v;
        for (int n = 0; n <= 9; ++n) {
            v.push_back(count_vhcs_of_class(n, parse_patterns(patterns)));
        }
        it = cache.emplace(patterns, std::move(v)).first;
    }
    return it->second;
}

const std::vector<Count>& published()
{
    static const std::vector<Count> v{1, 1, 2, 5, 14, 44, 148, 528, 1972, 7647, 30605, 125801, 529131,
                                      2270481, 9914870, 43973755, 197744417};
    return v;
}

} // namespace

TEST(CountTable, WriteOnceAndZeroOutside)
{
    CountTable<2> t({3, 3});
    t.set({1, 2}, 7);
    EXPECT_EQ((t[{1, 2}]), 7);
    EXPECT_TRUE(t.has({1, 2}));
    EXPECT_FALSE(t.has({0, 0}));
    EXPECT_EQ((t[{5, 0}]), 0);
    EXPECT_EQ((t[{-1, 0}]), 0);
    EXPECT_THROW(t.set({1, 2}, 8), internal_inconsistency);
    EXPECT_THROW(t.set({3, 0}, 1), internal_inconsistency);
}

TEST(Av312, PublishedValues)
{
    const auto seq = av312_sequence(17);
    for (int n = 1; n <= 17; ++n) {
        EXPECT_EQ(seq[n], published()[n - 1]) << n;
    }
    EXPECT_EQ(count_av312(4), 5);
    EXPECT_EQ(count_av312(9), 1972);
}

TEST(Av312, MatchesBruteForce)
{
    const auto seq = av312_sequence(9);
    for (int n = 0; n <= 9; ++n) {
        EXPECT_EQ(seq[n], brute("312")[n]) << n;
    }
}

TEST(Av312, RefinedTableMatchesBruteForce)
{
    // B_{l,c}(m): configurations on 312-avoiders of length m + l, tail length l, c components.
    const int total = 7;
    const Av312Tables t = av312_tables(total);
    std::map<std::array<int, 3>, Count> expected;
    for (int len = 0; len <= total; ++len) {
        for (const Permutation& pi : avoiders(len, parse_patterns("312"))) {
            const int ell = tail_length(pi);
            const int c = static_cast<int>(components(pi).size());
            expected[{ell, c, len - ell}] += count_vhcs(pi);
        }
    }
    for (int ell = 0; ell <= total; ++ell) {
        for (int m = 0; ell + m <= total; ++m) {
            for (int c = 0; c <= total; ++c) {
                const auto it = expected.find({ell, c, m});
                const Count want = it == expected.end() ? Count(0) : it->second;
                EXPECT_EQ((t.exact[{ell, c, m}]), want) << ell << "," << c << "," << m;
            }
        }
    }
}

TEST(Av312, AggregatesAreMonotoneInThresholds)
{
    const int total = 10;
    const Av312Tables t = av312_tables(total);
    for (int ell = 0; ell <= total; ++ell) {
        for (int m = 0; ell + m <= total; ++m) {
            for (int c = 0; c < total; ++c) {
                EXPECT_GE((t.at_least[{ell, c, m}]), (t.at_least[{ell, c + 1, m}]));
                EXPECT_GE((t.at_least[{ell, c, m}]), 0);
            }
            if (m >= 1) {
                EXPECT_GE((t.at_least[{ell, 0, m}]), (t.at_least[{ell + 1, 0, m - 1}]));
            }
        }
    }
}

TEST(Av312, PrefixIndependentOfTableSize)
{
    const auto small = av312_sequence(8);
    const auto large = av312_sequence(20);
    for (int n = 0; n <= 8; ++n) {
        EXPECT_EQ(small[n], large[n]);
    }
}

TEST(Av231, Examples)
{
    EXPECT_EQ(count_av231(3), 2);
    EXPECT_EQ(count_av231(0), 1);
    const auto seq = av231_sequence(9);
    for (int n = 0; n <= 9; ++n) {
        EXPECT_EQ(seq[n], brute("231")[n]) << n;
        EXPECT_EQ(seq[n], brute("132")[n]) << n;
    }
    for (int n = 1; n <= 9; ++n) {
        EXPECT_EQ(seq[n], count_intervals(n - 1, PosetKind::T)) << n;
    }
}

TEST(Av231_321, Examples)
{
    EXPECT_EQ(count_av231_321(0), 1);
    const auto seq = av231_321_sequence(9);
    for (int n = 0; n <= 9; ++n) {
        EXPECT_EQ(seq[n], brute("231,321")[n]) << n;
    }
}

TEST(Av312_321, Examples)
{
    EXPECT_EQ(count_av312_321(3), 2);
    const auto seq = av312_321_sequence(40);
    for (int n = 0; n <= 9; ++n) {
        EXPECT_EQ(seq[n], brute("312,321")[n]) << n;
    }
    for (int n = 1; n <= 40; ++n) {
        EXPECT_EQ(seq[n], closed_form_312_321(n)) << n;
    }
}

TEST(Av312_321, PlantedBaseCaseIsCaught)
{
    AbundancyBaseCases bad;
    bad.a0_at_1 = 1;
    const auto seq = av312_321_sequence(5, bad);
    // A_{>=0}(1) = A_0(1) + A_{>=1}(0), so the planted value already shows at n = 1.
    EXPECT_EQ(seq[1], 2);
    EXPECT_NE(seq[1], brute("312,321")[1]);
    EXPECT_EQ(seq[2], 2);
    EXPECT_NE(seq[2], brute("312,321")[2]);
}

TEST(ClosedForm312_321, Examples)
{
    EXPECT_EQ(closed_form_312_321(1), 1);
    EXPECT_EQ(closed_form_312_321(4), 5);
    for (int n = 1; n <= 12; ++n) {
        EXPECT_EQ(closed_form_312_321(n), odd_downrun_dyck_count(n)) << n;
    }
    EXPECT_THROW(closed_form_312_321(0), invalid_input);
}

TEST(ClosedForm132_321, Examples)
{
    EXPECT_EQ(closed_form_132_321(1), 1);
    EXPECT_EQ(closed_form_132_321(4), 5);
    for (int n = 1; n <= 9; ++n) {
        EXPECT_EQ(closed_form_132_321(n), brute("132,321")[n]) << n;
    }
}

TEST(Av231_1243, Examples)
{
    EXPECT_EQ(count_av231_1243(0), 1);
    const auto seq = av231_1243_sequence(9);
    for (int n = 0; n <= 9; ++n) {
        EXPECT_EQ(seq[n], brute("231,1243")[n]) << n;
    }
}

TEST(Av231_1243, TailTableSourcesAgree)
{
    const auto fast = av231_1243_sequence(9, TailTableSource::first_down);
    const auto slow = av231_1243_sequence(9, TailTableSource::brute_force);
    EXPECT_EQ(fast, slow);
}

TEST(TailRefined, FirstDownIdentity)
{
    const PatternSet pats = parse_patterns("132,231");
    for (int n = 3; n <= 9; ++n) {
        for (int ell = 1; ell <= n - 2; ++ell) {
            EXPECT_EQ(tail_refined_count(n - ell, ell, pats), first_down_stat(n - 1, ell + 1)) << n << "," << ell;
        }
    }
}

TEST(PropClosedForms, Examples)
{
    EXPECT_EQ(prop_closed_forms(TripleFamily::p132_231_312, 6), 8);
    EXPECT_EQ(prop_closed_forms(TripleFamily::quadruple, 5), 4);
    EXPECT_EQ(prop_closed_forms(TripleFamily::p132_231_321, 5), 7);
    EXPECT_EQ(prop_closed_forms(TripleFamily::p132_231_312, 1), 1);
    EXPECT_EQ(prop_closed_forms(TripleFamily::p132_231_312, 2), 1);
    EXPECT_THROW(prop_closed_forms(TripleFamily::quadruple, 0), invalid_input);
}

TEST(PropClosedForms, MatchBruteForce)
{
    for (int n = 1; n <= 9; ++n) {
        EXPECT_EQ(prop_closed_forms(TripleFamily::p132_231_321, n), brute("132,231,321")[n]) << n;
        EXPECT_EQ(prop_closed_forms(TripleFamily::p132_312_321, n), brute("132,312,321")[n]) << n;
        EXPECT_EQ(prop_closed_forms(TripleFamily::p132_231_312, n), brute("132,231,312")[n]) << n;
    }
    // n - 1 holds from n = 2; the single permutation of length 1 has one configuration.
    EXPECT_EQ(brute("132,231,312,321")[1], 1);
    for (int n = 2; n <= 9; ++n) {
        EXPECT_EQ(prop_closed_forms(TripleFamily::quadruple, n), brute("132,231,312,321")[n]) << n;
    }
}

TEST(PairCounts, Examples)
{
    EXPECT_EQ(pair_counts_motzkin(5), 9);
    EXPECT_EQ(pair_counts_motzkin(1), 1);
    for (int n = 1; n <= 9; ++n) {
        for (const char* pats : {"132,231", "132,312", "231,312"}) {
            EXPECT_EQ(pair_counts_motzkin(n), brute(pats)[n]) << pats << " n=" << n;
        }
    }
}

TEST(SankarSum, Examples)
{
    EXPECT_EQ(sankar_sum(1), 1);
    EXPECT_EQ(sankar_sum(3), 2);
    for (int n = 1; n <= 17; ++n) {
        EXPECT_EQ(sankar_sum(n), published()[n - 1]) << n;
    }
}

TEST(SankarSum, MatchesRecurrenceToTwenty)
{
    const auto seq = av312_sequence(20);
    for (int n = 1; n <= 20; ++n) {
        EXPECT_EQ(sankar_sum(n), seq[n]) << n;
    }
    EXPECT_EQ(sankar_sum(20), seq[20]);
    EXPECT_GT(seq[20], big("197744417"));
}
