#include "hookenum/motzkin.hpp"

#include <gtest/gtest.h>

using namespace hookenum;

namespace {

// Independent path generator: all words over {U,D,E}, filtered.
std::vector<std::string> brute_paths(int n)
{
    std::vector<std::string> out;
    std::string w(static_cast<std::size_t>(n), 'U');
    long total = 1;
    for (int i = 0; i < n; ++i) {
        total *= 3;
    }
    for (long code = 0; code < total; ++code) {
        long c = code;
        for (int i = n - 1; i >= 0; --i) {
            w[i] = "UDE"[c % 3];
            c /= 3;
        }
        try {
            MotzkinPath p(w);
            out.push_back(w);
        } catch (const invalid_input&) {
        }
    }
    return out;
}

} // namespace

TEST(Path, RejectsBadWords)
{
    EXPECT_THROW(MotzkinPath("DU"), invalid_input);
    EXPECT_THROW(MotzkinPath("UU"), invalid_input);
    EXPECT_THROW(MotzkinPath("UX"), invalid_input);
    EXPECT_NO_THROW(MotzkinPath(""));
}

TEST(AllPaths, Examples)
{
    EXPECT_EQ(all_paths(0).size(), 1u);
    std::vector<std::string> words;
    for (const auto& p : all_paths(3)) {
        words.push_back(p.word());
    }
    EXPECT_EQ(words, (std::vector<std::string>{"UDE", "UED", "EUD", "EEE"}));
    EXPECT_EQ(all_paths(4).size(), 9u);
}

TEST(AllPaths, MatchesBruteForceAndMotzkinNumbers)
{
    const auto m = motzkin_numbers(12);
    for (int n = 0; n <= 9; ++n) {
        std::vector<std::string> a;
        for (const auto& p : all_paths(n)) {
            a.push_back(p.word());
        }
        std::vector<std::string> b = brute_paths(n);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        EXPECT_EQ(a, b);
        EXPECT_EQ(Count(a.size()), m[n]);
    }
}

TEST(Decompose, Examples)
{
    const PathDecomposition d = decompose(MotzkinPath("UEDUUEDUDED"));
    EXPECT_EQ(d.letters, "UEUUEUE");
    EXPECT_EQ(d.gaps, (std::vector<int>{0, 1, 0, 0, 1, 1, 1}));
    const PathDecomposition e = decompose(MotzkinPath("EEEE"));
    EXPECT_EQ(e.letters, "EEEE");
    EXPECT_EQ(e.gaps, (std::vector<int>{0, 0, 0, 0}));
    const PathDecomposition ud = decompose(MotzkinPath("UD"));
    EXPECT_EQ(ud.letters, "U");
    EXPECT_EQ(ud.gaps, (std::vector<int>{1}));
}

TEST(Decompose, RoundTrip)
{
    for (int n = 0; n <= 12; ++n) {
        for (const auto& p : all_paths(n)) {
            const PathDecomposition d = decompose(p);
            EXPECT_EQ(d.reassemble(), p.word());
            int ups = 0, downs = 0;
            for (char c : d.letters) {
                ups += c == 'U';
            }
            for (int g : d.gaps) {
                downs += g;
            }
            EXPECT_EQ(ups, downs);
        }
    }
}

TEST(Longevity, Examples)
{
    EXPECT_EQ(longevity(MotzkinPath("UEDUUEDUDED")), (std::vector<int>{1, -1, 6, 1, -1, 0, -1}));
    EXPECT_EQ(longevity(MotzkinPath("UD")), (std::vector<int>{0}));
    EXPECT_EQ(longevity(MotzkinPath("UED")), (std::vector<int>{1, -1})); // the E letter contributes -1
}

TEST(PathClass, Examples)
{
    EXPECT_EQ(path_class(MotzkinPath("UEDUUEDUDED")), (std::vector<int>{2, 5, 7}));
    EXPECT_TRUE(path_class(MotzkinPath("UD")).empty());
    EXPECT_EQ(path_class(MotzkinPath("EEE")), (std::vector<int>{1, 2, 3}));
}

TEST(Leq, Examples)
{
    EXPECT_TRUE(leq(PosetKind::S, MotzkinPath("UDE"), MotzkinPath("UED")));
    EXPECT_FALSE(leq(PosetKind::S, MotzkinPath("UED"), MotzkinPath("UDE")));
    EXPECT_FALSE(leq(PosetKind::C, MotzkinPath("EE"), MotzkinPath("UD")));
    EXPECT_TRUE(leq(PosetKind::T, MotzkinPath("UDE"), MotzkinPath("UED")));
    EXPECT_TRUE(leq(PosetKind::A, MotzkinPath("UD"), MotzkinPath("UD")));
    EXPECT_FALSE(leq(PosetKind::A, MotzkinPath("UDE"), MotzkinPath("UED")));
    EXPECT_THROW(leq(PosetKind::S, MotzkinPath("UD"), MotzkinPath("E")), invalid_input);
}

TEST(Leq, PrefixUpCountIsNotAntisymmetric)
{
    // Both words have prefix U-counts (1,1,1); heights still tell them apart.
    const MotzkinPath a("UDE"), b("UED");
    EXPECT_NE(a, b);
    EXPECT_FALSE(leq(PosetKind::S, a, b) && leq(PosetKind::S, b, a));
}

TEST(CountIntervals, Examples)
{
    EXPECT_EQ(count_intervals(3, PosetKind::C), 5);
    EXPECT_EQ(count_intervals(3, PosetKind::T), 5);
    const auto m = motzkin_numbers(10);
    for (int n = 0; n <= 10; ++n) {
        EXPECT_EQ(count_intervals(n, PosetKind::A), m[n]);
    }
}

TEST(CountIntervals, BucketingMatchesAllPairs)
{
    for (int n = 0; n <= 7; ++n) {
        const auto feats = path_features(n);
        for (PosetKind kind : {PosetKind::C, PosetKind::T}) {
            Count naive = 0;
            for (const auto& a : feats) {
                for (const auto& b : feats) {
                    naive += leq(kind, a, b) ? 1 : 0;
                }
            }
            EXPECT_EQ(count_intervals(n, kind), naive);
        }
    }
}

TEST(PosetAxioms, ChainAndOrderProperties)
{
    for (int n = 0; n <= 6; ++n) {
        const auto feats = path_features(n);
        for (const auto& a : feats) {
            for (const auto& b : feats) {
                if (leq(PosetKind::T, a, b)) {
                    EXPECT_TRUE(leq(PosetKind::C, a, b));
                }
                if (leq(PosetKind::C, a, b)) {
                    EXPECT_TRUE(leq(PosetKind::S, a, b));
                }
                for (PosetKind k : {PosetKind::S, PosetKind::C, PosetKind::T, PosetKind::A}) {
                    if (leq(k, a, b) && leq(k, b, a)) {
                        EXPECT_EQ(a.path, b.path);
                    }
                }
            }
        }
    }
}

TEST(FirstDown, Examples)
{
    for (int n = 0; n <= 8; ++n) {
        EXPECT_EQ(first_down_stat(n, n + 1), 1);
    }
    EXPECT_EQ(first_down_stat(2, 2), 1);
    for (int n = 1; n <= 8; ++n) {
        EXPECT_EQ(first_down_stat(n, 1), 0);
    }
}

TEST(FirstDown, MatchesPathScan)
{
    for (int n = 0; n <= 10; ++n) {
        std::vector<Count> hist(static_cast<std::size_t>(n + 2));
        for (const auto& p : all_paths(n)) {
            const auto pos = p.word().find('D');
            hist[pos == std::string::npos ? n + 1 : pos + 1] += 1;
        }
        Count total = 0;
        for (int ell = 1; ell <= n + 1; ++ell) {
            EXPECT_EQ(first_down_stat(n, ell), hist[ell]) << n << "," << ell;
            total += first_down_stat(n, ell);
        }
        EXPECT_EQ(total, motzkin_numbers(n)[n]);
    }
}

TEST(AxisTouch, Examples)
{
    EXPECT_EQ(axis_touch_stat(1, 2), 1);
    EXPECT_EQ(axis_touch_stat(2, 2), 1);
    EXPECT_EQ(axis_touch_stat(2, 3), 1);
    EXPECT_EQ(axis_touch_stat(0, 1), 1);
}

TEST(AxisTouch, MatchesPathScanAndFirstDown)
{
    for (int n = 0; n <= 10; ++n) {
        std::vector<Count> hist(static_cast<std::size_t>(n + 2));
        for (const auto& p : all_paths(n)) {
            int touches = 1;
            for (int h : p.heights()) {
                touches += h == 0;
            }
            hist[touches] += 1;
        }
        for (int ell = 1; ell <= n + 1; ++ell) {
            EXPECT_EQ(axis_touch_stat(n, ell), hist[ell]);
        }
    }
    for (int n = 0; n <= 12; ++n) {
        for (int ell = 1; ell <= n + 1; ++ell) {
            EXPECT_EQ(axis_touch_stat(n, ell), first_down_stat(n, ell)) << n << "," << ell;
        }
    }
}

TEST(OddDownRuns, Examples)
{
    EXPECT_EQ(odd_downrun_dyck_count(1), 1);
    EXPECT_EQ(odd_downrun_dyck_count(3), 2);
    EXPECT_EQ(odd_downrun_dyck_count(4), 5);
}

TEST(OddDownRuns, MatchesFilterOfDyckPaths)
{
    for (int n = 1; n <= 6; ++n) {
        Count expected = 0;
        for (const auto& p : all_paths(2 * n)) {
            const std::string& w = p.word();
            if (w.find('E') != std::string::npos) {
                continue;
            }
            bool ok = true;
            for (std::size_t i = 0; i < w.size();) {
                if (w[i] != 'D') {
                    ++i;
                    continue;
                }
                std::size_t j = i;
                while (j < w.size() && w[j] == 'D') {
                    ++j;
                }
                ok = ok && (j - i) % 2 == 1;
                i = j;
            }
            expected += ok ? 1 : 0;
        }
        EXPECT_EQ(odd_downrun_dyck_count(n), expected) << n;
    }
}
