#pragma once

#include "hookenum/common.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace hookenum {

/// A word over {U, D, E} that never dips below the axis and ends on it.
/// Dyck paths are the Motzkin words without E.
class MotzkinPath {
public:
    MotzkinPath() = default;

    explicit MotzkinPath(std::string word) : word_(std::move(word))
    {
        int h = 0;
        for (char c : word_) {
            switch (c) {
            case 'U': ++h; break;
            case 'D': --h; break;
            case 'E': break;
            default: throw invalid_input("path letter must be U, D or E: " + word_);
            }
            if (h < 0) {
                throw invalid_input("path dips below the axis: " + word_);
            }
        }
        if (h != 0) {
            throw invalid_input("path does not end on the axis: " + word_);
        }
    }

    int size() const { return static_cast<int>(word_.size()); }
    const std::string& word() const { return word_; }

    /// Height after each step; heights()[i-1] is the height after step i.
    std::vector<int> heights() const
    {
        std::vector<int> out;
        out.reserve(word_.size());
        int h = 0;
        for (char c : word_) {
            h += c == 'U' ? 1 : c == 'D' ? -1 : 0;
            out.push_back(h);
        }
        return out;
    }

    friend bool operator==(const MotzkinPath&, const MotzkinPath&) = default;
    friend auto operator<=>(const MotzkinPath&, const MotzkinPath&) = default;

private:
    std::string word_;
};

/// X_1 D^{g_1} X_2 D^{g_2} ... X_m D^{g_m} with every X_j in {U, E}.
struct PathDecomposition {
    std::string letters;
    std::vector<int> gaps;

    std::string reassemble() const
    {
        std::string w;
        for (std::size_t j = 0; j < letters.size(); ++j) {
            w += letters[j];
            w.append(static_cast<std::size_t>(gaps[j]), 'D');
        }
        return w;
    }
};

enum class PosetKind { S, C, T, A };

inline char to_char(PosetKind k)
{
    switch (k) {
    case PosetKind::S: return 'S';
    case PosetKind::C: return 'C';
    case PosetKind::T: return 'T';
    case PosetKind::A: return 'A';
    }
    return '?';
}

inline PosetKind parse_poset_kind(std::string_view s)
{
    if (s == "S") return PosetKind::S;
    if (s == "C") return PosetKind::C;
    if (s == "T") return PosetKind::T;
    if (s == "A") return PosetKind::A;
    throw invalid_input("unknown poset kind: " + std::string(s));
}

/// Every Motzkin path of length n, lexicographic with U < D < E.
inline std::vector<MotzkinPath> all_paths(int n)
{
    std::vector<MotzkinPath> out;
    std::string w;
    std::function<void(int)> grow = [&](int h) {
        const int left = n - static_cast<int>(w.size());
        if (left == 0) {
            out.emplace_back(w);
            return;
        }
        for (char c : {'U', 'D', 'E'}) {
            const int next = h + (c == 'U' ? 1 : c == 'D' ? -1 : 0);
            if (next < 0 || next > left - 1) {
                continue;
            }
            w.push_back(c);
            grow(next);
            w.pop_back();
        }
    };
    if (n >= 0) {
        grow(0);
    }
    return out;
}

inline PathDecomposition decompose(const MotzkinPath& p)
{
    PathDecomposition dec;
    for (char c : p.word()) {
        if (c == 'D') {
            ++dec.gaps.back();
        } else {
            dec.letters += c;
            dec.gaps.push_back(0);
        }
    }
    return dec;
}

/// Longevity sequence: -1 for an E letter; for a U letter at word position r,
/// the least t >= 0 such that letters r+1..r+t+1 hold more D's than U's.
inline std::vector<int> longevity(const MotzkinPath& p)
{
    const std::string& w = p.word();
    std::vector<int> out;
    for (std::size_t r = 0; r < w.size(); ++r) {
        if (w[r] == 'D') {
            continue;
        }
        if (w[r] == 'E') {
            out.push_back(-1);
            continue;
        }
        int excess = 0;
        for (std::size_t s = r + 1; s < w.size(); ++s) {
            excess += w[s] == 'D' ? 1 : w[s] == 'U' ? -1 : 0;
            if (excess > 0) {
                out.push_back(static_cast<int>(s - r - 1));
                break;
            }
        }
    }
    return out;
}

/// Indices j (1-based) of the E letters in the decomposition.
inline std::vector<int> path_class(const MotzkinPath& p)
{
    const PathDecomposition dec = decompose(p);
    std::vector<int> out;
    for (std::size_t j = 0; j < dec.letters.size(); ++j) {
        if (dec.letters[j] == 'E') {
            out.push_back(static_cast<int>(j) + 1);
        }
    }
    return out;
}

/// Cached statistics of one path, so that pairwise comparisons stay cheap.
struct PathFeatures {
    MotzkinPath path;
    std::vector<int> heights;
    std::vector<int> cls;
    std::vector<int> lon;

    explicit PathFeatures(MotzkinPath p)
        : path(std::move(p)), heights(path.heights()), cls(path_class(path)), lon(longevity(path))
    {
    }
};

inline bool leq(PosetKind kind, const PathFeatures& a, const PathFeatures& b)
{
    if (a.path.size() != b.path.size()) {
        throw invalid_input("leq: paths have different lengths");
    }
    auto below = [&] {
        for (std::size_t i = 0; i < a.heights.size(); ++i) {
            if (a.heights[i] > b.heights[i]) {
                return false;
            }
        }
        return true;
    };
    switch (kind) {
    case PosetKind::S:
        return below();
    case PosetKind::C:
        return a.cls == b.cls && below();
    case PosetKind::T:
        if (a.cls != b.cls) {
            return false;
        }
        for (std::size_t j = 0; j < a.lon.size(); ++j) {
            if (a.lon[j] > b.lon[j]) {
                return false;
            }
        }
        return true;
    case PosetKind::A:
        return a.path == b.path;
    }
    return false;
}

/// S: a lies weakly below b (pointwise heights). C: same class and S.
/// T: same class and longevities componentwise <=. A: equality.
inline bool leq(PosetKind kind, const MotzkinPath& a, const MotzkinPath& b)
{
    if (a.size() != b.size()) {
        throw invalid_input("leq: paths have different lengths");
    }
    return leq(kind, PathFeatures(a), PathFeatures(b));
}

inline std::vector<PathFeatures> path_features(int n)
{
    std::vector<PathFeatures> out;
    for (MotzkinPath& p : all_paths(n)) {
        out.emplace_back(std::move(p));
    }
    return out;
}

/// Number of pairs (a, b) of length-n paths with a <= b. For C and T only
/// pairs inside a class bucket are compared, since both orders require equal classes.
inline Count count_intervals(int n, PosetKind kind)
{
    const std::vector<PathFeatures> feats = path_features(n);
    if (kind == PosetKind::A) {
        return Count(feats.size());
    }
    Count total = 0;
    if (kind == PosetKind::S) {
        for (const auto& a : feats) {
            for (const auto& b : feats) {
                if (leq(kind, a, b)) {
                    ++total;
                }
            }
        }
        return total;
    }
    std::map<std::vector<int>, std::vector<const PathFeatures*>> buckets;
    for (const auto& f : feats) {
        buckets[f.cls].push_back(&f);
    }
    for (const auto& [cls, members] : buckets) {
        for (const PathFeatures* a : members) {
            for (const PathFeatures* b : members) {
                if (leq(kind, *a, *b)) {
                    ++total;
                }
            }
        }
    }
    return total;
}

namespace detail {

// walks[len][h]: U/D/E walks of length len from height h to 0 that stay >= 0.
inline std::vector<std::vector<Count>> walks_to_axis(int max_len)
{
    std::vector<std::vector<Count>> w(static_cast<std::size_t>(max_len + 1),
                                      std::vector<Count>(static_cast<std::size_t>(max_len + 2)));
    w[0][0] = 1;
    for (int len = 1; len <= max_len; ++len) {
        for (int h = 0; h <= max_len; ++h) {
            Count v = w[len - 1][h] + w[len - 1][h + 1];
            if (h > 0) {
                v += w[len - 1][h - 1];
            }
            w[len][h] = v;
        }
    }
    return w;
}

} // namespace detail

/// b(n, ell): length-n paths whose first D is step ell; b(n, n+1) = 1 counts the all-E path.
///
/// The first ell-1 steps are U/E with k >= 1 U's (C(ell-1, k) orders), step ell
/// is D, and the remaining n-ell steps return from height k-1 to the axis.
inline Count first_down_stat(int n, int ell)
{
    if (n < 0 || ell < 1 || ell > n + 1) {
        return 0;
    }
    if (ell == n + 1) {
        return 1;
    }
    const auto w = detail::walks_to_axis(n);
    Count total = 0;
    for (int k = 1; k <= ell - 1; ++k) {
        total += binomial(ell - 1, k) * w[n - ell][k - 1];
    }
    return total;
}

/// a(n, ell): length-n paths with exactly ell lattice points on the axis,
/// the starting point included (so the single path of length 0 has a(0,1) = 1).
inline Count axis_touch_stat(int n, int ell)
{
    if (n < 0 || ell < 1 || ell > n + 1) {
        return 0;
    }
    // by_height[h][c]: prefixes ending at height h with c axis points so far.
    std::vector<std::vector<Count>> cur(static_cast<std::size_t>(n + 2), std::vector<Count>(static_cast<std::size_t>(n + 2)));
    cur[0][1] = 1;
    for (int step = 0; step < n; ++step) {
        std::vector<std::vector<Count>> next(cur.size(), std::vector<Count>(cur[0].size()));
        for (int h = 0; h <= n; ++h) {
            for (int c = 1; c <= n + 1; ++c) {
                const Count& v = cur[h][c];
                if (v == 0) {
                    continue;
                }
                for (int dh : {1, 0, -1}) {
                    const int nh = h + dh;
                    if (nh < 0 || nh > n) {
                        continue;
                    }
                    const int nc = c + (nh == 0 ? 1 : 0);
                    if (nc <= n + 1) {
                        next[nh][nc] += v;
                    }
                }
            }
        }
        cur = std::move(next);
    }
    return cur[0][ell];
}

/// Dyck paths of length 2n in which every maximal run of D's has odd length.
inline Count odd_downrun_dyck_count(int n)
{
    if (n < 0) {
        return 0;
    }
    Count total = 0;
    // h: height, ups/downs used, run: length of the current D run (0 after a U).
    std::function<void(int, int, int, int)> grow = [&](int h, int ups, int downs, int run) {
        if (ups == n && downs == n) {
            if (run % 2 == 1 || n == 0) {
                ++total;
            }
            return;
        }
        if (ups < n && (run == 0 || run % 2 == 1)) {
            grow(h + 1, ups + 1, downs, 0);
        }
        if (h > 0) {
            grow(h - 1, ups, downs + 1, run + 1);
        }
    };
    grow(0, 0, 0, 0);
    return total;
}

} // namespace hookenum
