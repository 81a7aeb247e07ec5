#pragma once

#include "hookenum/common.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace hookenum {

/// A point (i, pi_i) of the plot of a permutation. Positions are 1-indexed.
struct Point {
    int pos = 0;
    int value = 0;
    friend bool operator==(const Point&, const Point&) = default;
};

/// A sequence of distinct positive integers, read as a word. Positions are
/// 1-indexed through operator(); entries() exposes the raw storage.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> entries) : entries_(std::move(entries))
    {
        std::vector<int> sorted = entries_;
        std::sort(sorted.begin(), sorted.end());
        if (!sorted.empty() && sorted.front() < 1) {
            throw invalid_input("permutation entries must be positive");
        }
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw invalid_input("permutation entries must be distinct");
        }
    }

    Permutation(std::initializer_list<int> entries) : Permutation(std::vector<int>(entries)) {}

    static Permutation identity(int n)
    {
        std::vector<int> e(static_cast<std::size_t>(n));
        std::iota(e.begin(), e.end(), 1);
        return Permutation(std::move(e));
    }

    /// Parses "3,1,4,2" or, when every entry is a single digit, "3142".
    static Permutation parse(std::string_view text)
    {
        std::vector<int> e;
        if (text.find(',') == std::string_view::npos) {
            for (char ch : text) {
                if (ch < '1' || ch > '9') {
                    throw invalid_input("bad permutation text: " + std::string(text));
                }
                e.push_back(ch - '0');
            }
            return Permutation(std::move(e));
        }
        std::stringstream ss{std::string(text)};
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                std::size_t used = 0;
                e.push_back(std::stoi(item, &used));
                if (used != item.size()) {
                    throw invalid_input("bad permutation entry: " + item);
                }
            } catch (const std::logic_error&) {
                throw invalid_input("bad permutation entry: " + item);
            }
        }
        return Permutation(std::move(e));
    }

    int size() const { return static_cast<int>(entries_.size()); }
    bool empty() const { return entries_.empty(); }

    /// Entry at 1-indexed position i.
    int operator()(int i) const { return entries_[static_cast<std::size_t>(i - 1)]; }

    const std::vector<int>& entries() const { return entries_; }

    bool is_normalized() const
    {
        for (int v : entries_) {
            if (v > size()) {
                return false;
            }
        }
        return true;
    }

    std::string str() const
    {
        std::string out;
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (i) {
                out += ',';
            }
            out += std::to_string(entries_[i]);
        }
        return out;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> entries_;
};

/// Order-isomorphic permutation of {1..n}.
inline Permutation normalize(std::span<const int> word)
{
    std::vector<int> order(word.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return word[a] < word[b]; });
    std::vector<int> out(word.size());
    for (std::size_t rank = 0; rank < order.size(); ++rank) {
        if (rank > 0 && word[order[rank]] == word[order[rank - 1]]) {
            throw invalid_input("normalize: duplicate entries");
        }
        out[order[rank]] = static_cast<int>(rank) + 1;
    }
    return Permutation(std::move(out));
}

inline Permutation normalize(const Permutation& p) { return normalize(std::span<const int>(p.entries())); }

/// A normalized permutation used as a pattern; built from digit strings like "312".
class Pattern {
public:
    explicit Pattern(Permutation perm) : perm_(std::move(perm))
    {
        if (!perm_.is_normalized()) {
            throw invalid_input("pattern must be a permutation of 1..m");
        }
    }

    explicit Pattern(std::string_view digits) : Pattern(Permutation::parse(digits)) {}

    const Permutation& perm() const { return perm_; }
    int size() const { return perm_.size(); }
    std::string str() const
    {
        std::string s;
        for (int v : perm_.entries()) {
            s += std::to_string(v);
        }
        return s;
    }

    friend bool operator==(const Pattern&, const Pattern&) = default;

private:
    Permutation perm_;
};

using PatternSet = std::vector<Pattern>;

/// "312,321" -> {312, 321}. Patterns are digit words; the empty string is the empty set.
inline PatternSet parse_patterns(std::string_view text)
{
    PatternSet out;
    std::stringstream ss{std::string(text)};
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            out.emplace_back(item);
        }
    }
    return out;
}

namespace detail {

// Depth-first search for an occurrence of tau in word. When require_last is
// set, the final pattern letter must sit on the final word letter.
inline bool embeds(std::span<const int> word, const Pattern& tau, bool require_last)
{
    const int m = tau.size();
    const int n = static_cast<int>(word.size());
    if (m == 0) {
        return true;
    }
    if (m > n) {
        return false;
    }
    const auto& t = tau.perm().entries();
    std::vector<int> chosen(static_cast<std::size_t>(m));

    std::function<bool(int, int)> search = [&](int start, int depth) -> bool {
        if (depth == m) {
            return true;
        }
        const int last_start = n - (m - depth);
        for (int idx = start; idx <= last_start; ++idx) {
            if (require_last && depth == m - 1 && idx != n - 1) {
                continue;
            }
            const int v = word[idx];
            bool consistent = true;
            for (int k = 0; k < depth && consistent; ++k) {
                consistent = (chosen[k] < v) == (t[k] < t[depth]);
            }
            if (!consistent) {
                continue;
            }
            chosen[depth] = v;
            if (search(idx + 1, depth + 1)) {
                return true;
            }
        }
        return false;
    };
    return search(0, 0);
}

} // namespace detail

/// True iff some subsequence of sigma normalizes to tau.
inline bool contains(const Permutation& sigma, const Pattern& tau)
{
    return detail::embeds(sigma.entries(), tau, false);
}

inline bool avoids(const Permutation& sigma, const Pattern& tau) { return !contains(sigma, tau); }

inline bool avoids_all(const Permutation& sigma, const PatternSet& patterns)
{
    return std::none_of(patterns.begin(), patterns.end(), [&](const Pattern& p) { return contains(sigma, p); });
}

/// All permutations of S_n avoiding every pattern, in lexicographic order.
///
/// Walks S_n in lexicographic order and filters. Avoidance is hereditary, so a
/// prefix that already contains a pattern is cut off together with all of its
/// extensions; only occurrences that end at the newest letter need checking.
inline std::vector<Permutation> avoiders(int n, const PatternSet& patterns)
{
    std::vector<Permutation> out;
    if (n < 0) {
        return out;
    }
    std::vector<int> prefix;
    std::vector<bool> used(static_cast<std::size_t>(n + 1), false);

    std::function<void()> extend = [&]() {
        if (static_cast<int>(prefix.size()) == n) {
            out.emplace_back(prefix);
            return;
        }
        for (int v = 1; v <= n; ++v) {
            if (used[v]) {
                continue;
            }
            prefix.push_back(v);
            bool ok = true;
            for (const Pattern& p : patterns) {
                if (detail::embeds(prefix, p, true)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                used[v] = true;
                extend();
                used[v] = false;
            }
            prefix.pop_back();
        }
    };
    extend();
    return out;
}

/// Descent positions i (pi_i > pi_{i+1}), increasing.
inline std::vector<int> descents(const Permutation& pi)
{
    std::vector<int> out;
    for (int i = 1; i < pi.size(); ++i) {
        if (pi(i) > pi(i + 1)) {
            out.push_back(i);
        }
    }
    return out;
}

/// Length of the maximal suffix of fixed points n-l+1..n; tl(12...n) = n.
inline int tail_length(const Permutation& pi)
{
    if (!pi.is_normalized()) {
        throw invalid_input("tail_length: permutation is not normalized");
    }
    const int n = pi.size();
    int ell = 0;
    while (ell < n && pi(n - ell) == n - ell) {
        ++ell;
    }
    return ell;
}

inline Permutation direct_sum(const Permutation& lambda, const Permutation& mu)
{
    std::vector<int> e = lambda.entries();
    for (int v : mu.entries()) {
        e.push_back(v + lambda.size());
    }
    return Permutation(std::move(e));
}

/// Sum-indecomposable components, each normalized, left to right.
inline std::vector<Permutation> components(const Permutation& pi)
{
    if (!pi.is_normalized()) {
        throw invalid_input("components: permutation is not normalized");
    }
    std::vector<Permutation> out;
    int running_max = 0;
    int start = 0;
    for (int i = 1; i <= pi.size(); ++i) {
        running_max = std::max(running_max, pi(i));
        if (running_max == i) {
            std::span<const int> block(pi.entries().data() + start, static_cast<std::size_t>(i - start));
            out.push_back(normalize(block));
            start = i;
        }
    }
    return out;
}

/// Direct sum of decreasing permutations.
inline bool is_layered(const Permutation& pi)
{
    for (const Permutation& c : components(pi)) {
        if (!std::is_sorted(c.entries().rbegin(), c.entries().rend())) {
            return false;
        }
    }
    return true;
}

/// Points higher than everything to their left, left to right.
inline std::vector<Point> lr_maxima(const Permutation& pi)
{
    std::vector<Point> out;
    int best = 0;
    for (int i = 1; i <= pi.size(); ++i) {
        if (pi(i) > best) {
            best = pi(i);
            out.push_back({i, best});
        }
    }
    return out;
}

} // namespace hookenum
