#pragma once

#include "hookenum/common.hpp"
#include "hookenum/perm.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace hookenum {

/// An L-shaped hook from the southwest endpoint (sw, pi_sw) up to height
/// pi_ne and right to the northeast endpoint (ne, pi_ne).
struct Hook {
    int sw = 0;
    int ne = 0;
    friend bool operator==(const Hook&, const Hook&) = default;
};

/// A permutation together with one northeast endpoint per descent, listed in
/// increasing descent order. Whether it is a *valid* configuration is decided
/// by validate().
struct HookConfig {
    Permutation pi;
    std::vector<int> ne_of_descent;

    std::vector<Hook> hooks() const
    {
        const std::vector<int> d = descents(pi);
        std::vector<Hook> out;
        for (std::size_t t = 0; t < d.size() && t < ne_of_descent.size(); ++t) {
            out.push_back({d[t], ne_of_descent[t]});
        }
        return out;
    }

    friend bool operator==(const HookConfig&, const HookConfig&) = default;
};

/// i < j and pi_i < pi_j.
inline bool is_hook_of(const Permutation& pi, const Hook& h)
{
    return 1 <= h.sw && h.sw < h.ne && h.ne <= pi.size() && pi(h.sw) < pi(h.ne);
}

namespace detail {

// Closed axis-aligned segment [x0,x1] x [y0,y1]; one of the two extents is a point.
struct Segment {
    int x0, x1, y0, y1;
};

inline std::array<Segment, 2> trace(const Permutation& pi, const Hook& h)
{
    const int top = pi(h.ne);
    return {Segment{h.sw, h.sw, pi(h.sw), top}, Segment{h.sw, h.ne, top, top}};
}

// True if the traces of a and b meet anywhere other than at a northeast
// endpoint of one hook that is the southwest endpoint of the other.
inline bool traces_conflict(const Permutation& pi, const Hook& a, const Hook& b)
{
    std::vector<Point> allowed;
    if (a.ne == b.sw) {
        allowed.push_back({a.ne, pi(a.ne)});
    }
    if (b.ne == a.sw) {
        allowed.push_back({b.ne, pi(b.ne)});
    }
    for (const Segment& s : trace(pi, a)) {
        for (const Segment& t : trace(pi, b)) {
            const int x0 = std::max(s.x0, t.x0), x1 = std::min(s.x1, t.x1);
            const int y0 = std::max(s.y0, t.y0), y1 = std::min(s.y1, t.y1);
            if (x0 > x1 || y0 > y1) {
                continue;
            }
            const bool single_allowed_point =
                x0 == x1 && y0 == y1 &&
                std::any_of(allowed.begin(), allowed.end(), [&](const Point& p) { return p.pos == x0 && p.value == y0; });
            if (!single_allowed_point) {
                return true;
            }
        }
    }
    return false;
}

// No point strictly between the endpoints sits above the horizontal segment.
inline bool nothing_above(const Permutation& pi, const Hook& h)
{
    for (int a = h.sw + 1; a < h.ne; ++a) {
        if (pi(a) > pi(h.ne)) {
            return false;
        }
    }
    return true;
}

} // namespace detail

/// Geometric validity of an arbitrary set of hooks on pi: each is a genuine
/// hook, no point lies above one, and no two traces meet except where the
/// northeast endpoint of one is the southwest endpoint of the other. The
/// answer does not depend on the order of the hooks.
inline bool hooks_are_compatible(const Permutation& pi, std::span<const Hook> hooks)
{
    for (const Hook& h : hooks) {
        if (!is_hook_of(pi, h) || !detail::nothing_above(pi, h)) {
            return false;
        }
    }
    for (std::size_t a = 0; a < hooks.size(); ++a) {
        for (std::size_t b = a + 1; b < hooks.size(); ++b) {
            if (detail::traces_conflict(pi, hooks[a], hooks[b])) {
                return false;
            }
        }
    }
    return true;
}

/// Valid hook configuration test: exactly one hook per descent, anchored at
/// the descent top, and the hooks are compatible.
inline bool validate(const HookConfig& cfg)
{
    if (cfg.ne_of_descent.size() != descents(cfg.pi).size()) {
        return false;
    }
    const std::vector<Hook> hooks = cfg.hooks();
    return hooks_are_compatible(cfg.pi, hooks);
}

namespace detail {

// Backtracking over descents in increasing position order. Candidates for a
// descent are the positions to its right that are higher than it and higher
// than every point strictly between; each candidate is also checked against
// the hooks already placed. visit() receives every complete configuration.
inline void backtrack_vhcs(const Permutation& pi, const std::function<void(const std::vector<int>&)>& visit)
{
    const std::vector<int> d = descents(pi);
    const int n = pi.size();
    std::vector<int> ne(d.size());
    std::vector<Hook> placed;

    std::function<void(std::size_t)> step = [&](std::size_t t) {
        if (t == d.size()) {
            visit(ne);
            return;
        }
        const int sw = d[t];
        int between_max = 0;
        for (int j = sw + 1; j <= n; ++j) {
            const int v = pi(j);
            if (v > pi(sw) && v > between_max) {
                const Hook h{sw, j};
                const bool fits = std::none_of(placed.begin(), placed.end(),
                                               [&](const Hook& g) { return traces_conflict(pi, g, h); });
                if (fits) {
                    ne[t] = j;
                    placed.push_back(h);
                    step(t + 1);
                    placed.pop_back();
                }
            }
            between_max = std::max(between_max, v);
        }
    };
    step(0);
}

} // namespace detail

/// All valid hook configurations of pi, in lexicographic order of their
/// northeast-endpoint tuples. An increasing permutation has exactly one (no hooks).
inline std::vector<HookConfig> enumerate_vhcs(const Permutation& pi)
{
    std::vector<HookConfig> out;
    detail::backtrack_vhcs(pi, [&](const std::vector<int>& ne) {
        HookConfig cfg{pi, ne};
        if (!validate(cfg)) {
            throw internal_inconsistency("enumerate_vhcs produced an invalid configuration on " + pi.str());
        }
        out.push_back(std::move(cfg));
    });
    return out;
}

/// |VHC(pi)| without materializing the configurations.
inline Count count_vhcs(const Permutation& pi)
{
    Count total = 0;
    detail::backtrack_vhcs(pi, [&](const std::vector<int>&) { ++total; });
    return total;
}

/// Sum of |VHC(pi)| over the avoiders of length n. This brute force is the
/// oracle for every recurrence and closed form in counting.hpp.
inline Count count_vhcs_of_class(int n, const PatternSet& patterns)
{
    Count total = 0;
    for (const Permutation& pi : avoiders(n, patterns)) {
        total += count_vhcs(pi);
    }
    return total;
}

/// Number of left-to-right maxima that are not northeast endpoints.
inline int abundancy(const HookConfig& cfg)
{
    if (!validate(cfg)) {
        throw invalid_input("abundancy: configuration is not valid");
    }
    int open = 0;
    for (const Point& p : lr_maxima(cfg.pi)) {
        if (std::find(cfg.ne_of_descent.begin(), cfg.ne_of_descent.end(), p.pos) == cfg.ne_of_descent.end()) {
            ++open;
        }
    }
    return open;
}

/// (unsheltered, sheltered) parts cut out by hook h; pi_ne belongs to neither.
/// Both parts are returned as raw subsequences, not normalized.
inline std::pair<Permutation, Permutation> split_at_hook(const Permutation& pi, const Hook& h)
{
    if (!is_hook_of(pi, h)) {
        throw invalid_input("split_at_hook: not a hook of the permutation");
    }
    std::vector<int> unsheltered, sheltered;
    for (int a = 1; a <= pi.size(); ++a) {
        if (a <= h.sw || a > h.ne) {
            unsheltered.push_back(pi(a));
        } else if (a < h.ne) {
            sheltered.push_back(pi(a));
        }
    }
    return {Permutation(std::move(unsheltered)), Permutation(std::move(sheltered))};
}

/// SW_d(pi): every hook (d, j) with j > d and pi_j > pi_d.
inline std::vector<Hook> hooks_from(const Permutation& pi, int d)
{
    std::vector<Hook> out;
    for (int j = d + 1; j <= pi.size(); ++j) {
        if (pi(j) > pi(d)) {
            out.push_back({d, j});
        }
    }
    return out;
}

/// A descent is tail-bound when every hook starting at it ends in the tail.
inline bool is_tail_bound(const Permutation& pi, int d)
{
    const int first_tail_pos = pi.size() - tail_length(pi) + 1;
    const std::vector<Hook> hs = hooks_from(pi, d);
    return std::all_of(hs.begin(), hs.end(), [&](const Hook& h) { return h.ne >= first_tail_pos; });
}

/// Sum of |VHC(pi)| over avoiders of length n + ell whose tail length is exactly ell.
inline Count tail_refined_count(int n, int ell, const PatternSet& patterns)
{
    Count total = 0;
    for (const Permutation& pi : avoiders(n + ell, patterns)) {
        if (tail_length(pi) == ell) {
            total += count_vhcs(pi);
        }
    }
    return total;
}

} // namespace hookenum
