#pragma once

#include "hookenum/common.hpp"
#include "hookenum/motzkin.hpp"
#include "hookenum/perm.hpp"
#include "hookenum/vhc.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace hookenum {

/// Square matrix with 1-indexed access. For a 312-avoider with left-to-right
/// maxima R_0 (rightmost) .. R_l (leftmost) and R_{l+1} = (0,0), entry (i,j)
/// counts the points whose height lies strictly between R_{i+1} and R_i and
/// whose position lies strictly between R_{l-j+1} and R_{l-j}.
class LRMatrix {
public:
    LRMatrix() = default;
    explicit LRMatrix(int size)
        : size_(size), cells_(static_cast<std::size_t>(size) * static_cast<std::size_t>(size), 0)
    {
    }

    int size() const { return size_; }
    int& at(int i, int j) { return cells_[index(i, j)]; }
    int at(int i, int j) const { return cells_[index(i, j)]; }

    std::vector<int> row_sums() const
    {
        std::vector<int> s(static_cast<std::size_t>(size_), 0);
        for (int i = 1; i <= size_; ++i) {
            for (int j = 1; j <= size_; ++j) {
                s[i - 1] += at(i, j);
            }
        }
        return s;
    }

    std::vector<int> col_sums() const
    {
        std::vector<int> s(static_cast<std::size_t>(size_), 0);
        for (int i = 1; i <= size_; ++i) {
            for (int j = 1; j <= size_; ++j) {
                s[j - 1] += at(i, j);
            }
        }
        return s;
    }

    /// m_ij = 0 whenever j <= l - i.
    bool has_staircase_zeros() const
    {
        for (int i = 1; i <= size_; ++i) {
            for (int j = 1; j <= size_ - i; ++j) {
                if (at(i, j) != 0) {
                    return false;
                }
            }
        }
        return true;
    }

    /// In every lower 2x2 submatrix (rows r < r', columns c < c', l+1-c <= r)
    /// the bottom-left or the top-right entry is zero.
    bool has_lower_2x2_property() const
    {
        for (int c = 1; c <= size_; ++c) {
            for (int c2 = c + 1; c2 <= size_; ++c2) {
                for (int r = std::max(1, size_ + 1 - c); r <= size_; ++r) {
                    for (int r2 = r + 1; r2 <= size_; ++r2) {
                        if (at(r2, c) != 0 && at(r, c2) != 0) {
                            return false;
                        }
                    }
                }
            }
        }
        return true;
    }

    friend bool operator==(const LRMatrix&, const LRMatrix&) = default;

private:
    std::size_t index(int i, int j) const
    {
        return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(size_) + static_cast<std::size_t>(j - 1);
    }

    int size_ = 0;
    std::vector<int> cells_;
};

/// An interval (lower <= upper) of the class-refined order.
struct PathInterval {
    MotzkinPath lower;
    MotzkinPath upper;
    friend bool operator==(const PathInterval&, const PathInterval&) = default;
};

namespace detail {

inline const Pattern& pattern_312()
{
    static const Pattern p("312");
    return p;
}

// Left-to-right maxima listed right to left, followed by the sentinel (0,0).
inline std::vector<Point> maxima_right_to_left(const Permutation& pi)
{
    std::vector<Point> r = lr_maxima(pi);
    std::reverse(r.begin(), r.end());
    r.push_back({0, 0});
    return r;
}

inline void require_hookable_312_avoider(const Permutation& pi)
{
    if (!pi.is_normalized() || pi.empty()) {
        throw invalid_input("expected a nonempty permutation of 1..n");
    }
    if (contains(pi, pattern_312())) {
        throw invalid_input("permutation contains 312: " + pi.str());
    }
    if (pi(pi.size()) != pi.size()) {
        throw invalid_input("last entry must be n for a configuration to exist: " + pi.str());
    }
}

} // namespace detail

inline LRMatrix lr_matrix(const Permutation& pi)
{
    detail::require_hookable_312_avoider(pi);
    const std::vector<Point> r = detail::maxima_right_to_left(pi);
    const int ell = static_cast<int>(r.size()) - 2;
    LRMatrix m(ell);
    const std::vector<Point> maxima = lr_maxima(pi);
    for (int x = 1; x <= pi.size(); ++x) {
        const int y = pi(x);
        if (std::any_of(maxima.begin(), maxima.end(), [&](const Point& p) { return p.pos == x; })) {
            continue;
        }
        int row = 0, col = 0;
        for (int i = 1; i <= ell; ++i) {
            if (r[i + 1].value < y && y < r[i].value) {
                row = i;
            }
        }
        for (int j = 1; j <= ell; ++j) {
            if (r[ell - j + 1].pos < x && x < r[ell - j].pos) {
                col = j;
            }
        }
        if (row == 0 || col == 0) {
            throw internal_inconsistency("point outside every band of the left-to-right maxima");
        }
        ++m.at(row, col);
    }
    return m;
}

/// The pair of paths attached to a configuration of a 312-avoider. Letter X_j
/// is U exactly when R_{j-1} is a northeast endpoint; the lower path takes its
/// D-gaps from column sums (read right to left), the upper one from row sums.
inline PathInterval forward(const HookConfig& cfg)
{
    const Permutation& pi = cfg.pi;
    if (pi.empty() || contains(pi, detail::pattern_312())) {
        throw invalid_input("forward: permutation must be a nonempty 312-avoider");
    }
    if (!validate(cfg)) {
        throw invalid_input("forward: configuration is not valid");
    }
    const LRMatrix m = lr_matrix(pi);
    const int ell = m.size();
    const std::vector<Point> r = detail::maxima_right_to_left(pi);
    const std::vector<int> rows = m.row_sums();
    const std::vector<int> cols = m.col_sums();

    std::string lower, upper;
    for (int j = 1; j <= ell; ++j) {
        const int pos = r[j - 1].pos;
        const bool is_ne = std::find(cfg.ne_of_descent.begin(), cfg.ne_of_descent.end(), pos) != cfg.ne_of_descent.end();
        const char x = is_ne ? 'U' : 'E';
        lower += x;
        upper += x;
        lower.append(static_cast<std::size_t>(cols[ell - j]), 'D');
        upper.append(static_cast<std::size_t>(rows[j - 1]), 'D');
    }
    try {
        return {MotzkinPath(lower), MotzkinPath(upper)};
    } catch (const invalid_input& e) {
        throw internal_inconsistency(std::string("forward produced a non-Motzkin word: ") + e.what());
    }
}

/// The matrix with the given row and column sums that has staircase zeros and
/// the lower 2x2 property.
///
/// Rows are filled top to bottom; each row walks its allowed columns
/// (j > l - i) left to right and takes as much as the column still holds.
/// Every column open to a row stays open to all later rows, so the greedy fill
/// succeeds exactly when the cumulative row demand never exceeds the capacity
/// of the open columns. A column that a row walks past is saturated, which
/// rules out a positive bottom-left / top-right pair.
inline LRMatrix reconstruct_matrix(const std::vector<int>& row_sums, const std::vector<int>& col_sums)
{
    const int ell = static_cast<int>(row_sums.size());
    if (static_cast<int>(col_sums.size()) != ell) {
        throw infeasible("row and column margins have different lengths");
    }
    if (std::any_of(row_sums.begin(), row_sums.end(), [](int v) { return v < 0; }) ||
        std::any_of(col_sums.begin(), col_sums.end(), [](int v) { return v < 0; })) {
        throw infeasible("margins must be nonnegative");
    }
    if (std::accumulate(row_sums.begin(), row_sums.end(), 0) != std::accumulate(col_sums.begin(), col_sums.end(), 0)) {
        throw infeasible("row and column totals differ");
    }
    int demand = 0, capacity = 0;
    for (int p = 1; p <= ell; ++p) {
        demand += row_sums[p - 1];
        capacity += col_sums[ell - p];
        if (demand > capacity) {
            throw infeasible("margins violate the suffix dominance condition");
        }
    }

    LRMatrix m(ell);
    std::vector<int> room = col_sums;
    for (int i = 1; i <= ell; ++i) {
        int budget = row_sums[i - 1];
        for (int j = ell - i + 1; j <= ell && budget > 0; ++j) {
            const int take = std::min(budget, room[j - 1]);
            m.at(i, j) = take;
            room[j - 1] -= take;
            budget -= take;
        }
        if (budget != 0) {
            throw internal_inconsistency("greedy fill left a row short");
        }
    }
    if (m.row_sums() != row_sums || m.col_sums() != col_sums || !m.has_staircase_zeros() || !m.has_lower_2x2_property()) {
        throw internal_inconsistency("greedy fill violates a matrix property");
    }
    return m;
}

/// The 312-avoider whose matrix is m. Points inside one horizontal band (and
/// inside one vertical band) decrease from left to right, which fixes every
/// position and height once the left-to-right maxima are laid out.
inline Permutation rebuild_permutation(const LRMatrix& m)
{
    const int ell = m.size();
    const std::vector<int> rows = m.row_sums();
    const std::vector<int> cols = m.col_sums();
    const int n = ell + 1 + std::accumulate(rows.begin(), rows.end(), 0);

    std::vector<int> rx(static_cast<std::size_t>(ell + 2), 0), ry(static_cast<std::size_t>(ell + 2), 0);
    for (int i = ell; i >= 1; --i) {
        ry[i] = ry[i + 1] + rows[i - 1] + 1;
    }
    ry[0] = n;
    rx[ell] = 1;
    for (int j = 1; j <= ell; ++j) {
        rx[ell - j] = rx[ell - j + 1] + cols[j - 1] + 1;
    }

    std::vector<int> entries(static_cast<std::size_t>(n), 0);
    for (int i = 0; i <= ell; ++i) {
        entries[rx[i] - 1] = ry[i];
    }
    // x cursor per column band, y cursor per row band.
    std::vector<int> next_x(static_cast<std::size_t>(ell + 1)), next_y(static_cast<std::size_t>(ell + 1));
    for (int j = 1; j <= ell; ++j) {
        next_x[j] = rx[ell - j + 1] + 1;
    }
    for (int i = 1; i <= ell; ++i) {
        next_y[i] = ry[i] - 1;
    }
    for (int i = 1; i <= ell; ++i) {
        for (int j = 1; j <= ell; ++j) {
            for (int k = 0; k < m.at(i, j); ++k) {
                entries[next_x[j]++ - 1] = next_y[i]--;
            }
        }
    }
    return Permutation(std::move(entries));
}

/// Outcome of inverse(): which hook-assignment branch produced the answer.
struct InverseResult {
    HookConfig cfg;
    bool used_fallback = false;
};

/// The unique configuration mapped to iv by forward().
///
/// Northeast endpoints are the maxima R_i with X_{i+1} = U. Descent tops are
/// matched right to left, each to the leftmost unused endpoint strictly to its
/// right. If that assignment does not validate, every configuration of the
/// rebuilt permutation is searched instead and used_fallback is set.
inline InverseResult inverse_detailed(const PathInterval& iv)
{
    if (!leq(PosetKind::C, iv.lower, iv.upper)) {
        throw invalid_input("inverse: pair is not an interval of the class-refined order");
    }
    const PathDecomposition low = decompose(iv.lower);
    const PathDecomposition up = decompose(iv.upper);
    const int ell = static_cast<int>(low.letters.size());

    std::vector<int> cols(static_cast<std::size_t>(ell));
    for (int j = 1; j <= ell; ++j) {
        cols[j - 1] = low.gaps[ell - j];
    }
    const LRMatrix m = reconstruct_matrix(up.gaps, cols);
    const Permutation pi = rebuild_permutation(m);
    const std::vector<Point> r = detail::maxima_right_to_left(pi);

    std::vector<int> endpoints;
    for (int i = 0; i < ell; ++i) {
        if (low.letters[i] == 'U') {
            endpoints.push_back(r[i].pos);
        }
    }
    std::sort(endpoints.begin(), endpoints.end());

    const std::vector<int> d = descents(pi);
    HookConfig cfg{pi, std::vector<int>(d.size(), 0)};
    std::vector<bool> taken(endpoints.size(), false);
    bool matched = true;
    for (std::size_t t = d.size(); t-- > 0;) {
        bool found = false;
        for (std::size_t a = 0; a < endpoints.size(); ++a) {
            if (!taken[a] && endpoints[a] > d[t] && pi(endpoints[a]) > pi(d[t])) {
                taken[a] = true;
                cfg.ne_of_descent[t] = endpoints[a];
                found = true;
                break;
            }
        }
        matched = matched && found;
    }
    matched = matched && std::all_of(taken.begin(), taken.end(), [](bool b) { return b; });
    if (matched && validate(cfg) && forward(cfg) == iv) {
        return {cfg, false};
    }

    for (const HookConfig& candidate : enumerate_vhcs(pi)) {
        if (forward(candidate) == iv) {
            return {candidate, true};
        }
    }
    throw internal_inconsistency("inverse: no configuration maps to the interval");
}

inline HookConfig inverse(const PathInterval& iv) { return inverse_detailed(iv).cfg; }

/// True when the configuration lands on the diagonal (lower == upper).
inline bool is_diagonal_image(const HookConfig& cfg)
{
    const PathInterval iv = forward(cfg);
    return iv.lower == iv.upper;
}

/// Every interval (a, b) of the given order on paths of length n.
inline std::vector<PathInterval> all_intervals(int n, PosetKind kind)
{
    const std::vector<PathFeatures> feats = path_features(n);
    std::vector<PathInterval> out;
    for (const auto& a : feats) {
        for (const auto& b : feats) {
            if (leq(kind, a, b)) {
                out.push_back({a.path, b.path});
            }
        }
    }
    return out;
}

} // namespace hookenum
