#pragma once

#include "hookenum/common.hpp"
#include "hookenum/motzkin.hpp"
#include "hookenum/perm.hpp"
#include "hookenum/vhc.hpp"
#include "hookenum/walks.hpp"

#include <array>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace hookenum {

/// Dense table of counts over a box of small nonnegative indices. Every entry
/// is written at most once; reads outside the box yield zero.
template <std::size_t Rank>
class CountTable {
public:
    using Key = std::array<int, Rank>;

    explicit CountTable(Key extents) : extents_(extents)
    {
        std::size_t total = 1;
        for (int e : extents_) {
            total *= static_cast<std::size_t>(std::max(e, 0));
        }
        values_.resize(total);
        known_.assign(total, false);
    }

    bool in_range(const Key& k) const
    {
        for (std::size_t d = 0; d < Rank; ++d) {
            if (k[d] < 0 || k[d] >= extents_[d]) {
                return false;
            }
        }
        return true;
    }

    const Count& operator[](const Key& k) const
    {
        static const Count zero = 0;
        return in_range(k) ? values_[offset(k)] : zero;
    }

    void set(const Key& k, Count v)
    {
        if (!in_range(k)) {
            throw internal_inconsistency("CountTable::set outside the table");
        }
        const std::size_t o = offset(k);
        if (known_[o]) {
            throw internal_inconsistency("CountTable entry written twice");
        }
        known_[o] = true;
        values_[o] = std::move(v);
    }

    bool has(const Key& k) const { return in_range(k) && known_[offset(k)]; }

private:
    std::size_t offset(const Key& k) const
    {
        std::size_t o = 0;
        for (std::size_t d = 0; d < Rank; ++d) {
            o = o * static_cast<std::size_t>(extents_[d]) + static_cast<std::size_t>(k[d]);
        }
        return o;
    }

    Key extents_;
    std::vector<Count> values_;
    std::vector<bool> known_;
};

// ---------------------------------------------------------------------------
// 312: B_{l,c}(m) counts configurations on 312-avoiders of length m + l with
// tail length l and c components.

/// Tables B_{l,c}(m) and B_{>=l,>=c}(m) for l + m <= max_total.
struct Av312Tables {
    CountTable<3> exact;    // (l, c, m)
    CountTable<3> at_least; // (l, c, m)
};

inline Av312Tables av312_tables(int max_total)
{
    const int e = max_total + 1;
    Av312Tables t{CountTable<3>({e, e + 1, e}), CountTable<3>({e, e + 1, e})};
    auto ge = [&](int ell, int c, int m) -> const Count& { return t.at_least[{ell, std::max(c, 0), m}]; };

    for (int total = 0; total <= max_total; ++total) {
        for (int m = 0; m <= total; ++m) {
            const int ell = total - m;
            for (int c = 0; c <= total; ++c) {
                Count v = 0;
                if (m == 0) {
                    v = c == ell ? 1 : 0;
                } else if (c > ell) {
                    for (int j = 1; j <= ell; ++j) {
                        v += ge(ell - j, c - j, m - 1);
                    }
                }
                t.exact.set({ell, c, m}, std::move(v));
            }
        }
        // B_{>=l,>=c}(m) = sum_{c' >= c} B_{l,c'}(m) + B_{>=l+1,>=c}(m-1), m ascending.
        for (int m = 0; m <= total; ++m) {
            const int ell = total - m;
            Count suffix = 0;
            std::vector<Count> row(static_cast<std::size_t>(total + 1));
            for (int c = total; c >= 0; --c) {
                suffix += t.exact[{ell, c, m}];
                row[c] = suffix;
            }
            for (int c = 0; c <= total; ++c) {
                Count v = row[c];
                if (m >= 1) {
                    v += t.at_least[{ell + 1, c, m - 1}];
                }
                t.at_least.set({ell, c, m}, std::move(v));
            }
        }
    }
    return t;
}

/// |VHC(Av_n(312))| for n = 0..n_max.
inline std::vector<Count> av312_sequence(int n_max)
{
    const Av312Tables t = av312_tables(n_max);
    std::vector<Count> out;
    for (int n = 0; n <= n_max; ++n) {
        out.push_back(t.at_least[{0, 0, n}]);
    }
    return out;
}

inline Count count_av312(int n) { return av312_sequence(n).back(); }

// ---------------------------------------------------------------------------
// 231 and (231, 321): B_l(m) counts configurations on avoiders of length m + l
// with tail length l. Both recurrences split at the tail-bound descent sitting
// on the entry n + 1; they differ only in whether the sheltered part is free.

namespace detail {

struct TailTables {
    CountTable<2> exact;    // (l, m)
    CountTable<2> at_least; // (l, m)
};

template <typename Step>
TailTables tail_tables(int max_total, Step&& step)
{
    const int e = max_total + 1;
    TailTables t{CountTable<2>({e, e}), CountTable<2>({e, e})};
    for (int total = 0; total <= max_total; ++total) {
        for (int m = 0; m <= total; ++m) {
            const int ell = total - m;
            t.exact.set({ell, m}, m == 0 ? Count(1) : step(t, ell, m - 1));
        }
        for (int m = 0; m <= total; ++m) {
            const int ell = total - m;
            Count v = t.exact[{ell, m}];
            if (m >= 1) {
                v += t.at_least[{ell + 1, m - 1}];
            }
            t.at_least.set({ell, m}, std::move(v));
        }
    }
    return t;
}

inline std::vector<Count> read_at_least_zero(const TailTables& t, int n_max)
{
    std::vector<Count> out;
    for (int n = 0; n <= n_max; ++n) {
        out.push_back(t.at_least[{0, n}]);
    }
    return out;
}

} // namespace detail

/// |VHC(Av_n(231))| (equivalently 132) for n = 0..n_max.
inline std::vector<Count> av231_sequence(int n_max)
{
    // B_l(n+1) = sum_{i=1..n} sum_{j=1..l} B_{>=l-j+1}(n-i) B_{>=j-1}(i)
    const auto t = detail::tail_tables(n_max, [](const detail::TailTables& tab, int ell, int n) {
        Count v = 0;
        for (int j = 1; j <= ell; ++j) {
            for (int i = 1; i <= n; ++i) {
                v += tab.at_least[{ell - j + 1, n - i}] * tab.at_least[{j - 1, i}];
            }
        }
        return v;
    });
    return detail::read_at_least_zero(t, n_max);
}

inline Count count_av231(int n) { return av231_sequence(n).back(); }

/// |VHC(Av_n(231, 321))| for n = 0..n_max.
inline std::vector<Count> av231_321_sequence(int n_max)
{
    // B_l(n+1) = sum_{i=1..n} sum_{j=1..l} B_{>=l-j+1}(n-i)
    const auto t = detail::tail_tables(n_max, [](const detail::TailTables& tab, int ell, int n) {
        Count v = 0;
        for (int j = 1; j <= ell; ++j) {
            for (int i = 1; i <= n; ++i) {
                v += tab.at_least[{ell - j + 1, n - i}];
            }
        }
        return v;
    });
    return detail::read_at_least_zero(t, n_max);
}

inline Count count_av231_321(int n) { return av231_321_sequence(n).back(); }

// ---------------------------------------------------------------------------
// (312, 321): A_a(m) counts configurations on avoiders of length m + a with
// abundancy a.

/// Base-case knobs for the abundancy recurrence. Only tests touch these, to
/// confirm that the verification catches a wrong base case.
struct AbundancyBaseCases {
    std::optional<Count> a0_at_1; // overrides A_0(1), which is 0
};

inline std::vector<Count> av312_321_sequence(int n_max, const AbundancyBaseCases& base = {})
{
    const int e = n_max + 1;
    CountTable<2> exact({e, e}), at_least({e, e});
    for (int total = 0; total <= n_max; ++total) {
        // A_a(m) needs A_{a-1}(m) at the previous total, so sweep a upward.
        for (int a = 0; a <= total; ++a) {
            const int m = total - a;
            Count v = 0;
            if (m == 0) {
                v = 1;
            } else if (a == 0) {
                v = (m == 1 && base.a0_at_1) ? *base.a0_at_1 : Count(0);
            } else {
                // A_a(n+1) = A_{a-1}(n+1) + sum_{r=1..a} A_{>=a-r+1}(n-1)
                v = exact[{a - 1, m}];
                for (int r = 1; r <= a && m - 2 >= 0; ++r) {
                    v += at_least[{a - r + 1, m - 2}];
                }
            }
            exact.set({a, m}, std::move(v));
        }
        for (int m = 0; m <= total; ++m) {
            const int a = total - m;
            Count v = exact[{a, m}];
            if (m >= 1) {
                v += at_least[{a + 1, m - 1}];
            }
            at_least.set({a, m}, std::move(v));
        }
    }
    std::vector<Count> out;
    for (int n = 0; n <= n_max; ++n) {
        out.push_back(at_least[{0, n}]);
    }
    return out;
}

inline Count count_av312_321(int n) { return av312_321_sequence(n).back(); }

/// sum_{k=0}^{floor((n-1)/2)} C(n-k-1, k) C(n, 2k) / (2k+1), summed exactly.
inline Count closed_form_312_321(int n)
{
    if (n < 1) {
        throw invalid_input("closed_form_312_321 needs n >= 1");
    }
    Rational total = 0;
    for (int k = 0; 2 * k <= n - 1; ++k) {
        total += Rational(binomial(n - k - 1, k) * binomial(n, 2 * k), Count(2 * k + 1));
    }
    if (denominator(total) != 1) {
        throw internal_inconsistency("closed_form_312_321 is not an integer at n = " + std::to_string(n));
    }
    return numerator(total);
}

/// 1 + sum_{l=1}^{n-1} (n-l-1) l.
inline Count closed_form_132_321(int n)
{
    if (n < 1) {
        throw invalid_input("closed_form_132_321 needs n >= 1");
    }
    Count total = 1;
    for (int ell = 1; ell <= n - 1; ++ell) {
        total += Count(n - ell - 1) * ell;
    }
    return total;
}

// ---------------------------------------------------------------------------
// (231, 1243), built on the tail-refined (132, 231) table.

enum class TailTableSource {
    first_down,  // A_l(m) = b(m + l - 1, l + 1) from the Motzkin first-down statistic
    brute_force, // A_l(m) by enumerating Av(132, 231)
};

/// A_{>=l}(m) for (132, 231) with l + m <= max_total.
inline CountTable<2> tail_refined_132_231(int max_total, TailTableSource source = TailTableSource::first_down)
{
    const int e = max_total + 1;
    CountTable<2> exact({e, e}), at_least({e, e});
    const auto walks = detail::walks_to_axis(std::max(max_total, 1));
    auto first_down = [&](int n, int ell) {
        if (ell == n + 1) {
            return Count(1);
        }
        Count v = 0;
        for (int k = 1; k <= ell - 1; ++k) {
            v += binomial(ell - 1, k) * walks[n - ell][k - 1];
        }
        return v;
    };
    static const PatternSet pats{Pattern("132"), Pattern("231")};

    for (int total = 0; total <= max_total; ++total) {
        for (int m = 0; m <= total; ++m) {
            const int ell = total - m;
            Count v;
            if (source == TailTableSource::brute_force) {
                v = tail_refined_count(m, ell, pats);
            } else if (m == 0) {
                v = 1;
            } else if (m == 1 || ell == 0) {
                v = 0;
            } else {
                v = first_down(m + ell - 1, ell + 1);
            }
            exact.set({ell, m}, std::move(v));
        }
        for (int m = 0; m <= total; ++m) {
            const int ell = total - m;
            Count v = exact[{ell, m}];
            if (m >= 1) {
                v += at_least[{ell + 1, m - 1}];
            }
            at_least.set({ell, m}, std::move(v));
        }
    }
    return at_least;
}

inline std::vector<Count> av231_1243_sequence(int n_max, TailTableSource source = TailTableSource::first_down)
{
    const CountTable<2> a_ge = tail_refined_132_231(n_max, source);
    std::vector<std::vector<Count>> binom;
    for (int r = 0; r <= n_max + 1; ++r) {
        binom.push_back(binomial_row(r));
    }
    auto choose = [&](int top, int k) -> Count { return (k < 0 || k > top) ? Count(0) : binom[top][k]; };

    // B_l(n+1) = sum_j sum_{i<=n-1} C(l-j+1, n-i-1) A_{>=j-1}(i) + sum_j B_{>=j-1}(n), n >= 1.
    const auto t = detail::tail_tables(n_max, [&](const detail::TailTables& tab, int ell, int n) {
        Count v = 0;
        if (n == 0) {
            return v;
        }
        for (int j = 1; j <= ell; ++j) {
            for (int i = 1; i <= n - 1; ++i) {
                v += choose(ell - j + 1, n - i - 1) * a_ge[{j - 1, i}];
            }
            v += tab.at_least[{j - 1, n}];
        }
        return v;
    });
    return detail::read_at_least_zero(t, n_max);
}

inline Count count_av231_1243(int n) { return av231_1243_sequence(n).back(); }

// ---------------------------------------------------------------------------
// Closed forms for three or four length-3 patterns.

enum class TripleFamily {
    p132_231_321,
    p132_312_321,
    p132_231_312,
    quadruple, // 132, 231, 312, 321
};

inline Count fibonacci(int n)
{
    Count a = 0, b = 1; // F_0, F_1
    for (int i = 0; i < n; ++i) {
        Count c = a + b;
        a = std::move(b);
        b = std::move(c);
    }
    return a;
}

inline Count prop_closed_forms(TripleFamily family, int n)
{
    if (n < 1) {
        throw invalid_input("prop_closed_forms needs n >= 1");
    }
    switch (family) {
    case TripleFamily::p132_231_321:
    case TripleFamily::p132_312_321:
        return 1 + binomial(n - 1, 2);
    case TripleFamily::p132_231_312:
        return fibonacci(n);
    case TripleFamily::quadruple:
        return Count(n - 1);
    }
    return 0;
}

/// M_{n-1}, the common count for {132,231}, {132,312} and {231,312}.
inline Count pair_counts_motzkin(int n)
{
    if (n < 1) {
        throw invalid_input("pair_counts_motzkin needs n >= 1");
    }
    return motzkin_numbers(n - 1).back();
}

// ---------------------------------------------------------------------------
// Walk side of the 312 identity.

/// sum_{k=0}^{n-1} C(n-1, k) w(k).
inline Count sankar_sum(int n)
{
    if (n < 1) {
        throw invalid_input("sankar_sum needs n >= 1");
    }
    const std::vector<Count> w = walk_sequence(n - 1);
    const std::vector<Count> row = binomial_row(n - 1);
    Count total = 0;
    for (int k = 0; k <= n - 1; ++k) {
        total += row[k] * w[k];
    }
    return total;
}

struct WalkIdentityReport {
    int n_max = 0;
    bool ok = true;
    std::optional<int> first_mismatch;
    Count walk_side;
    Count recurrence_side;
};

/// Compares sankar_sum(n) with count_av312(n) for every n <= n_max.
inline WalkIdentityReport walk_identity_check(int n_max)
{
    WalkIdentityReport rep;
    rep.n_max = n_max;
    const std::vector<Count> rec = av312_sequence(n_max);
    for (int n = 1; n <= n_max; ++n) {
        const Count lhs = sankar_sum(n);
        if (lhs != rec[n]) {
            rep.ok = false;
            rep.first_mismatch = n;
            rep.walk_side = lhs;
            rep.recurrence_side = rec[n];
            break;
        }
    }
    return rep;
}

} // namespace hookenum
