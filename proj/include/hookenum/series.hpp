#pragma once

#include "hookenum/common.hpp"
#include "hookenum/counting.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace hookenum {

/// c_0 + c_1 x + ... + c_{N-1} x^{N-1} + O(x^N) with exact rational coefficients.
class TruncatedSeries {
public:
    TruncatedSeries() = default;

    TruncatedSeries(int order, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
    {
        if (order < 0) {
            throw invalid_input("series order must be nonnegative");
        }
        coeffs_.resize(static_cast<std::size_t>(order));
    }

    static TruncatedSeries from_ints(int order, std::initializer_list<long> cs)
    {
        std::vector<Rational> v;
        for (long c : cs) {
            v.emplace_back(c);
        }
        return TruncatedSeries(order, std::move(v));
    }

    static TruncatedSeries from_counts(int order, const std::vector<Count>& cs)
    {
        std::vector<Rational> v(cs.begin(), cs.end());
        return TruncatedSeries(order, std::move(v));
    }

    static TruncatedSeries constant(int order, const Rational& c) { return TruncatedSeries(order, {c}); }

    int order() const { return static_cast<int>(coeffs_.size()); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
    Rational& operator[](int i) { return coeffs_[static_cast<std::size_t>(i)]; }

    bool is_zero() const
    {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
    }

    /// Coefficients as integers; throws if any is not integral.
    std::vector<Count> integer_coeffs() const
    {
        std::vector<Count> out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (denominator(coeffs_[i]) != 1) {
                throw internal_inconsistency("series coefficient " + std::to_string(i) + " is not an integer");
            }
            out.push_back(numerator(coeffs_[i]));
        }
        return out;
    }

    /// Divides by x^k; the first k coefficients must vanish. The order drops by k.
    TruncatedSeries shift_down(int k) const
    {
        if (k > order()) {
            throw invalid_input("shift_down past the series order");
        }
        for (int i = 0; i < k; ++i) {
            if (coeffs_[i] != 0) {
                throw division_error("shift_down: coefficient " + std::to_string(i) + " is nonzero");
            }
        }
        return TruncatedSeries(order() - k, std::vector<Rational>(coeffs_.begin() + k, coeffs_.end()));
    }

    /// Multiplies by x^k, keeping the order.
    TruncatedSeries shift_up(int k) const
    {
        std::vector<Rational> v(static_cast<std::size_t>(k));
        v.insert(v.end(), coeffs_.begin(), coeffs_.end());
        return TruncatedSeries(order(), std::move(v));
    }

    TruncatedSeries truncate(int order) const { return TruncatedSeries(std::min(order, this->order()), coeffs_); }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<Rational> coeffs_;
};

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const int n = std::min(a.order(), b.order());
    std::vector<Rational> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        v[i] = a[i] + b[i];
    }
    return TruncatedSeries(n, std::move(v));
}

inline TruncatedSeries operator-(const TruncatedSeries& a)
{
    std::vector<Rational> v(a.coeffs());
    for (auto& c : v) {
        c = -c;
    }
    return TruncatedSeries(a.order(), std::move(v));
}

inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

inline TruncatedSeries operator*(const Rational& s, const TruncatedSeries& a)
{
    std::vector<Rational> v(a.coeffs());
    for (auto& c : v) {
        c *= s;
    }
    return TruncatedSeries(a.order(), std::move(v));
}

inline TruncatedSeries ts_mul(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const int n = std::min(a.order(), b.order());
    std::vector<Rational> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (int j = 0; i + j < n; ++j) {
            v[i + j] += a[i] * b[j];
        }
    }
    return TruncatedSeries(n, std::move(v));
}

inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return ts_mul(a, b); }

inline TruncatedSeries ts_div(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const int n = std::min(a.order(), b.order());
    if (n > 0 && b[0] == 0) {
        throw division_error("ts_div: divisor has zero constant term");
    }
    std::vector<Rational> q(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        Rational acc = a[k];
        for (int i = 1; i <= k; ++i) {
            acc -= b[i] * q[k - i];
        }
        q[k] = acc / b[0];
    }
    return TruncatedSeries(n, std::move(q));
}

inline TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) { return ts_div(a, b); }

inline TruncatedSeries ts_sqrt(const TruncatedSeries& a)
{
    const int n = a.order();
    if (n > 0 && a[0] != 1) {
        throw invalid_input("ts_sqrt: constant term must be 1");
    }
    std::vector<Rational> s(static_cast<std::size_t>(n));
    if (n > 0) {
        s[0] = 1;
    }
    for (int k = 1; k < n; ++k) {
        Rational acc = a[k];
        for (int i = 1; i < k; ++i) {
            acc -= s[i] * s[k - i];
        }
        s[k] = acc / 2;
    }
    return TruncatedSeries(n, std::move(s));
}

/// Integer polynomial, coefficients from low to high degree, trailing zeros trimmed.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Count> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    IntPolynomial(std::initializer_list<long> cs)
    {
        for (long c : cs) {
            coeffs_.emplace_back(c);
        }
        trim();
    }

    const std::vector<Count>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    Rational operator()(const Rational& x) const
    {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * x + Rational(*it);
        }
        return acc;
    }

    TruncatedSeries as_series(int order) const
    {
        return TruncatedSeries(order, std::vector<Rational>(coeffs_.begin(), coeffs_.end()));
    }

private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back() == 0) {
            coeffs_.pop_back();
        }
    }

    std::vector<Count> coeffs_;
};

// ---------------------------------------------------------------------------
// Named generating functions.

enum class NamedGf {
    motzkin,
    thm_132_321,
    thm_231_321,
    thm_231_1243,
    prop_231_312_321,
    conj_132_3241,
};

inline const std::vector<std::pair<std::string, NamedGf>>& named_gf_table()
{
    static const std::vector<std::pair<std::string, NamedGf>> table{
        {"motzkin", NamedGf::motzkin},
        {"thm_132_321", NamedGf::thm_132_321},
        {"thm_231_321", NamedGf::thm_231_321},
        {"thm_231_1243", NamedGf::thm_231_1243},
        {"prop_231_312_321", NamedGf::prop_231_312_321},
        {"conj_132_3241", NamedGf::conj_132_3241},
    };
    return table;
}

inline NamedGf parse_named_gf(std::string_view name)
{
    for (const auto& [key, value] : named_gf_table()) {
        if (key == name) {
            return value;
        }
    }
    throw invalid_input("unknown generating function: " + std::string(name));
}

namespace detail {

// (p - sqrt(r)) / (2 x^k), expanded to the given order.
inline TruncatedSeries radical_quotient(const IntPolynomial& p, const IntPolynomial& r, int k, int order)
{
    const int work = order + k;
    const TruncatedSeries num = p.as_series(work) - ts_sqrt(r.as_series(work));
    return Rational(1, 2) * num.shift_down(k);
}

} // namespace detail

/// The closed form expanded to order N; every coefficient must be a nonnegative integer.
inline TruncatedSeries named_gf(NamedGf name, int order)
{
    TruncatedSeries out;
    switch (name) {
    case NamedGf::motzkin:
        out = detail::radical_quotient({1, -1}, {1, -2, -3}, 2, order);
        break;
    case NamedGf::thm_132_321:
        out = IntPolynomial{1, -3, 3}.as_series(order) / IntPolynomial{1, -4, 6, -4, 1}.as_series(order);
        break;
    case NamedGf::thm_231_321:
        out = detail::radical_quotient({1, -2, 2}, {1, -4, 4, -4, 4}, 2, order);
        break;
    case NamedGf::thm_231_1243: {
        // 2x^2 / (3x - 1 + s) has a divisor vanishing at 0; multiplying through by
        // the conjugate gives x (3x - 1 - s) / (2 (3x - 1)).
        const TruncatedSeries s = ts_sqrt(IntPolynomial{1, -2, -3}.as_series(order));
        const TruncatedSeries lin = IntPolynomial{-1, 3}.as_series(order);
        const TruncatedSeries frac = Rational(1, 2) * ((lin - s) / lin);
        out = TruncatedSeries::constant(order, 1) + frac.shift_up(1);
        break;
    }
    case NamedGf::prop_231_312_321:
        out = detail::radical_quotient({1, -1, 1}, {1, -2, -1, -2, 1}, 2, order);
        break;
    case NamedGf::conj_132_3241:
        out = detail::radical_quotient({1, 0, 1}, {1, -4, 2, 0, 1}, 1, order);
        break;
    }
    for (const Count& c : out.integer_coeffs()) {
        if (c < 0) {
            throw internal_inconsistency("named_gf produced a negative coefficient");
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// The degree-5 relation for the 231 generating function.

/// Q(v, x) as coefficient polynomials in x for v^0 .. v^5.
inline const std::vector<IntPolynomial>& q_polynomial()
{
    static const std::vector<IntPolynomial> q{
        {-1, 6, 15, 8},
        {1, -11, 0, 28, 16},
        {0, 4, -19, -14},
        {0, 0, 6, -9, 8},
        {0, 0, 0, 4},
        {0, 0, 0, 0, 1},
    };
    return q;
}

/// Q(v, x) evaluated at the series v, by Horner's rule in v.
inline TruncatedSeries q_evaluate(const TruncatedSeries& v)
{
    const int order = v.order();
    const auto& q = q_polynomial();
    TruncatedSeries acc = q.back().as_series(order);
    for (auto it = q.rbegin() + 1; it != q.rend(); ++it) {
        acc = ts_mul(acc, v) + it->as_series(order);
    }
    return acc;
}

/// Q(v, x) at v = sum_n count_av231(n) x^n, to order N.
inline TruncatedSeries q_residual(int order)
{
    if (order < 1) {
        throw invalid_input("q_residual needs order >= 1");
    }
    return q_evaluate(TruncatedSeries::from_counts(order, av231_sequence(order - 1)));
}

// ---------------------------------------------------------------------------
// Roots and asymptotics.

struct RootBracket {
    Rational lo;
    Rational hi;
    Rational mid() const { return (lo + hi) / 2; }
};

inline double to_double(const Rational& r) { return static_cast<double>(r); }

/// Exact bisection until hi - lo <= tol.
inline RootBracket real_root(const IntPolynomial& p, Rational lo, Rational hi, const Rational& tol)
{
    if (lo > hi) {
        std::swap(lo, hi);
    }
    Rational flo = p(lo);
    const Rational fhi = p(hi);
    if (flo == 0) {
        return {lo, lo};
    }
    if (fhi == 0) {
        return {hi, hi};
    }
    if ((flo < 0) == (fhi < 0)) {
        throw invalid_input("real_root: no sign change on the interval");
    }
    while (hi - lo > tol) {
        const Rational mid = (lo + hi) / 2;
        const Rational fm = p(mid);
        if (fm == 0) {
            return {mid, mid};
        }
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return {lo, hi};
}

inline const IntPolynomial& rho_polynomial()
{
    static const IntPolynomial p{-2048, -2112, -645, 256};
    return p;
}

inline const IntPolynomial& beta_polynomial()
{
    static const IntPolynomial p{-256, 0, 5472, 0, -34749, 0, 41472};
    return p;
}

struct AsymptoticReport {
    int n_max = 0;
    double rho = 0;
    double deviation_at_max = 0;  // |a_{n+1}/a_n / rho - 1| at n = n_max
    double deviation_at_half = 0; // the same at n = n_max / 2
    double tolerance = 0.04;
    bool below_tolerance = false;
    bool decreasing = false;
    bool ok() const { return below_tolerance && decreasing; }
};

/// Ratio test for a_n = count_av231(n) against the growth constant rho.
inline AsymptoticReport asymptotic_ratio_check(int n_max, double tolerance = 0.04)
{
    if (n_max < 2) {
        throw invalid_input("asymptotic_ratio_check needs n_max >= 2");
    }
    const std::vector<Count> a = av231_sequence(n_max + 1);
    const Rational rho = real_root(rho_polynomial(), 4, 5, Rational(1, Count(1) << 80)).mid();
    auto deviation = [&](int n) {
        const Rational r = Rational(a[n + 1], a[n]) / rho - 1;
        return std::fabs(to_double(r));
    };
    AsymptoticReport rep;
    rep.n_max = n_max;
    rep.rho = to_double(rho);
    rep.tolerance = tolerance;
    rep.deviation_at_max = deviation(n_max);
    rep.deviation_at_half = deviation(n_max / 2);
    rep.below_tolerance = rep.deviation_at_max < tolerance;
    rep.decreasing = rep.deviation_at_max < rep.deviation_at_half;
    return rep;
}

} // namespace hookenum
