#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hookenum {

/// Arbitrary-precision nonnegative count. Never truncated to 64 bits.
using Count = boost::multiprecision::cpp_int;

/// Exact rational used by the power-series and root-isolation code.
using Rational = boost::multiprecision::cpp_rational;

/// Bad argument supplied by the caller (malformed word, precondition violated).
class invalid_input : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Margins handed to the matrix reconstruction admit no solution.
class infeasible : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A result that should be impossible if the mathematics holds.
class internal_inconsistency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Division by a series whose constant term vanishes.
class division_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline std::string to_decimal(const Count& c) { return c.str(); }

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
inline Count binomial(long n, long k)
{
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    Count result = 1;
    for (long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

/// Row n of Pascal's triangle, for callers that need many binomials with the same top.
inline std::vector<Count> binomial_row(long n)
{
    std::vector<Count> row(static_cast<std::size_t>(n + 1));
    row[0] = 1;
    for (long k = 1; k <= n; ++k) {
        row[k] = row[k - 1] * (n - k + 1) / k;
    }
    return row;
}

/// Motzkin numbers M_0..M_n by the three-term recurrence (n+2)M_n = (2n+1)M_{n-1} + 3(n-1)M_{n-2}.
inline std::vector<Count> motzkin_numbers(int n)
{
    std::vector<Count> m(static_cast<std::size_t>(std::max(n, 1) + 1));
    m[0] = 1;
    m[1] = 1;
    for (int k = 2; k <= n; ++k) {
        m[k] = ((2 * k + 1) * m[k - 1] + 3 * (k - 1) * m[k - 2]) / (k + 2);
    }
    m.resize(static_cast<std::size_t>(n + 1));
    return m;
}

} // namespace hookenum
