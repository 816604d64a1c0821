#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "abelkit/errors.hpp"

namespace abelkit {

/// Exact arbitrary-precision integer. Nothing in the library uses floating point.
using Int = boost::multiprecision::cpp_int;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }
inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }

/// Representative of a mod m in [0, m). Requires m > 0.
inline Int pos_mod(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

inline std::int64_t to_int64(const Int& a, const char* what = "value") {
    if (a < std::numeric_limits<std::int64_t>::min() || a > std::numeric_limits<std::int64_t>::max())
        throw BudgetExceededError(std::string(what) + " does not fit in 64 bits");
    return static_cast<std::int64_t>(a);
}

/// Trial-division primality, adequate for desk-scale inputs.
inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (Int d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

inline bool is_squarefree(const Int& n) {
    if (n <= 0) return false;
    Int m = n;
    for (Int d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            m /= d;
            if (m % d == 0) return false;
        }
    }
    return true;
}

/// Ascending prime factorization as (prime, exponent) pairs.
inline std::vector<std::pair<Int, int>> factorize(Int n) {
    std::vector<std::pair<Int, int>> out;
    for (Int d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) { n /= d; ++e; }
            out.emplace_back(d, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

}  // namespace abelkit
