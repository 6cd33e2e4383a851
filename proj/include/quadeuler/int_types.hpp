#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace quadeuler {

/// Exact integer used for every coefficient in the library. Intermediate
/// plethysm coefficients can exceed machine words, so nothing here is
/// allowed to silently wrap. Expression templates are off so Int behaves
/// like an ordinary value type in containers.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;

/// Binomial coefficient C(n, k), exact; 0 when k < 0 or k > n.
inline Int binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int result = 1;
    for (long long i = 0; i < k; ++i) {
        result *= n - i;
        result /= i + 1;  // exact at every step: product of i+1 consecutive ints
    }
    return result;
}

/// Decimal rendering used by every JSON sink (word-size independent).
inline std::string to_decimal(const Int& v) { return v.str(); }

}  // namespace quadeuler
