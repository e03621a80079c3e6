// oracle.hpp
// Reference values for the tests, computed without the library: primes by
// trial division, sums in 50-digit MPFR arithmetic with ln(pq) taken directly
// on the product.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

namespace oracle {

using High = boost::multiprecision::mpfr_float_50;

inline bool is_prime_trial(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

inline std::vector<std::uint64_t> primes_trial(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 2; n <= limit; ++n) {
        bool prime = true;
        for (auto p : out) {
            if (p * p > n) break;
            if (n % p == 0) {
                prime = false;
                break;
            }
        }
        if (prime) out.push_back(n);
    }
    return out;
}

inline High term(std::uint64_t a) {
    const High x(a);
    return 1 / (x * log(x));
}

struct ThresholdSums {
    High primes;
    High semiprimes_with_squares;
    High semiprimes_distinct;
};

// Sums at each requested threshold, in a single pass over pairs ordered by
// their larger prime.
inline std::map<std::uint64_t, ThresholdSums> threshold_sums(std::vector<std::uint64_t> thresholds) {
    std::sort(thresholds.begin(), thresholds.end());
    std::map<std::uint64_t, ThresholdSums> out;
    if (thresholds.empty()) return out;
    const auto primes = primes_trial(thresholds.back());

    High prime_sum = 0, distinct = 0, squares = 0;
    std::size_t next = 0;
    auto record_upto = [&](std::uint64_t below) {
        while (next < thresholds.size() && thresholds[next] < below) {
            out[thresholds[next]] = {prime_sum, distinct + squares, distinct};
            ++next;
        }
    };
    for (std::size_t c = 0; c < primes.size(); ++c) {
        record_upto(primes[c]);
        const auto q = primes[c];
        prime_sum += term(q);
        for (std::size_t j = 0; j < c; ++j) distinct += term(primes[j] * q);
        squares += term(q * q);
    }
    record_upto(UINT64_MAX);
    return out;
}

inline High sum_of(const std::vector<std::uint64_t>& values) {
    High s = 0;
    for (auto v : values) s += term(v);
    return s;
}

// |value - exact| <= bound, evaluated in high precision.
inline bool within(double value, const High& exact, double bound) {
    return abs(High(value) - exact) <= High(bound);
}

inline bool naive_is_primitive(const std::vector<std::uint64_t>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        for (std::size_t j = 0; j < values.size(); ++j) {
            if (values[i] != values[j] && values[j] % values[i] == 0) return false;
        }
    }
    return true;
}

}  // namespace oracle
