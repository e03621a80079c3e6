// compensated.hpp
// Kahan-Babuska (Neumaier) accumulation and the rounding constants used to
// bound its error.
//
// For n nonnegative summands x_i the accumulated sum s satisfies
//   |s - sum x_i| <= (3u + 4 n u^2) * sum x_i,     u = 2^-53,
// where s = fl(sum + compensation): 2u from the compensated loop, u from the
// final rounding.  The 4 n u^2 term is a loose cover for the second-order
// part of the standard bound.

#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

namespace erdos {

inline constexpr double kUnitRoundoff = std::numeric_limits<double>::epsilon() / 2;

// Relative error of one computed term 1/(a * ln a): two ulps of the result
// plus two machine epsilons for the logarithm, written as 8u.
inline constexpr double kTermRelativeError = 8 * kUnitRoundoff;

class NeumaierAccumulator {
public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x)) {
            compensation_ += (sum_ - t) + x;
        } else {
            compensation_ += (x - t) + sum_;
        }
        sum_ = t;
        ++count_;
    }

    NeumaierAccumulator& operator+=(double x) noexcept {
        add(x);
        return *this;
    }

    double value() const noexcept { return sum_ + compensation_; }
    std::uint64_t count() const noexcept { return count_; }

    // Accumulation error bound for nonnegative summands with total `magnitude`.
    static double error_bound(std::uint64_t n, double magnitude) noexcept {
        const double nd = static_cast<double>(n);
        return (3 * kUnitRoundoff + 4 * nd * kUnitRoundoff * kUnitRoundoff) * magnitude;
    }

    double error_bound() const noexcept { return error_bound(count_, std::fabs(value())); }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
    std::uint64_t count_ = 0;
};

// gamma_m = m u / (1 - m u), the bound for m successive roundings.
inline double gamma_bound(std::uint64_t m) noexcept {
    const double mu = static_cast<double>(m) * kUnitRoundoff;
    return mu / (1 - mu);
}

// Inflate a bound computed in round-to-nearest so it covers its own rounding.
inline double round_up_bound(double bound) noexcept {
    return bound * (1 + 0x1p-20);
}

}  // namespace erdos
