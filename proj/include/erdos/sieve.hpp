// sieve.hpp
// Prime tables with precomputed natural logarithms.
//
// The table is built by a segmented sieve of Eratosthenes that stores odd
// numbers only: bit i of a segment stands for low + 2*i.  The working set is
// one segment plus the base primes up to sqrt(limit), so memory for the sieve
// itself is O(segment) rather than O(limit).  The output table is of course
// O(pi(limit)).
//
// Bounds are inclusive everywhere: a table for `limit` holds every prime
// p <= limit.

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace erdos {

inline constexpr std::uint64_t kSieveCeiling = 10'000'000'000ULL;
inline constexpr std::size_t kDefaultSegmentBytes = std::size_t{1} << 18;

class PrimeTable {
public:
    PrimeTable() = default;

    // Takes ownership of an already-sorted prime list; logs are computed here.
    PrimeTable(std::uint64_t limit, std::vector<std::uint64_t> primes);

    std::uint64_t limit() const noexcept { return limit_; }
    std::size_t size() const noexcept { return primes_.size(); }
    bool empty() const noexcept { return primes_.empty(); }

    std::span<const std::uint64_t> primes() const noexcept { return primes_; }
    std::span<const double> logs() const noexcept { return logs_; }

    std::uint64_t prime(std::size_t i) const { return primes_.at(i); }
    double log(std::size_t i) const { return logs_.at(i); }

    // Number of stored primes <= x, without the range check of prime_count().
    std::size_t count_upto(std::uint64_t x) const noexcept;

    friend bool operator==(const PrimeTable&, const PrimeTable&) = default;

private:
    std::uint64_t limit_ = 0;
    std::vector<std::uint64_t> primes_;
    std::vector<double> logs_;
};

// All primes <= limit.  `segment_bytes` is the size of one sieve window (one
// byte per odd number); it only affects speed and memory, never the result.
PrimeTable sieve_primes(std::uint64_t limit, std::size_t segment_bytes = kDefaultSegmentBytes);

// pi(x) for 0 <= x <= table.limit(); OutOfRangeError above the table.
std::uint64_t prime_count(const PrimeTable& table, std::uint64_t x);

// Deterministic Miller-Rabin, exact for all 64-bit n.
bool is_prime(std::uint64_t n) noexcept;

// PTAB1 cache: "PTAB1", limit as u64 little-endian, then the primes as
// LEB128 varints of successive differences (the first one relative to 0).
// Logs are not stored; they are recomputed on load.
void save_table(const PrimeTable& table, const std::filesystem::path& path);

// Throws FormatError on a bad header, truncated varint, non-increasing
// sequence, a prime beyond the stored limit, or when any of the first or last
// 100 entries fails the primality test.
PrimeTable load_table(const std::filesystem::path& path);

}  // namespace erdos
