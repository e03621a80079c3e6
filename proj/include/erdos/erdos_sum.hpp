// erdos_sum.hpp
// Certified partial Erdos sums F(S) = sum over a in S of 1/(a ln a).
//
// Sums are evaluated as compensated per-chunk partial sums over fixed index
// ranges, and the chunk results are combined by a pairwise tree in chunk
// order.  Chunk boundaries depend only on the chunk size, so the value is
// bit-identical for every worker count.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "erdos/primitive.hpp"
#include "erdos/sieve.hpp"

namespace erdos {

struct SumResult {
    double value = 0.0;
    double error_bound = 0.0;  // rigorous radius around value
    std::uint64_t term_count = 0;

    double lower() const noexcept { return value - error_bound; }
    double upper() const noexcept { return value + error_bound; }

    friend bool operator==(const SumResult&, const SumResult&) = default;
};

// Which prime pairs {p, q} with p, q <= bound are summed over.
enum class PairMode {
    unordered_with_squares,  // the set {pq : p <= q}, prime squares included
    unordered_distinct,      // the set {pq : p < q}
    ordered,                 // every ordered pair (p, q): non-squares counted twice; not a set
};

const char* to_string(PairMode mode) noexcept;

inline constexpr std::uint64_t kDefaultChunkSize = std::uint64_t{1} << 20;

// Largest bound whose squares are exactly representable as doubles.
inline constexpr std::uint64_t kMaxPairBound = 94'906'265;

struct SumOptions {
    unsigned threads = 0;  // 0 = default_thread_count()
    std::uint64_t chunk_size = kDefaultChunkSize;
    PairMode pairs = PairMode::unordered_with_squares;
};

// Hardware concurrency, overridden by ERDOS_THREADS when set to a positive integer.
unsigned default_thread_count();

// 1 / (a ln a); DomainError for a < 2.
double term(std::uint64_t a);

SumResult sum_primes(const PrimeTable& table, std::uint64_t bound, const SumOptions& options = {});

// Sum over the products of prime pairs p, q <= bound selected by options.pairs.
// ln(pq) is taken as ln p + ln q from the table.
SumResult sum_semiprimes(const PrimeTable& table, std::uint64_t bound,
                         const SumOptions& options = {});

SumResult sum_sequence(const PrimitiveSequence& sequence);

// Sum of term(p_row * p_j) for j in [row, k): one row of the pair triangle,
// evaluated serially.  Used for the row-wise additivity cross-check.
double semiprime_row_sum(const PrimeTable& table, std::size_t row, std::size_t k);

// Term count of the pair sum for k primes under a given mode.
std::uint64_t pair_term_count(std::uint64_t k, PairMode mode) noexcept;

}  // namespace erdos
