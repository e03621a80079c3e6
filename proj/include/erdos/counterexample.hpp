// counterexample.hpp
// Finite comparison of the Erdos sums of A1(T) = {pq : p, q prime <= T} and
// of the primes <= T, certified against the combined rounding budget.
//
// If F(A1(T)) > F(primes <= T) then adding F(primes > T), the same
// convergent tail, to both sides gives F(A1(T) u A2(T)) > F(all primes) for
// the primitive set A1(T) u A2(T).  No tail is evaluated numerically.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "erdos/erdos_sum.hpp"

namespace erdos {

inline constexpr std::uint64_t kPaperThreshold = 1'400'000;
inline constexpr double kErdosBound = 1.84;
inline constexpr double kClarkBound = 1.7811;

struct VerifyOptions {
    unsigned threads = 0;
    std::uint64_t chunk_size = kDefaultChunkSize;
    // unordered_with_squares is A1 as a set.  unordered_distinct drops the
    // prime squares.  ordered counts pq and qp separately: a diagnostic that
    // does not correspond to the Erdos sum of any set.
    PairMode pairs = PairMode::unordered_with_squares;
};

struct CounterexampleReport {
    std::uint64_t threshold = 0;
    SumResult semiprime_sum;
    SumResult prime_sum;
    double margin = 0.0;
    bool certified = false;
    bool includes_prime_squares = true;
    PairMode pair_mode = PairMode::unordered_with_squares;
    double erdos_bound = kErdosBound;
    double clark_bound = kClarkBound;

    double combined_error() const noexcept {
        return semiprime_sum.error_bound + prime_sum.error_bound;
    }
};

// certified iff margin > semiprime error + prime error.
bool certifies(double margin, double semiprime_error, double prime_error) noexcept;

CounterexampleReport verify(std::uint64_t threshold, const VerifyOptions& options = {});

// Same comparison over an already-sieved table (threshold <= table.limit()).
CounterexampleReport verify(const PrimeTable& table, std::uint64_t threshold,
                            const VerifyOptions& options = {});

struct CrossoverSample {
    std::uint64_t prime = 0;
    double margin = 0.0;
    bool certified = false;
};

struct CrossoverResult {
    std::optional<std::uint64_t> first_exceeding_prime;
    std::vector<CrossoverSample> history;
    bool stable_above = false;  // margin certified at every prime from the crossover to the scan end
    std::uint64_t scan_limit = 0;
    std::uint64_t last_prime = 0;
    double final_margin = 0.0;
    PairMode pair_mode = PairMode::unordered_with_squares;

    bool found() const noexcept { return first_exceeding_prime.has_value(); }
};

// Incremental scan: admitting the k-th prime adds term(p_k) to the prime sum
// and sum_{j <= k} term(p_j p_k) to the semiprime sum.  `stride` selects
// every stride-th prime for the history (the last prime is always sampled).
CrossoverResult crossover(std::uint64_t scan_limit, std::uint64_t stride,
                          const VerifyOptions& options = {});

// 1 / ln x, the integral of dt / (t ln^2 t) from x to infinity: a
// prime-number-theorem heuristic for the prime tail, not a bound.
double tail_estimate(std::uint64_t x);

struct Timings {
    double sieve_seconds = 0.0;
    double sum_seconds = 0.0;
    double total_seconds = 0.0;
};

// JSON report: the report fields (each sum as a {value, error_bound,
// term_count} object), tool_version and elapsed_seconds.  elapsed_seconds is
// the only member that varies between identical runs.
std::string report_to_json(const CounterexampleReport& report, const Timings& timings);
std::string report_to_text(const CounterexampleReport& report);

void write_history_csv(const CrossoverResult& result, std::ostream& out);

// Shortest decimal text that reads back to the same double.
std::string format_double(double x);

extern const char* const kToolVersion;

}  // namespace erdos
