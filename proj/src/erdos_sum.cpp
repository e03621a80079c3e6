#include "erdos/erdos_sum.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>

#include "erdos/compensated.hpp"
#include "erdos/errors.hpp"
#include "parallel.hpp"

namespace erdos {

namespace {

struct ChunkSum {
    double value = 0.0;
    double accumulation_error = 0.0;
    std::uint64_t terms = 0;
};

double pairwise(std::span<const double> values) {
    if (values.empty()) return 0.0;
    if (values.size() == 1) return values[0];
    const auto half = values.size() / 2;
    return pairwise(values.first(half)) + pairwise(values.subspan(half));
}

// Fixed-order combination of chunk sums into a certified result.
SumResult reduce_chunks(const std::vector<ChunkSum>& chunks) {
    std::vector<double> values;
    values.reserve(chunks.size());
    double accumulation = 0.0;
    std::uint64_t terms = 0;
    for (const auto& c : chunks) {
        values.push_back(c.value);
        accumulation += c.accumulation_error;
        terms += c.terms;
    }
    SumResult result;
    result.value = pairwise(values);
    result.term_count = terms;
    if (terms == 0) return result;

    const auto depth = static_cast<std::uint64_t>(std::bit_width(values.size() - 1));
    const double tree = gamma_bound(depth) * result.value;
    const double per_term = kTermRelativeError * result.value;
    result.error_bound = round_up_bound(per_term + accumulation + tree);
    return result;
}

unsigned resolve_threads(unsigned requested) {
    return requested == 0 ? default_thread_count() : requested;
}

void check_bound(const PrimeTable& table, std::uint64_t bound, const char* op) {
    if (bound < 2) throw DomainError(std::string(op) + ": bound must be >= 2");
    if (bound > table.limit()) {
        throw OutOfRangeError(std::string(op) + ": bound " + std::to_string(bound) +
                              " exceeds table limit " + std::to_string(table.limit()));
    }
}

// Number of pair indices in rows [0, row) of the k-row upper triangle.
std::uint64_t row_offset(std::uint64_t row, std::uint64_t k) {
    return row * k - row * (row - 1) / 2;
}

std::uint64_t row_of(std::uint64_t pair_index, std::uint64_t k) {
    std::uint64_t lo = 0;
    std::uint64_t hi = k;  // row_offset(hi) > pair_index
    while (hi - lo > 1) {
        const auto mid = lo + (hi - lo) / 2;
        if (row_offset(mid, k) <= pair_index) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

}  // namespace

const char* to_string(PairMode mode) noexcept {
    switch (mode) {
        case PairMode::unordered_with_squares: return "unordered_with_squares";
        case PairMode::unordered_distinct: return "unordered_distinct";
        case PairMode::ordered: return "ordered";
    }
    return "unknown";
}

unsigned default_thread_count() {
    if (const char* env = std::getenv("ERDOS_THREADS")) {
        char* end = nullptr;
        const long n = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && n > 0) return static_cast<unsigned>(n);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

double term(std::uint64_t a) {
    if (a < 2) throw DomainError("term: a must be >= 2, got " + std::to_string(a));
    const double x = static_cast<double>(a);
    return 1.0 / (x * std::log(x));
}

std::uint64_t pair_term_count(std::uint64_t k, PairMode mode) noexcept {
    switch (mode) {
        case PairMode::unordered_with_squares: return k * (k + 1) / 2;
        case PairMode::unordered_distinct: return k * (k - (k > 0 ? 1 : 0)) / 2;
        case PairMode::ordered: return k * k;
    }
    return 0;
}

SumResult sum_primes(const PrimeTable& table, std::uint64_t bound, const SumOptions& options) {
    check_bound(table, bound, "sum_primes");
    if (options.chunk_size == 0) throw PreconditionError("chunk size must be positive");
    const std::uint64_t k = table.count_upto(bound);
    const auto primes = table.primes();
    const auto logs = table.logs();
    const std::size_t chunks = (k + options.chunk_size - 1) / options.chunk_size;

    auto chunk_sums = detail::run_indexed<ChunkSum>(
        chunks, resolve_threads(options.threads), [&](std::size_t c) {
            const std::uint64_t begin = c * options.chunk_size;
            const std::uint64_t end = std::min(k, begin + options.chunk_size);
            NeumaierAccumulator acc;
            for (std::uint64_t i = begin; i < end; ++i) {
                acc += 1.0 / (static_cast<double>(primes[i]) * logs[i]);
            }
            return ChunkSum{acc.value(), acc.error_bound(), acc.count()};
        });
    return reduce_chunks(chunk_sums);
}

SumResult sum_semiprimes(const PrimeTable& table, std::uint64_t bound, const SumOptions& options) {
    check_bound(table, bound, "sum_semiprimes");
    if (bound > kMaxPairBound) {
        throw CapacityError("sum_semiprimes: bound " + std::to_string(bound) +
                            " exceeds pair-product ceiling " + std::to_string(kMaxPairBound));
    }
    if (options.chunk_size == 0) throw PreconditionError("chunk size must be positive");

    const std::uint64_t k = table.count_upto(bound);
    const std::uint64_t total = k * (k + 1) / 2;
    const std::size_t chunks = (total + options.chunk_size - 1) / options.chunk_size;
    const auto primes = table.primes();
    const auto logs = table.logs();
    const PairMode mode = options.pairs;

    auto chunk_sums = detail::run_indexed<ChunkSum>(
        chunks, resolve_threads(options.threads), [&](std::size_t c) {
            const std::uint64_t begin = c * options.chunk_size;
            const std::uint64_t end = std::min(total, begin + options.chunk_size);
            NeumaierAccumulator acc;
            std::uint64_t row = row_of(begin, k);
            std::uint64_t index = begin;
            while (index < end) {
                const std::uint64_t row_start = row_offset(row, k);
                std::uint64_t j = row + (index - row_start);
                const std::uint64_t j_end = std::min(k, row + (end - row_start));
                const std::uint64_t p = primes[row];
                const double log_p = logs[row];
                if (j == row) {
                    if (mode != PairMode::unordered_distinct) {
                        acc += 1.0 / (static_cast<double>(p * p) * (log_p + log_p));
                    }
                    ++j;
                }
                if (mode == PairMode::ordered) {
                    for (; j < j_end; ++j) {
                        acc += 2.0 / (static_cast<double>(p * primes[j]) * (log_p + logs[j]));
                    }
                } else {
                    for (; j < j_end; ++j) {
                        acc += 1.0 / (static_cast<double>(p * primes[j]) * (log_p + logs[j]));
                    }
                }
                index = row_start + (j_end - row);
                ++row;
            }
            return ChunkSum{acc.value(), acc.error_bound(), acc.count()};
        });
    // Chunks count additions; in ordered mode one addition stands for two pairs.
    SumResult result = reduce_chunks(chunk_sums);
    result.term_count = pair_term_count(k, mode);
    return result;
}

SumResult sum_sequence(const PrimitiveSequence& sequence) {
    NeumaierAccumulator acc;
    for (auto a : sequence.elements()) acc += term(a);
    SumResult result;
    result.value = acc.value();
    result.term_count = acc.count();
    if (result.term_count > 0) {
        result.error_bound =
            round_up_bound(kTermRelativeError * result.value + acc.error_bound());
    }
    return result;
}

double semiprime_row_sum(const PrimeTable& table, std::size_t row, std::size_t k) {
    NeumaierAccumulator acc;
    const std::uint64_t p = table.prime(row);
    const double log_p = table.log(row);
    for (std::size_t j = row; j < k; ++j) {
        acc += 1.0 / (static_cast<double>(p * table.prime(j)) * (log_p + table.log(j)));
    }
    return acc.value();
}

}  // namespace erdos
