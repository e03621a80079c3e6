#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "erdos/erdos_sum.hpp"

namespace erdos::cli {

enum class Command { sieve, sum_primes, sum_semiprimes, verify, crossover, check_primitive, sum_file };
enum class OutputFormat { text, json, csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitNotCertified = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
    Command command = Command::verify;
    std::uint64_t limit = 0;  // limit, threshold or scan limit depending on command
    std::uint64_t stride = 1000;
    std::optional<std::string> input_path;
    std::optional<std::string> cache_in;
    std::optional<std::string> cache_out;
    OutputFormat output_format = OutputFormat::text;
    unsigned threads = 0;
    std::uint64_t chunk_size = kDefaultChunkSize;
    bool include_prime_squares = true;
    bool ordered_pairs = false;

    PairMode pair_mode() const noexcept;
};

// Executes a parsed configuration; returns the process exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv and runs it.  Usage errors print to `err` and return kExitUsage.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace erdos::cli
