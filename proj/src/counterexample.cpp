#include "erdos/counterexample.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "erdos/compensated.hpp"
#include "erdos/errors.hpp"
#include "parallel.hpp"

namespace erdos {

const char* const kToolVersion = "1.0.0";

namespace {

struct ColumnSum {
    double value = 0.0;
    double accumulation_error = 0.0;
};

// sum over j <= column of term(p_j * p_column), honouring the pair mode.
ColumnSum column_sum(const PrimeTable& table, std::size_t column, std::uint64_t chunk_size,
                     PairMode mode) {
    const auto primes = table.primes();
    const auto logs = table.logs();
    const std::uint64_t p = primes[column];
    const double log_p = logs[column];
    const std::uint64_t length = column + 1;
    const double weight = mode == PairMode::ordered ? 2.0 : 1.0;

    std::vector<double> chunk_values;
    double accumulation = 0.0;
    for (std::uint64_t begin = 0; begin < length; begin += chunk_size) {
        const std::uint64_t end = std::min(length, begin + chunk_size);
        const std::uint64_t off_diagonal_end = std::min<std::uint64_t>(end, column);
        NeumaierAccumulator acc;
        for (std::uint64_t j = begin; j < off_diagonal_end; ++j) {
            acc += weight / (static_cast<double>(p * primes[j]) * (log_p + logs[j]));
        }
        if (end == length && mode != PairMode::unordered_distinct) {
            acc += 1.0 / (static_cast<double>(p * p) * (log_p + log_p));
        }
        chunk_values.push_back(acc.value());
        accumulation += acc.error_bound();
    }
    ColumnSum out;
    for (auto v : chunk_values) out.value += v;
    const auto depth = static_cast<std::uint64_t>(chunk_values.size() - 1);
    out.accumulation_error = accumulation + gamma_bound(depth) * out.value;
    return out;
}

// Error bound of a running compensated sum of `additions` nonnegative values
// whose own errors total `inner_error`.
double running_bound(double value, std::uint64_t additions, double inner_error) {
    return round_up_bound(kTermRelativeError * value + inner_error +
                          NeumaierAccumulator::error_bound(additions, value));
}

std::string sum_line(const char* name, const SumResult& s) {
    return std::string(name) + ": value=" + format_double(s.value) +
           " error_bound=" + format_double(s.error_bound) +
           " term_count=" + std::to_string(s.term_count);
}

}  // namespace

bool certifies(double margin, double semiprime_error, double prime_error) noexcept {
    return margin > semiprime_error + prime_error;
}

CounterexampleReport verify(const PrimeTable& table, std::uint64_t threshold,
                            const VerifyOptions& options) {
    if (threshold < 2) throw DomainError("verify: threshold must be >= 2");
    SumOptions sum_options{options.threads, options.chunk_size, options.pairs};

    CounterexampleReport report;
    report.threshold = threshold;
    report.pair_mode = options.pairs;
    report.includes_prime_squares = options.pairs != PairMode::unordered_distinct;
    report.semiprime_sum = sum_semiprimes(table, threshold, sum_options);
    report.prime_sum = sum_primes(table, threshold, sum_options);
    report.margin = report.semiprime_sum.value - report.prime_sum.value;
    report.certified =
        certifies(report.margin, report.semiprime_sum.error_bound, report.prime_sum.error_bound);
    return report;
}

CounterexampleReport verify(std::uint64_t threshold, const VerifyOptions& options) {
    if (threshold < 2) throw DomainError("verify: threshold must be >= 2");
    return verify(sieve_primes(threshold), threshold, options);
}

CrossoverResult crossover(std::uint64_t scan_limit, std::uint64_t stride,
                          const VerifyOptions& options) {
    if (scan_limit < 2) throw PreconditionError("crossover: scan_limit must be >= 2");
    if (stride < 1) throw PreconditionError("crossover: stride must be >= 1");
    if (scan_limit > kMaxPairBound) {
        throw CapacityError("crossover: scan_limit exceeds pair-product ceiling " +
                            std::to_string(kMaxPairBound));
    }
    if (options.chunk_size == 0) throw PreconditionError("chunk size must be positive");

    const auto table = sieve_primes(scan_limit);
    const auto primes = table.primes();
    const auto logs = table.logs();
    const std::size_t k = table.size();
    const unsigned threads = options.threads == 0 ? default_thread_count() : options.threads;

    CrossoverResult result;
    result.scan_limit = scan_limit;
    result.pair_mode = options.pairs;

    NeumaierAccumulator prime_acc;
    NeumaierAccumulator semi_acc;
    double column_errors = 0.0;

    // Columns are independent sums; a batch is evaluated in parallel and then
    // admitted in prime order, so the running totals do not depend on threads.
    const std::size_t batch = std::max<std::size_t>(64, 16 * static_cast<std::size_t>(threads));
    for (std::size_t first = 0; first < k; first += batch) {
        const std::size_t count = std::min(batch, k - first);
        const auto columns = detail::run_indexed<ColumnSum>(count, threads, [&](std::size_t i) {
            return column_sum(table, first + i, options.chunk_size, options.pairs);
        });
        for (std::size_t i = 0; i < count; ++i) {
            const std::size_t c = first + i;
            prime_acc += 1.0 / (static_cast<double>(primes[c]) * logs[c]);
            semi_acc += columns[i].value;
            column_errors += columns[i].accumulation_error;

            const double prime_value = prime_acc.value();
            const double semi_value = semi_acc.value();
            const double prime_error = running_bound(prime_value, prime_acc.count(), 0.0);
            const double semi_error = running_bound(semi_value, semi_acc.count(), column_errors);
            const double margin = semi_value - prime_value;
            const bool ok = certifies(margin, semi_error, prime_error);

            if (ok && !result.found()) {
                result.first_exceeding_prime = primes[c];
                result.stable_above = true;
            } else if (!ok && result.found()) {
                result.stable_above = false;
            }
            if ((c + 1) % stride == 0 || c + 1 == k) {
                result.history.push_back({primes[c], margin, ok});
            }
            result.final_margin = margin;
            result.last_prime = primes[c];
        }
    }
    return result;
}

double tail_estimate(std::uint64_t x) {
    if (x < 3) throw DomainError("tail_estimate: x must be >= 3");
    return 1.0 / std::log(static_cast<double>(x));
}

std::string format_double(double x) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, ptr);
}

std::string report_to_json(const CounterexampleReport& report, const Timings& timings) {
    auto sum = [](const SumResult& s) {
        nlohmann::ordered_json j;
        j["value"] = s.value;
        j["error_bound"] = s.error_bound;
        j["term_count"] = s.term_count;
        return j;
    };
    nlohmann::ordered_json j;
    j["tool_version"] = kToolVersion;
    j["threshold"] = report.threshold;
    j["semiprime_sum"] = sum(report.semiprime_sum);
    j["prime_sum"] = sum(report.prime_sum);
    j["margin"] = report.margin;
    j["certified"] = report.certified;
    j["includes_prime_squares"] = report.includes_prime_squares;
    j["pair_mode"] = to_string(report.pair_mode);
    j["erdos_bound"] = report.erdos_bound;
    j["clark_bound"] = report.clark_bound;
    j["elapsed_seconds"] = {{"sieve", timings.sieve_seconds},
                            {"sums", timings.sum_seconds},
                            {"total", timings.total_seconds}};
    return j.dump(2) + "\n";
}

std::string report_to_text(const CounterexampleReport& report) {
    std::ostringstream out;
    out << "threshold: " << report.threshold << "\n"
        << sum_line("semiprime_sum", report.semiprime_sum) << "\n"
        << sum_line("prime_sum", report.prime_sum) << "\n"
        << "margin: " << format_double(report.margin) << "\n"
        << "combined_error_bound: " << format_double(report.combined_error()) << "\n"
        << "certified: " << (report.certified ? "true" : "false") << "\n"
        << "includes_prime_squares: " << (report.includes_prime_squares ? "true" : "false") << "\n"
        << "pair_mode: " << to_string(report.pair_mode) << "\n"
        << "erdos_bound: " << format_double(report.erdos_bound) << "\n"
        << "clark_bound: " << format_double(report.clark_bound) << "\n";
    if (report.pair_mode == PairMode::ordered) {
        out << "note: ordered pair mode counts pq and qp separately; the semiprime value is not "
               "the Erdos sum of a set and certifies nothing about primitive sequences.\n";
    } else if (report.certified) {
        out << "conclusion: F(A1) exceeds F(primes <= " << report.threshold
            << ") beyond the combined error bound. Adding the common tail F(primes > "
            << report.threshold << ") to both sides keeps the strict inequality, so the primitive "
            << "set A1 u {primes > " << report.threshold
            << "} has a larger Erdos sum than the primes.\n";
    } else {
        out << "conclusion: not certified; F(A1) does not exceed F(primes <= " << report.threshold
            << ") beyond the combined error bound.\n";
    }
    if (report.threshold >= 3) {
        out << "heuristic (non-rigorous) prime tail 1/ln(threshold): "
            << format_double(tail_estimate(report.threshold)) << "\n";
    }
    return out.str();
}

void write_history_csv(const CrossoverResult& result, std::ostream& out) {
    out << "prime,margin,certified\n";
    for (const auto& s : result.history) {
        out << s.prime << ',' << format_double(s.margin) << ',' << (s.certified ? "true" : "false")
            << '\n';
    }
}

}  // namespace erdos
