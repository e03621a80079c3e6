#include "erdos/cli.hpp"

#include <chrono>
#include <map>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "erdos/counterexample.hpp"
#include "erdos/errors.hpp"
#include "erdos/primitive.hpp"
#include "erdos/sieve.hpp"

namespace erdos::cli {

namespace {

using Clock = std::chrono::steady_clock;
using Json = nlohmann::ordered_json;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

Json sum_json(const SumResult& s) {
    Json j;
    j["value"] = s.value;
    j["error_bound"] = s.error_bound;
    j["term_count"] = s.term_count;
    return j;
}

void emit_sum_text(std::ostream& out, const SumResult& s) {
    out << "value: " << format_double(s.value) << "\n"
        << "error_bound: " << format_double(s.error_bound) << "\n"
        << "term_count: " << s.term_count << "\n";
}

PrimeTable load_or_sieve(const RunConfig& config) {
    if (config.cache_in) {
        auto table = load_table(*config.cache_in);
        if (table.limit() < config.limit) {
            throw OutOfRangeError("cached table limit " + std::to_string(table.limit()) +
                                  " is below requested " + std::to_string(config.limit));
        }
        return table;
    }
    return sieve_primes(config.limit);
}

int run_sieve(const RunConfig& config, std::ostream& out) {
    const auto start = Clock::now();
    const auto table = load_or_sieve(config);
    if (config.cache_out) save_table(table, *config.cache_out);
    const auto count = prime_count(table, config.limit);
    const std::uint64_t largest = count == 0 ? 0 : table.prime(count - 1);
    if (config.output_format == OutputFormat::json) {
        Json j;
        j["tool_version"] = kToolVersion;
        j["command"] = "sieve";
        j["limit"] = config.limit;
        j["prime_count"] = count;
        j["largest_prime"] = largest;
        j["elapsed_seconds"] = seconds_since(start);
        emit_json(out, j);
    } else {
        out << "limit: " << config.limit << "\n"
            << "prime_count: " << count << "\n"
            << "largest_prime: " << largest << "\n";
    }
    return kExitOk;
}

int run_sum(const RunConfig& config, std::ostream& out) {
    const auto start = Clock::now();
    if (config.limit < 2) throw DomainError("limit must be >= 2");
    const auto table = load_or_sieve(config);
    const SumOptions options{config.threads, config.chunk_size, config.pair_mode()};
    const bool semiprimes = config.command == Command::sum_semiprimes;
    const SumResult s = semiprimes ? sum_semiprimes(table, config.limit, options)
                                   : sum_primes(table, config.limit, options);
    if (config.output_format == OutputFormat::json) {
        Json j;
        j["tool_version"] = kToolVersion;
        j["command"] = semiprimes ? "sum-semiprimes" : "sum-primes";
        j["limit"] = config.limit;
        if (semiprimes) j["pair_mode"] = to_string(options.pairs);
        j.update(sum_json(s));
        j["elapsed_seconds"] = seconds_since(start);
        emit_json(out, j);
    } else {
        out << "limit: " << config.limit << "\n";
        if (semiprimes) out << "pair_mode: " << to_string(options.pairs) << "\n";
        emit_sum_text(out, s);
        if (semiprimes && options.pairs == PairMode::ordered) {
            out << "note: ordered pairs count pq and qp separately; this is not the Erdos sum of "
                   "a set.\n";
        }
    }
    return kExitOk;
}

int run_verify(const RunConfig& config, std::ostream& out) {
    const auto start = Clock::now();
    if (config.limit < 2) throw DomainError("threshold must be >= 2");
    const auto table = load_or_sieve(config);
    Timings timings;
    timings.sieve_seconds = seconds_since(start);
    const auto sums_start = Clock::now();
    const auto report =
        verify(table, config.limit, {config.threads, config.chunk_size, config.pair_mode()});
    timings.sum_seconds = seconds_since(sums_start);
    timings.total_seconds = seconds_since(start);
    if (config.output_format == OutputFormat::json) {
        out << report_to_json(report, timings);
    } else {
        out << report_to_text(report);
    }
    return report.certified ? kExitOk : kExitNotCertified;
}

int run_crossover(const RunConfig& config, std::ostream& out) {
    const auto start = Clock::now();
    const auto result = crossover(config.limit, config.stride,
                                  {config.threads, config.chunk_size, config.pair_mode()});
    switch (config.output_format) {
        case OutputFormat::csv:
            write_history_csv(result, out);
            break;
        case OutputFormat::json: {
            Json j;
            j["tool_version"] = kToolVersion;
            j["command"] = "crossover";
            j["scan_limit"] = result.scan_limit;
            j["stride"] = config.stride;
            j["pair_mode"] = to_string(result.pair_mode);
            j["found"] = result.found();
            j["first_exceeding_prime"] =
                result.found() ? Json(*result.first_exceeding_prime) : Json(nullptr);
            j["stable_above"] = result.stable_above;
            j["last_prime"] = result.last_prime;
            j["final_margin"] = result.final_margin;
            Json history = Json::array();
            for (const auto& s : result.history) {
                history.push_back({{"prime", s.prime}, {"margin", s.margin}, {"certified", s.certified}});
            }
            j["history"] = std::move(history);
            j["elapsed_seconds"] = seconds_since(start);
            emit_json(out, j);
            break;
        }
        case OutputFormat::text:
            out << "scan_limit: " << result.scan_limit << "\n"
                << "pair_mode: " << to_string(result.pair_mode) << "\n";
            if (result.found()) {
                out << "first_exceeding_prime: " << *result.first_exceeding_prime << "\n"
                    << "stable_above: " << (result.stable_above ? "true" : "false") << "\n";
            } else {
                out << "first_exceeding_prime: not found\n";
            }
            out << "last_prime: " << result.last_prime << "\n"
                << "final_margin: " << format_double(result.final_margin) << "\n";
            break;
    }
    return result.found() ? kExitOk : kExitNotCertified;
}

int run_check_primitive(const RunConfig& config, std::ostream& out) {
    auto elements = read_integer_list(*config.input_path);
    const bool json = config.output_format == OutputFormat::json;
    try {
        const auto seq = check_primitive(std::move(elements));
        if (json) {
            emit_json(out, Json{{"tool_version", kToolVersion},
                                {"command", "check-primitive"},
                                {"primitive", true},
                                {"size", seq.size()}});
        } else {
            out << "primitive: true\nsize: " << seq.size() << "\n";
        }
        return kExitOk;
    } catch (const PrimitivityViolation& v) {
        if (json) {
            emit_json(out, Json{{"tool_version", kToolVersion},
                                {"command", "check-primitive"},
                                {"primitive", false},
                                {"witness", {v.divisor(), v.multiple()}}});
        } else {
            out << "primitive: false\nwitness: " << v.divisor() << " divides " << v.multiple()
                << "\n";
        }
        return kExitNotCertified;
    }
}

int run_sum_file(const RunConfig& config, std::ostream& out) {
    const auto seq = check_primitive(read_integer_list(*config.input_path));
    const auto s = sum_sequence(seq);
    if (config.output_format == OutputFormat::json) {
        Json j;
        j["tool_version"] = kToolVersion;
        j["command"] = "sum-file";
        j.update(sum_json(s));
        emit_json(out, j);
    } else {
        emit_sum_text(out, s);
    }
    return kExitOk;
}

}  // namespace

PairMode RunConfig::pair_mode() const noexcept {
    if (ordered_pairs) return PairMode::ordered;
    return include_prime_squares ? PairMode::unordered_with_squares : PairMode::unordered_distinct;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.output_format == OutputFormat::csv && config.command != Command::crossover) {
            throw PreconditionError("csv output is only available for crossover");
        }
        switch (config.command) {
            case Command::sieve: return run_sieve(config, out);
            case Command::sum_primes:
            case Command::sum_semiprimes: return run_sum(config, out);
            case Command::verify: return run_verify(config, out);
            case Command::crossover: return run_crossover(config, out);
            case Command::check_primitive: return run_check_primitive(config, out);
            case Command::sum_file: return run_sum_file(config, out);
        }
    } catch (const PrimitivityViolation& e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::logic_error& e) {
        err << "error: " << e.what() << "\n";
    } catch (const FormatError& e) {
        err << "error: " << e.what() << "\n";
    }
    return kExitUsage;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Erdos sums of primes and prime-pair products, with certified error bounds"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig config;

    const std::map<std::string, OutputFormat> formats{
        {"text", OutputFormat::text}, {"json", OutputFormat::json}, {"csv", OutputFormat::csv}};
    app.add_option("--format", config.output_format, "Output format: text, json or csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    app.add_option("--threads", config.threads, "Worker threads (0 = auto, or ERDOS_THREADS)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--chunk-size", config.chunk_size, "Summands per compensated chunk")
        ->check(CLI::PositiveNumber);

    auto add_pair_flags = [&](CLI::App* sub) {
        auto* distinct = sub->add_flag("--no-prime-squares", "Exclude p = q from the pair set");
        auto* ordered = sub->add_flag("--ordered-pairs",
                                      "Count ordered pairs (p, q); diagnostic, not a set");
        distinct->excludes(ordered);
        sub->callback([&config, distinct, ordered] {
            config.include_prime_squares = distinct->count() == 0;
            config.ordered_pairs = ordered->count() > 0;
        });
    };
    auto add_cache = [&](CLI::App* sub) {
        sub->add_option("--cache-in", config.cache_in, "Load the prime table from a PTAB1 file")
            ->check(CLI::ExistingFile);
    };

    auto* sieve = app.add_subcommand("sieve", "Sieve primes and report pi(limit)");
    sieve->add_option("--limit", config.limit, "Inclusive upper bound")->required();
    sieve->add_option("--cache-out", config.cache_out, "Write the table as a PTAB1 file");
    add_cache(sieve);

    auto* sum_p = app.add_subcommand("sum-primes", "Sum 1/(p ln p) over primes p <= limit");
    sum_p->add_option("--limit", config.limit, "Inclusive upper bound")->required();
    add_cache(sum_p);

    auto* sum_s = app.add_subcommand("sum-semiprimes", "Sum 1/(pq ln pq) over primes p <= q <= limit");
    sum_s->add_option("--limit", config.limit, "Inclusive upper bound")->required();
    add_pair_flags(sum_s);
    add_cache(sum_s);

    auto* ver = app.add_subcommand("verify", "Compare the semiprime and prime sums at a threshold");
    config.limit = kPaperThreshold;
    ver->add_option("--threshold", config.limit, "Inclusive prime bound")->capture_default_str();
    add_pair_flags(ver);
    add_cache(ver);

    auto* cross = app.add_subcommand("crossover", "Find the first prime threshold that certifies");
    cross->add_option("--scan-limit", config.limit, "Largest threshold scanned")->required();
    cross->add_option("--stride", config.stride, "History sampling stride")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    add_pair_flags(cross);

    auto* check = app.add_subcommand("check-primitive", "Check a newline-delimited integer file");
    check->add_option("--input", config.input_path, "Input file")->required();

    auto* sum_f = app.add_subcommand("sum-file", "Erdos sum of a primitive sequence read from a file");
    sum_f->add_option("--input", config.input_path, "Input file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    const std::map<CLI::App*, Command> commands{
        {sieve, Command::sieve},         {sum_p, Command::sum_primes},
        {sum_s, Command::sum_semiprimes}, {ver, Command::verify},
        {cross, Command::crossover},     {check, Command::check_primitive},
        {sum_f, Command::sum_file}};
    for (const auto& [sub, command] : commands) {
        if (sub->parsed()) config.command = command;
    }
    return run(config, out, err);
}

}  // namespace erdos::cli
