#include <doctest.h>

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "erdos/counterexample.hpp"
#include "erdos/errors.hpp"
#include "oracle.hpp"

using namespace erdos;

TEST_CASE("verify at tiny thresholds") {
    const auto r3 = verify(3);
    CHECK(r3.threshold == 3);
    CHECK(r3.semiprime_sum.value == doctest::Approx(0.3239241637933748).epsilon(1e-14));
    CHECK(r3.prime_sum.value == doctest::Approx(1.0247605959867608).epsilon(1e-14));
    CHECK(r3.margin == doctest::Approx(-0.7008364321933860).epsilon(1e-13));
    CHECK_FALSE(r3.certified);
    CHECK(r3.includes_prime_squares);

    const auto r2 = verify(2);
    CHECK(r2.semiprime_sum.value == term(4));
    CHECK(r2.prime_sum.value == term(2));
    CHECK_FALSE(r2.certified);

    CHECK_THROWS_AS(verify(1), DomainError);

    VerifyOptions distinct;
    distinct.pairs = PairMode::unordered_distinct;
    const auto d3 = verify(3, distinct);
    CHECK_FALSE(d3.includes_prime_squares);
    CHECK(d3.semiprime_sum.value == term(6));
}

TEST_CASE("certification is a strict inequality against both bounds") {
    CHECK(certifies(1.0, 0.25, 0.25));
    CHECK_FALSE(certifies(0.5, 0.25, 0.25));
    CHECK_FALSE(certifies(-1.0, 0.0, 0.0));
    CHECK_FALSE(certifies(0.0, 0.0, 0.0));
}

TEST_CASE("verify matches the oracle for thresholds up to 10^3") {
    const std::vector<std::uint64_t> thresholds{2, 3, 5, 8, 13, 50, 97, 128, 500, 997, 1000};
    const auto reference = oracle::threshold_sums(thresholds);
    const auto table = sieve_primes(1000);
    for (auto t : thresholds) {
        CAPTURE(t);
        const auto r = verify(table, t);
        CHECK(oracle::within(r.semiprime_sum.value, reference.at(t).semiprimes_with_squares,
                             r.semiprime_sum.error_bound));
        CHECK(oracle::within(r.prime_sum.value, reference.at(t).primes, r.prime_sum.error_bound));
        CHECK(r.semiprime_sum.value < kClarkBound);
        CHECK(r.prime_sum.value < kClarkBound);
        if (r.certified) CHECK(r.margin > 0);
    }
}

TEST_CASE("tail_estimate") {
    CHECK(tail_estimate(3) == doctest::Approx(0.91023922662683739).epsilon(1e-15));
    CHECK(tail_estimate(1'400'000) == doctest::Approx(0.070661476523459135).epsilon(1e-15));
    CHECK_THROWS_AS(tail_estimate(2), DomainError);
}

TEST_CASE("crossover below 100 is not found") {
    const auto result = crossover(100, 10);
    CHECK_FALSE(result.found());
    CHECK_FALSE(result.stable_above);
    CHECK(result.last_prime == 97);
    CHECK(result.final_margin < 0);

    // 25 primes: samples at the 10th, 20th and the last.
    REQUIRE(result.history.size() == 3);
    CHECK(result.history[0].prime == 29);
    CHECK(result.history[1].prime == 71);
    CHECK(result.history[2].prime == 97);

    const auto direct = verify(97);
    CHECK(std::fabs(result.final_margin - direct.margin) <= 2 * direct.combined_error());

    CHECK_THROWS_AS(crossover(100, 0), PreconditionError);
    CHECK_THROWS_AS(crossover(1, 1), PreconditionError);
}

TEST_CASE("crossover running margins track verify") {
    const auto result = crossover(3000, 37, {1, 50});
    const auto table = sieve_primes(3000);
    for (const auto& sample : result.history) {
        const auto r = verify(table, sample.prime);
        CHECK(std::fabs(sample.margin - r.margin) <= 2 * r.combined_error() + 1e-15);
    }
    const auto threaded = crossover(3000, 37, {4, 50});
    REQUIRE(threaded.history.size() == result.history.size());
    for (std::size_t i = 0; i < result.history.size(); ++i) {
        CHECK(threaded.history[i].margin == result.history[i].margin);
    }
}

TEST_CASE("JSON and CSV serialization") {
    const auto report = verify(1000);
    const auto text = report_to_json(report, {0.5, 1.5, 2.0});
    const auto j = nlohmann::json::parse(text);
    CHECK(j.at("threshold") == 1000);
    CHECK(j.at("semiprime_sum").at("value").get<double>() == report.semiprime_sum.value);
    CHECK(j.at("semiprime_sum").at("error_bound").get<double>() == report.semiprime_sum.error_bound);
    CHECK(j.at("semiprime_sum").at("term_count") == report.semiprime_sum.term_count);
    CHECK(j.at("prime_sum").at("value").get<double>() == report.prime_sum.value);
    CHECK(j.at("margin").get<double>() == report.margin);
    CHECK(j.at("certified") == false);
    CHECK(j.at("includes_prime_squares") == true);
    CHECK(j.at("erdos_bound").get<double>() == 1.84);
    CHECK(j.at("clark_bound").get<double>() == 1.7811);
    CHECK(j.at("tool_version") == kToolVersion);
    CHECK(j.at("elapsed_seconds").at("total").get<double>() == 2.0);

    const auto prose = report_to_text(report);
    CHECK(prose.find("non-rigorous") != std::string::npos);
    CHECK(prose.find("not certified") != std::string::npos);

    CrossoverResult cr;
    cr.history = {{2, -0.5, false}, {3, 0.25, true}};
    std::ostringstream csv;
    write_history_csv(cr, csv);
    CHECK(csv.str() == "prime,margin,certified\n2,-0.5,false\n3,0.25,true\n");
}

TEST_CASE("format_double round-trips") {
    for (double x : {0.1, 1.0 / 3.0, 1.5659596891, 2.2250738585072014e-308, 1e300, -0.7008364321933860}) {
        CHECK(std::stod(format_double(x)) == x);
    }
    CHECK(format_double(0.5) == "0.5");
}
