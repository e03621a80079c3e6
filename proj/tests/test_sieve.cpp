#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

#include "erdos/errors.hpp"
#include "erdos/sieve.hpp"
#include "oracle.hpp"

using namespace erdos;

namespace {

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("erdos_test_" + name);
}

std::vector<std::uint64_t> as_vector(std::span<const std::uint64_t> s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_CASE("small limits") {
    CHECK(as_vector(sieve_primes(10).primes()) == std::vector<std::uint64_t>{2, 3, 5, 7});
    CHECK(sieve_primes(1).empty());
    CHECK(sieve_primes(0).empty());
    CHECK(as_vector(sieve_primes(2).primes()) == std::vector<std::uint64_t>{2});
    CHECK(as_vector(sieve_primes(3).primes()) == std::vector<std::uint64_t>{2, 3});
    CHECK(sieve_primes(9).size() == 4);
}

TEST_CASE("limit 100 matches trial division") {
    const auto table = sieve_primes(100);
    CHECK(table.size() == 25);
    CHECK(table.prime(24) == 97);
    CHECK(as_vector(table.primes()) == oracle::primes_trial(100));
}

TEST_CASE("prime_count") {
    const auto table = sieve_primes(1'400'000);
    CHECK(prime_count(table, 10) == 4);
    CHECK(prime_count(table, 1) == 0);
    CHECK(prime_count(table, 0) == 0);
    CHECK(prime_count(table, 1'000'000) == 78'498);  // published pi(10^6)
    CHECK(prime_count(table, 1'400'000) == 107'126);
    CHECK_THROWS_AS(prime_count(table, 1'400'001), OutOfRangeError);

    SUBCASE("pi(1.4e6) by an independent trial-division count") {
        CHECK(oracle::primes_trial(1'400'000).size() == 107'126);
    }
}

TEST_CASE("prime_count agrees with trial division at random points") {
    const auto table = sieve_primes(100'000);
    const auto reference = oracle::primes_trial(100'000);
    std::mt19937_64 rng(20261018);
    std::uniform_int_distribution<std::uint64_t> dist(0, 100'000);
    for (int i = 0; i < 500; ++i) {
        const auto x = dist(rng);
        const auto expected = std::upper_bound(reference.begin(), reference.end(), x) - reference.begin();
        REQUIRE(prime_count(table, x) == static_cast<std::uint64_t>(expected));
    }
}

TEST_CASE("segment size does not change the table") {
    const auto single = sieve_primes(1'000'000, 1'000'000);  // one window: the unsegmented path
    for (std::size_t seg : {std::size_t{1}, std::size_t{7}, std::size_t{4096}, kDefaultSegmentBytes}) {
        CAPTURE(seg);
        CHECK(sieve_primes(1'000'000, seg) == single);
    }
    CHECK(sieve_primes(999'983, 13) == sieve_primes(999'983, 1'000'000));
    CHECK_THROWS_AS(sieve_primes(100, 0), PreconditionError);
}

TEST_CASE("logs are within one ulp of ln p") {
    const auto table = sieve_primes(1'400'000);
    REQUIRE(table.logs().size() == table.size());
    for (std::size_t i = 0; i < table.size(); ++i) {
        const double p = static_cast<double>(table.prime(i));
        const double l = table.log(i);
        const double e = std::exp(l);
        REQUIRE(e > p * (1 - 1e-12));
        REQUIRE(e < p * (1 + 1e-12));
        const oracle::High exact = log(oracle::High(table.prime(i)));
        const double ulp = std::nextafter(l, 2 * l) - l;
        REQUIRE(abs(oracle::High(l) - exact) <= oracle::High(ulp));
    }
}

TEST_CASE("ceiling") {
    CHECK_THROWS_AS(sieve_primes(kSieveCeiling + 1), CapacityError);
}

TEST_CASE("is_prime") {
    for (std::uint64_t n = 0; n < 20'000; ++n) REQUIRE(is_prime(n) == oracle::is_prime_trial(n));
    CHECK(is_prime(2305843009213693951ULL));   // 2^61 - 1
    CHECK_FALSE(is_prime(2305843009213693953ULL));
    CHECK(is_prime(18446744073709551557ULL));  // largest 64-bit prime
    CHECK_FALSE(is_prime(3215031751ULL));      // strong pseudoprime to bases 2, 3, 5, 7
}

TEST_CASE("PTAB1 cache") {
    const auto path = temp_file("cache.ptab");
    const auto table = sieve_primes(200'000);
    save_table(table, path);
    CHECK(load_table(path) == table);

    SUBCASE("header layout") {
        std::ifstream in(path, std::ios::binary);
        std::vector<unsigned char> bytes{std::istreambuf_iterator<char>(in), {}};
        REQUIRE(bytes.size() > 13);
        CHECK(std::string(bytes.begin(), bytes.begin() + 5) == "PTAB1");
        std::uint64_t limit = 0;
        for (int i = 0; i < 8; ++i) limit |= std::uint64_t{bytes[5 + i]} << (8 * i);
        CHECK(limit == 200'000);
        CHECK(bytes[13] == 2);  // first delta
        CHECK(bytes[14] == 1);  // 3 - 2
    }

    SUBCASE("empty table") {
        save_table(sieve_primes(1), path);
        const auto loaded = load_table(path);
        CHECK(loaded.limit() == 1);
        CHECK(loaded.empty());
    }

    SUBCASE("bad magic") {
        std::ofstream(path, std::ios::binary) << "PTAB2\x10\0\0\0\0\0\0\0\x02";
        CHECK_THROWS_AS(load_table(path), FormatError);
    }

    SUBCASE("composite entry among the first hundred") {
        // 2, 3, 4: delta 1 then 1 again gives 4.
        std::ofstream out(path, std::ios::binary);
        out.write("PTAB1", 5);
        const unsigned char header[8] = {100, 0, 0, 0, 0, 0, 0, 0};
        out.write(reinterpret_cast<const char*>(header), 8);
        const unsigned char body[3] = {2, 1, 1};
        out.write(reinterpret_cast<const char*>(body), 3);
        out.close();
        CHECK_THROWS_AS(load_table(path), FormatError);
    }

    SUBCASE("truncated varint") {
        std::ofstream out(path, std::ios::binary);
        out.write("PTAB1", 5);
        const unsigned char header[8] = {100, 0, 0, 0, 0, 0, 0, 0};
        out.write(reinterpret_cast<const char*>(header), 8);
        out.put(static_cast<char>(0x82));
        out.close();
        CHECK_THROWS_AS(load_table(path), FormatError);
    }

    SUBCASE("prime beyond the stored limit") {
        std::ofstream out(path, std::ios::binary);
        out.write("PTAB1", 5);
        const unsigned char header[8] = {2, 0, 0, 0, 0, 0, 0, 0};
        out.write(reinterpret_cast<const char*>(header), 8);
        const unsigned char body[2] = {2, 1};
        out.write(reinterpret_cast<const char*>(body), 2);
        out.close();
        CHECK_THROWS_AS(load_table(path), FormatError);
    }
    std::filesystem::remove(path);
}
