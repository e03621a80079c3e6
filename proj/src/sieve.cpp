#include "erdos/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iterator>
#include <string>

#include "erdos/errors.hpp"

namespace erdos {

namespace {

std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// Plain odd-only sieve for the base primes (<= sqrt(ceiling) = 1e5).
std::vector<std::uint64_t> small_odd_primes(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    if (limit < 3) return out;
    std::vector<bool> composite((limit - 1) / 2, false);  // index i -> 2i + 3
    for (std::uint64_t i = 0; i < composite.size(); ++i) {
        if (composite[i]) continue;
        const std::uint64_t p = 2 * i + 3;
        out.push_back(p);
        for (std::uint64_t m = p * p; m <= limit; m += 2 * p) composite[(m - 3) / 2] = true;
    }
    return out;
}

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

constexpr char kMagic[5] = {'P', 'T', 'A', 'B', '1'};
constexpr std::size_t kValidateWindow = 100;

}  // namespace

PrimeTable::PrimeTable(std::uint64_t limit, std::vector<std::uint64_t> primes)
    : limit_(limit), primes_(std::move(primes)) {
    logs_.reserve(primes_.size());
    for (auto p : primes_) logs_.push_back(std::log(static_cast<double>(p)));
}

std::size_t PrimeTable::count_upto(std::uint64_t x) const noexcept {
    return static_cast<std::size_t>(std::upper_bound(primes_.begin(), primes_.end(), x) -
                                    primes_.begin());
}

PrimeTable sieve_primes(std::uint64_t limit, std::size_t segment_bytes) {
    if (limit > kSieveCeiling) {
        throw CapacityError("sieve limit " + std::to_string(limit) + " exceeds ceiling " +
                            std::to_string(kSieveCeiling));
    }
    if (segment_bytes == 0) throw PreconditionError("segment size must be positive");

    std::vector<std::uint64_t> primes;
    if (limit < 2) return PrimeTable(limit, std::move(primes));

    if (limit >= 10) {
        // pi(x) < 1.26 x / ln x
        const double x = static_cast<double>(limit);
        primes.reserve(static_cast<std::size_t>(1.26 * x / std::log(x)) + 1);
    }
    primes.push_back(2);

    const auto base = small_odd_primes(isqrt(limit));
    std::vector<std::uint64_t> next_multiple;
    next_multiple.reserve(base.size());
    for (auto p : base) next_multiple.push_back(p * p);

    std::vector<unsigned char> segment(segment_bytes);
    for (std::uint64_t low = 3; low <= limit; low += 2 * segment_bytes) {
        // Odd numbers low, low+2, ..., high (inclusive).
        const std::uint64_t span = std::min<std::uint64_t>(segment_bytes, (limit - low) / 2 + 1);
        const std::uint64_t high = low + 2 * (span - 1);
        std::fill_n(segment.begin(), span, 1);

        for (std::size_t k = 0; k < base.size(); ++k) {
            const std::uint64_t p = base[k];
            std::uint64_t m = next_multiple[k];
            if (m > high) {
                if (p * p > high) break;
                continue;
            }
            for (; m <= high; m += 2 * p) segment[(m - low) / 2] = 0;
            next_multiple[k] = m;
        }
        for (std::uint64_t i = 0; i < span; ++i) {
            if (segment[i]) primes.push_back(low + 2 * i);
        }
    }
    return PrimeTable(limit, std::move(primes));
}

std::uint64_t prime_count(const PrimeTable& table, std::uint64_t x) {
    if (x > table.limit()) {
        throw OutOfRangeError("prime_count: x=" + std::to_string(x) + " exceeds table limit " +
                              std::to_string(table.limit()));
    }
    return table.count_upto(x);
}

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

void save_table(const PrimeTable& table, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot open " + path.string() + " for writing");
    out.write(kMagic, sizeof(kMagic));
    std::uint64_t limit = table.limit();
    for (int i = 0; i < 8; ++i) out.put(static_cast<char>((limit >> (8 * i)) & 0xFF));

    std::uint64_t prev = 0;
    for (auto p : table.primes()) {
        std::uint64_t delta = p - prev;
        prev = p;
        do {
            auto byte = static_cast<unsigned char>(delta & 0x7F);
            delta >>= 7;
            if (delta != 0) byte |= 0x80;
            out.put(static_cast<char>(byte));
        } while (delta != 0);
    }
    if (!out) throw FormatError("write failed: " + path.string());
}

PrimeTable load_table(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open " + path.string());
    const std::vector<unsigned char> bytes{std::istreambuf_iterator<char>(in),
                                           std::istreambuf_iterator<char>()};
    if (bytes.size() < sizeof(kMagic) + 8 ||
        !std::equal(std::begin(kMagic), std::end(kMagic), bytes.begin())) {
        throw FormatError(path.string() + ": missing PTAB1 header");
    }
    std::uint64_t limit = 0;
    for (int i = 0; i < 8; ++i) limit |= std::uint64_t{bytes[sizeof(kMagic) + i]} << (8 * i);
    if (limit > kSieveCeiling) throw FormatError(path.string() + ": limit exceeds sieve ceiling");

    std::vector<std::uint64_t> primes;
    std::uint64_t prev = 0;
    std::size_t pos = sizeof(kMagic) + 8;
    while (pos < bytes.size()) {
        std::uint64_t delta = 0;
        int shift = 0;
        while (true) {
            if (pos >= bytes.size() || shift > 63) throw FormatError(path.string() + ": truncated varint");
            const auto byte = bytes[pos++];
            delta |= std::uint64_t{byte & 0x7Fu} << shift;
            shift += 7;
            if ((byte & 0x80) == 0) break;
        }
        if (delta == 0) throw FormatError(path.string() + ": primes not strictly increasing");
        prev += delta;
        if (prev > limit) throw FormatError(path.string() + ": prime exceeds stored limit");
        primes.push_back(prev);
    }

    const std::size_t n = primes.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (i == kValidateWindow && n > 2 * kValidateWindow) i = n - kValidateWindow;
        if (!is_prime(primes[i])) {
            throw FormatError(path.string() + ": entry " + std::to_string(primes[i]) + " is not prime");
        }
    }
    return PrimeTable(limit, std::move(primes));
}

}  // namespace erdos
