#include "erdos/primitive.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <unordered_set>

#include "erdos/errors.hpp"
#include "erdos/sieve.hpp"

namespace erdos {

PrimitiveSequence make_validated(std::vector<std::uint64_t> sorted_unique) {
    return PrimitiveSequence(std::move(sorted_unique));
}

namespace {

constexpr std::uint64_t kMultiplesMaxValue = std::uint64_t{1} << 28;

struct Witness {
    std::uint64_t divisor = 0;
    std::uint64_t multiple = std::numeric_limits<std::uint64_t>::max();
    bool found() const { return divisor != 0; }
};

Witness scan_trial_division(const std::vector<std::uint64_t>& sorted) {
    const std::unordered_set<std::uint64_t> members(sorted.begin(), sorted.end());
    for (auto e : sorted) {
        std::uint64_t best = 0;
        for (std::uint64_t d = 2; d <= e / d; ++d) {
            if (e % d != 0) continue;
            if (members.contains(d)) {
                best = d;  // d ascending, so the first hit below sqrt is the minimum
                break;
            }
            const auto co = e / d;
            if (co != e && members.contains(co) && (best == 0 || co < best)) best = co;
        }
        if (best != 0) return {best, e};
    }
    return {};
}

Witness scan_multiples(const std::vector<std::uint64_t>& sorted) {
    const std::uint64_t max = sorted.back();
    std::vector<bool> member(max + 1, false);
    for (auto e : sorted) member[e] = true;

    Witness w;
    for (auto a : sorted) {
        if (a > max / 2) break;
        // Only multiples below the current best can improve the witness, and
        // for a fixed multiple the first (smallest) divisor to reach it wins.
        const std::uint64_t stop = std::min(max, w.multiple == std::numeric_limits<std::uint64_t>::max()
                                                     ? max
                                                     : w.multiple - 1);
        for (std::uint64_t m = 2 * a; m <= stop; m += a) {
            if (member[m]) {
                w = {a, m};
                break;
            }
        }
    }
    // A smaller divisor of the same multiple may exist only among earlier a,
    // which were scanned first; a later a can only win with a smaller multiple.
    return w;
}

}  // namespace

PrimitiveSequence check_primitive(std::vector<std::uint64_t> elements, DivisibilityScan scan) {
    for (auto e : elements) {
        if (e < 2) {
            throw DomainError("check_primitive: element " + std::to_string(e) +
                              " < 2 (1 divides every integer)");
        }
    }
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (elements.empty()) return make_validated({});

    if (scan == DivisibilityScan::automatic) {
        scan = elements.back() <= kMultiplesMaxValue ? DivisibilityScan::multiples
                                                     : DivisibilityScan::trial_division;
    }
    const Witness w = scan == DivisibilityScan::multiples ? scan_multiples(elements)
                                                          : scan_trial_division(elements);
    if (w.found()) throw PrimitivityViolation(w.divisor, w.multiple);
    return make_validated(std::move(elements));
}

const char* to_string(PrimitivityCertificate::Kind kind) noexcept {
    switch (kind) {
        case PrimitivityCertificate::Kind::explicit_checked: return "explicit-checked";
        case PrimitivityCertificate::Kind::structural_semiprime_union:
            return "structural-semiprime-union";
    }
    return "unknown";
}

std::vector<std::uint64_t> materialize_construction(std::uint64_t threshold, std::uint64_t upper) {
    const auto table = sieve_primes(std::max(threshold, upper));
    const auto primes = table.primes();
    const std::size_t k = table.count_upto(threshold);

    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i; j < k; ++j) out.push_back(primes[i] * primes[j]);
    }
    for (std::size_t i = k; i < primes.size() && primes[i] <= upper; ++i) out.push_back(primes[i]);
    std::sort(out.begin(), out.end());
    return out;
}

PrimitivityCertificate certify_construction(std::uint64_t threshold) {
    if (threshold < 2) throw DomainError("certify_construction: threshold must be >= 2");

    const std::string t = std::to_string(threshold);
    PrimitivityCertificate cert;
    cert.kind = PrimitivityCertificate::Kind::structural_semiprime_union;
    cert.threshold = threshold;
    cert.details = {
        "A1 = {pq : p, q prime, p <= q <= " + t + "}; A2 = {r prime : r > " + t + "}.",
        "(i) within A1: every element has exactly two prime factors counted with multiplicity; "
        "if a | b with a, b in A1 then b/a has zero prime factors, so a = b.",
        "(ii) within A2: a prime has no divisors other than 1 and itself, so distinct primes do "
        "not divide one another.",
        "(iii) across A1 and A2: a prime r > " + t + " is not among the factors p, q <= " + t +
            " of any pq, so r does not divide pq by unique factorization; pq >= 4 is composite "
            "and cannot divide a prime.",
        "Strict and inclusive bounds (p < T versus p <= T) select the same primes whenever T is "
        "composite.",
    };

    if (threshold <= kExplicitCheckMaxThreshold) {
        const std::uint64_t upper = threshold * threshold * threshold * threshold;
        auto truncation = materialize_construction(threshold, upper);
        const auto n = truncation.size();
        check_primitive(std::move(truncation));
        cert.explicit_check_size = n;
        cert.details.push_back("explicit check: A1 together with all primes in (" + t + ", " +
                               std::to_string(upper) + "], " + std::to_string(n) +
                               " elements, pairwise non-dividing.");
    }
    return cert;
}

std::vector<std::uint64_t> read_integer_list(std::istream& in) {
    std::vector<std::uint64_t> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        const char* begin = line.data() + first;
        const char* end = line.data() + last + 1;
        std::uint64_t value = 0;
        const auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc{} || ptr != end) {
            throw FormatError("line " + std::to_string(line_no) + ": not a nonnegative integer: '" +
                              std::string(begin, end) + "'");
        }
        out.push_back(value);
    }
    return out;
}

std::vector<std::uint64_t> read_integer_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    return read_integer_list(in);
}

}  // namespace erdos
