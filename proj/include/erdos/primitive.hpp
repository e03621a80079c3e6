// primitive.hpp
// Primitive sequences: finite sets of integers >= 2 in which no element
// divides another.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace erdos {

class PrimitiveSequence {
public:
    PrimitiveSequence() = default;

    // Strictly increasing, pairwise non-dividing.
    std::span<const std::uint64_t> elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty(); }

private:
    friend PrimitiveSequence make_validated(std::vector<std::uint64_t> sorted_unique);
    explicit PrimitiveSequence(std::vector<std::uint64_t> elements)
        : elements_(std::move(elements)) {}

    std::vector<std::uint64_t> elements_;
};

enum class DivisibilityScan {
    automatic,
    trial_division,  // divisors of each element up to its square root, O(sum sqrt a)
    multiples,       // multiples of each element up to the maximum, bitset membership
};

// Sorts and deduplicates `elements`, then validates primitivity.
// DomainError if any element is < 2.  PrimitivityViolation otherwise carries
// the witness (a, b), a | b, with b the smallest element that has a proper
// divisor in the set and a the smallest such divisor.
PrimitiveSequence check_primitive(std::vector<std::uint64_t> elements,
                                  DivisibilityScan scan = DivisibilityScan::automatic);

struct PrimitivityCertificate {
    enum class Kind { explicit_checked, structural_semiprime_union };

    Kind kind = Kind::explicit_checked;
    std::optional<std::uint64_t> threshold;
    std::vector<std::string> details;
    // Size of the materialized truncation that was brute-force checked, if any.
    std::optional<std::uint64_t> explicit_check_size;
};

const char* to_string(PrimitivityCertificate::Kind kind) noexcept;

// Largest threshold for which certify_construction materializes and checks
// A1 together with the primes in (threshold, threshold^4].
inline constexpr std::uint64_t kExplicitCheckMaxThreshold = 100;

// Structural certificate for A1(T) u A2(T): A1(T) the products pq of primes
// p, q <= T, A2(T) the primes > T.  Throws PrimitivityViolation if the
// explicit cross-check fails, DomainError for threshold < 2.
PrimitivityCertificate certify_construction(std::uint64_t threshold);

// A1(T) u {primes in (T, upper]}, sorted.
std::vector<std::uint64_t> materialize_construction(std::uint64_t threshold, std::uint64_t upper);

// Newline-delimited decimal integers; blank lines and '#' comments ignored.
// FormatError (with the line number) on anything else.
std::vector<std::uint64_t> read_integer_list(std::istream& in);
std::vector<std::uint64_t> read_integer_list(const std::string& path);

}  // namespace erdos
