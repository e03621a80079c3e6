#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace erdos {

// Argument outside the mathematical domain of an operation (a < 2, x < 3, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Argument inside the domain but beyond what a table or integer width can hold.
class OutOfRangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// Request exceeds a hard implementation ceiling.
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed input file (cache or integer list).
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A divisibility witness: `divisor` divides `multiple`, both in the same sequence.
class PrimitivityViolation : public std::runtime_error {
public:
    PrimitivityViolation(std::uint64_t divisor, std::uint64_t multiple)
        : std::runtime_error("not primitive: " + std::to_string(divisor) + " divides " +
                             std::to_string(multiple)),
          divisor_(divisor),
          multiple_(multiple) {}

    std::uint64_t divisor() const noexcept { return divisor_; }
    std::uint64_t multiple() const noexcept { return multiple_; }

private:
    std::uint64_t divisor_;
    std::uint64_t multiple_;
};

}  // namespace erdos
