"""Certified Erdos sums over primes and prime-pair products."""

from ._core import (
    CLARK_BOUND,
    ERDOS_BOUND,
    PAPER_THRESHOLD,
    PairMode,
    PrimitivityViolation,
    __version__,
    certify_construction,
    check_primitive,
    crossover,
    prime_count,
    sieve_primes,
    sum_primes,
    sum_semiprimes,
    sum_sequence,
    tail_estimate,
    term,
    verify,
)

__all__ = [
    "CLARK_BOUND",
    "ERDOS_BOUND",
    "PAPER_THRESHOLD",
    "PairMode",
    "PrimitivityViolation",
    "__version__",
    "certify_construction",
    "check_primitive",
    "crossover",
    "prime_count",
    "sieve_primes",
    "sum_primes",
    "sum_semiprimes",
    "sum_sequence",
    "tail_estimate",
    "term",
    "verify",
]
