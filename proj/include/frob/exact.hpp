#ifndef FROB_EXACT_HPP
#define FROB_EXACT_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "frob/core.hpp"

namespace frob {

// Thrown when an exact computation exceeds its configured search budget.
struct resource_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Per-residue minimal representable values modulo the smallest entry.
// minimal[r] is the least b >= 0 with b ≡ r (mod modulus) that is a
// nonnegative combination of the entries; F = max_r minimal[r] - modulus.
struct AperyTable {
    std::int64_t modulus = 0;
    std::vector<std::int64_t> minimal;

    // Dijkstra over residue classes mod a1; edge r -> (r + ai) mod a1 with
    // weight ai. Requires weak_ok (all residues reachable) and a1 >= 2.
    static AperyTable build(const Instance& inst);

    std::int64_t frobenius() const;
};

// Largest integer with no nonnegative representation. Returns -1 when
// a1 = 1. Throws std::domain_error when gcd > 1 (no Frobenius number).
std::int64_t frobenius_exact(const Instance& inst);

// Independent dynamic-programming sieve: largest non-representable
// b <= limit, or -1 if every b in [0, limit] is representable. Callers
// must supply a limit known to dominate F; the library never guesses one
// (no bound free of the largest entry exists).
std::int64_t frobenius_oracle(const Instance& inst, std::int64_t limit);

// n = 2 closed form a*b - a - b. Requires gcd(a, b) = 1.
std::int64_t sylvester_pair(std::int64_t a, std::int64_t b);

// Largest integer with no strictly positive representation,
// F*(a) = F(a) + a1 + ... + an.
std::int64_t frobenius_star(const Instance& inst);

// Representation counts of a target value.
struct RepCount {
    std::int64_t target = 0;
    std::int64_t positive_count = 0;    // all coefficients >= 1
    std::int64_t nonnegative_count = 0; // all coefficients >= 0
};

// Exact enumeration over coefficient ranges. Desk-scale only: aborts with
// resource_limit_error after 10^7 visited nodes. Negative b counts as zero.
RepCount count_representations(const Instance& inst, std::int64_t b);

} // namespace frob

#endif
