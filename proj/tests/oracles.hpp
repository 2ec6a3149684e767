#ifndef FROB_TEST_ORACLES_HPP
#define FROB_TEST_ORACLES_HPP

// Test-side reference implementations. These deliberately avoid the
// library's algorithms (Dijkstra residue graph, bounded recursion): the
// sieve is a plain reachability DP and the denumerant a convolution DP,
// so agreement is a genuine cross-check and the frozen expected values in
// the test files were produced by these.

#include <cstdint>
#include <span>
#include <vector>

namespace frob::testing {

inline std::vector<bool> sieve_reachable(std::span<const std::int64_t> entries,
                                         std::int64_t limit) {
    std::vector<bool> reach(static_cast<std::size_t>(limit) + 1, false);
    reach[0] = true;
    for (std::int64_t b = 1; b <= limit; ++b) {
        for (std::int64_t a : entries) {
            if (a <= b && reach[static_cast<std::size_t>(b - a)]) {
                reach[static_cast<std::size_t>(b)] = true;
                break;
            }
        }
    }
    return reach;
}

inline std::int64_t sieve_frobenius(std::span<const std::int64_t> entries,
                                    std::int64_t limit) {
    const auto reach = sieve_reachable(entries, limit);
    for (std::int64_t b = limit; b >= 0; --b)
        if (!reach[static_cast<std::size_t>(b)])
            return b;
    return -1;
}

// Strictly-positive variant: every entry must be used at least once.
inline std::int64_t sieve_frobenius_star(std::span<const std::int64_t> entries,
                                         std::int64_t limit) {
    std::vector<bool> reach(static_cast<std::size_t>(limit) + 1, false);
    reach[0] = true;
    for (std::int64_t a : entries) {
        std::vector<bool> next(static_cast<std::size_t>(limit) + 1, false);
        for (std::int64_t x = 0; x <= limit; ++x) {
            if (!reach[static_cast<std::size_t>(x)])
                continue;
            for (std::int64_t v = x + a; v <= limit; v += a)
                next[static_cast<std::size_t>(v)] = true;
        }
        reach = std::move(next);
    }
    for (std::int64_t b = limit; b >= 0; --b)
        if (!reach[static_cast<std::size_t>(b)])
            return b;
    return -1;
}

// Number of nonnegative coefficient tuples per target in [0, limit].
inline std::vector<std::int64_t>
denumerant_table(std::span<const std::int64_t> entries, std::int64_t limit) {
    std::vector<std::int64_t> count(static_cast<std::size_t>(limit) + 1, 0);
    count[0] = 1;
    for (std::int64_t a : entries)
        for (std::int64_t b = a; b <= limit; ++b)
            count[static_cast<std::size_t>(b)] +=
                count[static_cast<std::size_t>(b - a)];
    return count;
}

} // namespace frob::testing

#endif
