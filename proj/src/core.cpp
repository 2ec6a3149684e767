#include "frob/core.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace frob {

std::int64_t gcd_of(std::span<const std::int64_t> values) {
    if (values.empty())
        throw std::invalid_argument("gcd_of: empty list");
    std::int64_t g = 0;
    for (std::int64_t v : values) {
        if (v < 1)
            throw std::domain_error("gcd_of: values must be positive");
        g = std::gcd(g, v);
        if (g == 1)
            break;
    }
    return g;
}

Instance Instance::validate(std::vector<std::int64_t> entries) {
    if (entries.size() < 2)
        throw std::invalid_argument("instance needs at least two entries");
    for (std::int64_t v : entries) {
        if (v < 1)
            throw std::domain_error("instance entries must be positive");
    }
    std::sort(entries.begin(), entries.end());

    ConditionStatus cond;
    cond.weak = gcd_of(entries) == 1;
    cond.strong = true;
    for (std::size_t i = 0; i < entries.size() && cond.strong; ++i) {
        for (std::size_t j = i + 1; j < entries.size(); ++j) {
            if (std::gcd(entries[i], entries[j]) != 1) {
                cond.strong = false;
                cond.witness = {i, j};
                break;
            }
        }
    }
    return Instance(std::move(entries), cond);
}

std::int64_t smallest_odd(const Instance& inst) {
    for (std::int64_t v : inst.entries()) {
        if (v % 2 != 0)
            return v;
    }
    throw std::logic_error(
        "smallest_odd: all entries even, instance cannot satisfy gcd = 1");
}

} // namespace frob
