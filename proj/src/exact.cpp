#include "frob/exact.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace frob {

namespace {

constexpr std::int64_t max_modulus = 1'000'000;      // Dijkstra node cap
constexpr std::int64_t max_entry_width = 1'000'000'000'000; // keeps dist in i64
constexpr std::int64_t enumeration_budget = 10'000'000;

void require_weak(const Instance& inst, const char* op) {
    if (!inst.weak_ok())
        throw std::domain_error(std::string(op) +
                                ": gcd > 1, no Frobenius number exists");
}

} // namespace

AperyTable AperyTable::build(const Instance& inst) {
    require_weak(inst, "apery_table");
    const std::int64_t a1 = inst.entry(0);
    if (a1 < 2)
        throw std::invalid_argument("apery_table: modulus must be >= 2");
    if (a1 > max_modulus)
        throw resource_limit_error("apery_table: smallest entry exceeds node cap");
    if (inst.entries().back() > max_entry_width)
        throw resource_limit_error("apery_table: entries too wide for exact distances");

    // Steps mod a1; multiples of a1 are self-loops and contribute nothing.
    std::vector<std::int64_t> steps;
    for (std::int64_t a : inst.entries()) {
        if (a % a1 != 0)
            steps.push_back(a);
    }

    constexpr std::int64_t inf = std::numeric_limits<std::int64_t>::max();
    std::vector<std::int64_t> dist(static_cast<std::size_t>(a1), inf);
    dist[0] = 0;

    using Node = std::pair<std::int64_t, std::int64_t>; // (dist, residue)
    std::priority_queue<Node, std::vector<Node>, std::greater<>> heap;
    heap.emplace(0, 0);
    while (!heap.empty()) {
        auto [d, r] = heap.top();
        heap.pop();
        if (d != dist[static_cast<std::size_t>(r)])
            continue;
        for (std::int64_t a : steps) {
            const std::int64_t nr = (r + a) % a1;
            const std::int64_t nd = d + a;
            if (nd < dist[static_cast<std::size_t>(nr)]) {
                dist[static_cast<std::size_t>(nr)] = nd;
                heap.emplace(nd, nr);
            }
        }
    }

    AperyTable table;
    table.modulus = a1;
    table.minimal = std::move(dist);
    return table;
}

std::int64_t AperyTable::frobenius() const {
    const std::int64_t top = *std::max_element(minimal.begin(), minimal.end());
    return top - modulus;
}

std::int64_t frobenius_exact(const Instance& inst) {
    require_weak(inst, "frobenius_exact");
    if (inst.entry(0) == 1)
        return -1;
    return AperyTable::build(inst).frobenius();
}

std::int64_t frobenius_oracle(const Instance& inst, std::int64_t limit) {
    require_weak(inst, "frobenius_oracle");
    if (limit < 0)
        throw std::invalid_argument("frobenius_oracle: negative limit");
    if (limit > 2'000'000'000)
        throw resource_limit_error("frobenius_oracle: limit too large for sieve");

    std::vector<bool> reachable(static_cast<std::size_t>(limit) + 1, false);
    reachable[0] = true;
    for (std::int64_t b = 1; b <= limit; ++b) {
        for (std::int64_t a : inst.entries()) {
            if (a > b)
                break; // entries sorted
            if (reachable[static_cast<std::size_t>(b - a)]) {
                reachable[static_cast<std::size_t>(b)] = true;
                break;
            }
        }
    }
    for (std::int64_t b = limit; b >= 0; --b) {
        if (!reachable[static_cast<std::size_t>(b)])
            return b;
    }
    return -1;
}

std::int64_t sylvester_pair(std::int64_t a, std::int64_t b) {
    if (a < 1 || b < 1)
        throw std::domain_error("sylvester_pair: arguments must be positive");
    if (std::gcd(a, b) != 1)
        throw std::domain_error("sylvester_pair: arguments must be coprime");
    return a * b - a - b;
}

std::int64_t frobenius_star(const Instance& inst) {
    const std::int64_t f = frobenius_exact(inst);
    std::int64_t sum = 0;
    for (std::int64_t a : inst.entries())
        sum += a;
    return f + sum;
}

namespace {

// Counts coefficient tuples with every coefficient >= lo summing to rem.
// Loops the first n-1 coefficients, closes with a divisibility check.
std::int64_t count_tuples(std::span<const std::int64_t> entries,
                          std::size_t i, std::int64_t rem, std::int64_t lo,
                          std::int64_t& budget) {
    if (--budget < 0)
        throw resource_limit_error(
            "count_representations: enumeration budget exhausted");
    const std::int64_t a = entries[i];
    if (i + 1 == entries.size()) {
        return (rem >= lo * a && rem % a == 0) ? 1 : 0;
    }
    std::int64_t total = 0;
    for (std::int64_t m = lo; m * a <= rem; ++m)
        total += count_tuples(entries, i + 1, rem - m * a, lo, budget);
    return total;
}

} // namespace

RepCount count_representations(const Instance& inst, std::int64_t b) {
    require_weak(inst, "count_representations");
    RepCount result;
    result.target = b;
    if (b < 0)
        return result;
    std::int64_t budget = enumeration_budget;
    result.nonnegative_count =
        count_tuples(inst.entries(), 0, b, 0, budget);
    result.positive_count = count_tuples(inst.entries(), 0, b, 1, budget);
    return result;
}

} // namespace frob
