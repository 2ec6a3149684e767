#include "frob/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "frob/bounds.hpp"
#include "frob/exact.hpp"

namespace frob {

ComparisonRecord ComparisonRecord::make(std::int64_t a1, std::int64_t a2,
                                        std::int64_t a3,
                                        std::optional<std::int64_t> frobenius) {
    ComparisonRecord rec;
    rec.a1 = a1;
    rec.a2 = a2;
    rec.a3 = a3;
    rec.ub1 = ub1_value(a1, a2, a3);
    rec.ub2 = ub2_value(a1, a2, a3);
    rec.gap = rec.ub2 - rec.ub1;
    rec.sum = a1 + a2 + a3;
    rec.prod12 = a1 * a2;
    rec.prod123 = a1 * a2 * a3;
    rec.frobenius = frobenius;
    return rec;
}

double tightness_gap(std::int64_t a1, std::int64_t a2, std::int64_t a3) {
    return ub2_value(a1, a2, a3) - ub1_value(a1, a2, a3);
}

int128 condition9_margin(std::int64_t a1, std::int64_t a2, std::int64_t a3) {
    const int128 lhs = static_cast<int128>(a1) * a2 * a3 * (a1 + a2 + a3);
    const int128 rhs = static_cast<int128>(a1) * a1 +
                       static_cast<int128>(a2) * a2 +
                       static_cast<int128>(a3) * a3 +
                       10 * (static_cast<int128>(a1) * a2 +
                             static_cast<int128>(a2) * a3 +
                             static_cast<int128>(a1) * a3);
    return lhs - rhs;
}

bool ub2_not_worse(std::int64_t a1, std::int64_t a2, std::int64_t a3) {
    return condition9_margin(a1, a2, a3) <= 0;
}

namespace {

bool pairwise_coprime(std::int64_t a, std::int64_t b, std::int64_t c) {
    return std::gcd(a, b) == 1 && std::gcd(a, c) == 1 && std::gcd(b, c) == 1;
}

// Largest a3 at which the margin quadratic
//   (p-1) a3^2 + (a1+a2)(p-10) a3 - (a1^2 + a2^2 + 10p),   p = a1 a2,
// can still be nonpositive. For p >= 2 the leading coefficient is
// positive, so the positive root bounds the scan.
std::int64_t scan_limit(std::int64_t a1, std::int64_t a2) {
    const double p = static_cast<double>(a1) * static_cast<double>(a2);
    const double qa = p - 1.0;
    const double qb = static_cast<double>(a1 + a2) * (p - 10.0);
    const double qc = -(static_cast<double>(a1) * a1 +
                        static_cast<double>(a2) * a2 + 10.0 * p);
    const double disc = qb * qb - 4.0 * qa * qc;
    const double root = (-qb + std::sqrt(std::max(disc, 0.0))) / (2.0 * qa);
    return static_cast<std::int64_t>(std::ceil(root)) + 10;
}

} // namespace

ExceptionalTriples enumerate_exceptional_triples(EnumerationOptions opts) {
    ExceptionalTriples out;
    for (std::int64_t a1 = 1; a1 * a1 <= 32; ++a1) {
        const std::int64_t first_a2 = opts.allow_repeats ? a1 : a1 + 1;
        for (std::int64_t a2 = first_a2; a1 * a2 <= 32; ++a2) {
            if (std::gcd(a1, a2) != 1)
                continue;
            const std::int64_t limit = a1 * a2 == 1
                                           ? opts.max_a3_for_open_families
                                           : scan_limit(a1, a2);
            const std::int64_t first_a3 = opts.allow_repeats ? a2 : a2 + 1;
            for (std::int64_t a3 = first_a3; a3 <= limit; ++a3) {
                if (!pairwise_coprime(a1, a2, a3))
                    continue;
                const int128 margin = condition9_margin(a1, a2, a3);
                if (margin < 0)
                    out.sharper.push_back({a1, a2, a3});
                else if (margin == 0)
                    out.ties.push_back({a1, a2, a3});
            }
        }
    }
    return out;
}

std::vector<Triple> ExceptionalTriples::all() const {
    std::vector<Triple> merged = sharper;
    merged.insert(merged.end(), ties.begin(), ties.end());
    std::sort(merged.begin(), merged.end());
    return merged;
}

const std::vector<Triple>& theorem4_list() {
    static const std::vector<Triple> list = {
        {1, 2, 3},  {1, 2, 5},  {1, 2, 7},  {1, 2, 9},  {1, 2, 11},
        {1, 2, 13}, {1, 2, 15}, {1, 2, 17}, {1, 2, 19}, {1, 2, 21},
        {1, 2, 23}, {1, 2, 25}, {1, 3, 4},  {1, 3, 5},  {1, 3, 7},
        {1, 3, 8},  {1, 3, 10}, {1, 3, 11}, {1, 3, 13}, {1, 3, 14},
        {1, 4, 5},  {1, 4, 7},  {1, 4, 9},  {1, 4, 11}, {1, 5, 6},
        {1, 5, 7},  {1, 5, 8},  {1, 5, 9},  {1, 6, 7},  {2, 3, 5},
    };
    return list;
}

bool is_known_exceptional(std::int64_t a1, std::int64_t a2, std::int64_t a3) {
    if (a1 == 1 && a2 == 1)
        return true; // margin is -18 a3 - 12 < 0 for every (1,1,k)
    const auto& list = theorem4_list();
    return std::binary_search(list.begin(), list.end(), Triple{a1, a2, a3});
}

namespace {

std::string triple_str(std::int64_t a1, std::int64_t a2, std::int64_t a3) {
    return "(" + std::to_string(a1) + "," + std::to_string(a2) + "," +
           std::to_string(a3) + ")";
}

} // namespace

std::vector<CheckResult> verify_counterexamples() {
    std::vector<CheckResult> checks;

    {
        // (i) strong conditions are needed for n = 3.
        const auto inst = Instance::validate({3, 6, 19});
        const std::int64_t f = frobenius_exact(inst);
        const double ub2 = ub2_value(3, 6, 19);
        CheckResult c;
        c.name = "ub2-fails-without-pairwise-coprimality (3,6,19)";
        c.pass = f == 35 && ub2 > 34.92851 && ub2 < 34.92852 &&
                 static_cast<double>(f) > ub2;
        std::ostringstream detail;
        detail << "F = " << f << ", ub2 = " << ub2
               << ", margin = " << static_cast<double>(f) - ub2;
        c.detail = detail.str();
        checks.push_back(std::move(c));
    }
    {
        // (ii) weak conditions also fail for n >= 4: (2,4,6,9).
        const auto inst = Instance::validate({2, 4, 6, 9});
        const double ub2 = ub2_value(2, 4, 6);
        const double lower = lower_odd_gap(inst).value;
        const std::int64_t f = frobenius_oracle(inst, 100);
        CheckResult c;
        c.name = "ub2-fails-under-weak-conditions (2,4,6,9)";
        c.pass = ub2 == 6.0 && lower == 7.0 && f == 7 &&
                 static_cast<double>(f) > ub2;
        std::ostringstream detail;
        detail << "ub2(2,4,6) = " << ub2 << ", o1 - 2 = " << lower
               << ", F = " << f;
        c.detail = detail.str();
        checks.push_back(std::move(c));
    }
    return checks;
}

std::vector<CheckResult> verify_theorem6_table() {
    struct Case {
        Triple triple;
        double printed;
    };
    static const Case cases[] = {
        {{2, 5, 7}, 8.652476},    {{2, 7, 9}, 14.811762},
        {{2, 9, 11}, 22.0},       {{2, 11, 13}, 30.116122},
        {{2, 13, 15}, 39.083269}, {{2, 15, 17}, 48.8407169},
        {{3, 4, 5}, 7.416408},    {{3, 5, 7}, 12.343135},
        {{3, 7, 8}, 18.495454},   {{3, 8, 11}, 27.105118},
        {{3, 10, 11}, 32.497191}, {{4, 5, 7}, 15.6643191},
        {{4, 7, 9}, 25.496479},   {{5, 6, 7}, 21.740852},
        {{2, 3, 5}, 3.660254},
    };
    std::vector<CheckResult> checks;
    for (const auto& cs : cases) {
        const double mine = ub2_value(cs.triple[0], cs.triple[1], cs.triple[2]);
        CheckResult c;
        c.name = "ub2-table " + triple_str(cs.triple[0], cs.triple[1],
                                           cs.triple[2]);
        c.pass = std::abs(mine - cs.printed) < 1e-4;
        std::ostringstream detail;
        detail << "computed " << mine << " vs tabulated " << cs.printed;
        c.detail = detail.str();
        checks.push_back(std::move(c));
    }
    return checks;
}

double approx_gap(std::int64_t a1, std::int64_t a2) {
    const double p = static_cast<double>(a1) * static_cast<double>(a2);
    return 0.5 * p * (std::sqrt(3.0) - std::sqrt(2.0 + 11.0 / p));
}

} // namespace frob
