#ifndef FROB_ANALYSIS_HPP
#define FROB_ANALYSIS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frob/core.hpp"

namespace frob {

using Triple = std::array<std::int64_t, 3>;

// One compared triple. gap = ub2 - ub1, so positive means the corrected
// bound is the tighter one.
struct ComparisonRecord {
    std::int64_t a1 = 0, a2 = 0, a3 = 0;
    double ub1 = 0.0;
    double ub2 = 0.0;
    double gap = 0.0;
    std::int64_t sum = 0;
    std::int64_t prod12 = 0;
    std::int64_t prod123 = 0;
    std::optional<std::int64_t> frobenius;

    static ComparisonRecord make(std::int64_t a1, std::int64_t a2,
                                 std::int64_t a3,
                                 std::optional<std::int64_t> frobenius = {});
};

// UB2 - UB1 on a sorted triple.
double tightness_gap(std::int64_t a1, std::int64_t a2, std::int64_t a3);

// Exact-integer form of the radicand comparison: UB2 <= UB1 iff
//   a1 a2 a3 (a1+a2+a3) <= a1^2 + a2^2 + a3^2 + 10(a1a2 + a2a3 + a1a3).
bool ub2_not_worse(std::int64_t a1, std::int64_t a2, std::int64_t a3);

// LHS - RHS of the inequality above, evaluated in 128-bit. Negative means
// UB2 is strictly sharper, zero means the bounds coincide.
int128 condition9_margin(std::int64_t a1, std::int64_t a2, std::int64_t a3);

struct EnumerationOptions {
    // Include non-strictly-increasing triples. Pairwise coprimality then
    // admits exactly the (1,1,k) family, for which UB2 < UB1 at every k;
    // the scan for that family is cut off at max_a3_for_open_families.
    bool allow_repeats = false;
    std::int64_t max_a3_for_open_families = 100;
};

struct ExceptionalTriples {
    std::vector<Triple> sharper; // UB2 < UB1 strictly
    std::vector<Triple> ties;    // UB2 == UB1 exactly

    // sharper + ties merged in lexicographic order. This is the set the
    // enumeration theorem tabulates: its published list counts the tie
    // (1,2,25), where both sides of the inequality equal 1400.
    std::vector<Triple> all() const;
};

// Scans strictly increasing pairwise-coprime triples with a1 a2 <= 32
// (necessary for UB2 <= UB1); for each pair a3 runs to the analytic
// crossover of the quadratic margin plus a safety margin.
ExceptionalTriples enumerate_exceptional_triples(EnumerationOptions opts = {});

// The 30 triples tabulated by the enumeration theorem, lexicographic.
const std::vector<Triple>& theorem4_list();

// Whether a sorted pairwise-coprime triple is a known UB2-not-worse case:
// a member of the tabulated list, or of the (1,1,k) family the published
// table omits.
bool is_known_exceptional(std::int64_t a1, std::int64_t a2, std::int64_t a3);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// The two counterexamples showing UB2 needs pairwise coprimality:
//  (i)  F(3,6,19) = 35 exceeds UB2(3,6,19) = (6 sqrt(266) - 28)/2;
//  (ii) UB2 over (2,4,6) = 6 while F(2,4,6,9) = 7.
std::vector<CheckResult> verify_counterexamples();

// UB2 against the 15 printed values of the case analysis, tolerance 1e-4.
std::vector<CheckResult> verify_theorem6_table();

// Small-a3 approximation of the gap: (1/2) a1 a2 (sqrt(3) - sqrt(2 + 11/(a1 a2))).
// Accurate when all three entries are comparable.
double approx_gap(std::int64_t a1, std::int64_t a2);

} // namespace frob

#endif
