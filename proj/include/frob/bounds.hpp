#ifndef FROB_BOUNDS_HPP
#define FROB_BOUNDS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "frob/core.hpp"

namespace frob {

enum class BoundKind {
    ErdosGraham,
    Selmer,
    Vitek,
    BeckOriginal,     // UB2
    BeckCorrected,    // UB1
    FukshanskyRobins,
    PairwiseSylvester,
    OddGapLower,
};

const char* bound_kind_name(BoundKind kind);

// One evaluated bound. The value is always computed when the formula is
// defined on the input, even when `applicable` is false: reproducing the
// counterexample instances requires seeing what the formula yields where
// its prerequisites fail. applicable = false always carries a reason.
struct BoundResult {
    BoundKind kind;
    double value = 0.0;
    bool applicable = false;
    std::string reason;
};

// Raw three-entry forms, defined for any positive a1 <= a2 <= a3. These are
// the formulas feeding the simulation and enumeration paths; the Instance
// overloads below add applicability checks on top.
double ub1_value(std::int64_t a1, std::int64_t a2, std::int64_t a3);
double ub2_value(std::int64_t a1, std::int64_t a2, std::int64_t a3);

// Corrected Beck-style bound (UB1), on the three smallest entries:
//   1/2 (sqrt((1/3)s(s + 2P) + (8/3)q) - s)
// with s = a1+a2+a3, P = a1 a2 a3, q = a1a2 + a2a3 + a3a1.
// Needs n >= 3 and pairwise coprimality.
BoundResult ub_beck_corrected(const Instance& inst);

// Original Beck et al. bound (UB2): 1/2 (sqrt(P s) - s). Same prerequisites;
// fails without pairwise coprimality (see the counterexample verifier).
BoundResult ub_beck_original(const Instance& inst);

// The four classical bounds. Applicability follows the survey listing
// (weak condition + sorted; Vitek needs n >= 3); the original sources
// impose preconditions the survey does not restate, so Selmer results
// carry a caveat in `reason` even when marked applicable -- the printed
// formula undercuts F on redundant systems such as (4,7,8).
BoundResult ub_classical(const Instance& inst, BoundKind kind);

// Sylvester pair bound (a1-1)(a2-1) - 1; valid under pairwise coprimality.
BoundResult ub_pairwise_sylvester(const Instance& inst);

// Parity lower bound o1 - 2.
BoundResult lower_odd_gap(const Instance& inst);

// Every bound in declaration order (the CLI's `--kind all`).
std::vector<BoundResult> all_bounds(const Instance& inst);

} // namespace frob

#endif
