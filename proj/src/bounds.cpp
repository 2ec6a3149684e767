#include "frob/bounds.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "frob/core.hpp"

namespace frob {

const char* bound_kind_name(BoundKind kind) {
    switch (kind) {
    case BoundKind::ErdosGraham: return "erdos-graham";
    case BoundKind::Selmer: return "selmer";
    case BoundKind::Vitek: return "vitek";
    case BoundKind::BeckOriginal: return "beck-original (ub2)";
    case BoundKind::BeckCorrected: return "beck-corrected (ub1)";
    case BoundKind::FukshanskyRobins: return "fukshansky-robins";
    case BoundKind::PairwiseSylvester: return "pairwise-sylvester";
    case BoundKind::OddGapLower: return "odd-gap-lower";
    }
    return "?";
}

double ub1_value(std::int64_t a1, std::int64_t a2, std::int64_t a3) {
    // Radicand (s(s + 2P) + 8q)/3 assembled in 128-bit so large entries
    // cannot overflow before the conversion to double.
    const int128 s = a1 + a2 + a3;
    const int128 p = static_cast<int128>(a1) * a2 * a3;
    const int128 q = static_cast<int128>(a1) * a2 +
                     static_cast<int128>(a2) * a3 +
                     static_cast<int128>(a3) * a1;
    const int128 radicand_times_3 = s * (s + 2 * p) + 8 * q;
    const double radicand = static_cast<double>(radicand_times_3) / 3.0;
    return 0.5 * (std::sqrt(radicand) - static_cast<double>(s));
}

double ub2_value(std::int64_t a1, std::int64_t a2, std::int64_t a3) {
    const int128 s = a1 + a2 + a3;
    const int128 p = static_cast<int128>(a1) * a2 * a3;
    const double radicand = static_cast<double>(p * s);
    return 0.5 * (std::sqrt(radicand) - static_cast<double>(s));
}

namespace {

std::string strong_failure_reason(const Instance& inst) {
    std::string reason = "requires pairwise coprime entries";
    if (inst.conditions().witness) {
        const auto [i, j] = *inst.conditions().witness;
        reason += ": gcd(a" + std::to_string(i + 1) + ", a" +
                  std::to_string(j + 1) + ") = " +
                  std::to_string(std::gcd(inst.entry(i), inst.entry(j))) +
                  " on (" + std::to_string(inst.entry(i)) + ", " +
                  std::to_string(inst.entry(j)) + ")";
    }
    return reason;
}

BoundResult beck_common(const Instance& inst, BoundKind kind) {
    BoundResult r{kind, 0.0, true, ""};
    if (inst.dimension() < 3) {
        r.applicable = false;
        r.value = std::numeric_limits<double>::quiet_NaN();
        r.reason = "needs at least three entries";
        return r;
    }
    const std::int64_t a1 = inst.entry(0);
    const std::int64_t a2 = inst.entry(1);
    const std::int64_t a3 = inst.entry(2);
    r.value = kind == BoundKind::BeckCorrected ? ub1_value(a1, a2, a3)
                                               : ub2_value(a1, a2, a3);
    if (!inst.strong_ok()) {
        r.applicable = false;
        r.reason = strong_failure_reason(inst) +
                   "; the bound can undercut F without them";
    }
    return r;
}

} // namespace

BoundResult ub_beck_corrected(const Instance& inst) {
    return beck_common(inst, BoundKind::BeckCorrected);
}

BoundResult ub_beck_original(const Instance& inst) {
    return beck_common(inst, BoundKind::BeckOriginal);
}

BoundResult ub_classical(const Instance& inst, BoundKind kind) {
    BoundResult r{kind, 0.0, true, ""};
    if (!inst.weak_ok()) {
        r.applicable = false;
        r.value = std::numeric_limits<double>::quiet_NaN();
        r.reason = "gcd > 1: no Frobenius number exists";
        return r;
    }
    const auto& a = inst.entries();
    const std::int64_t n = static_cast<std::int64_t>(a.size());
    switch (kind) {
    case BoundKind::ErdosGraham:
        r.value = static_cast<double>(2 * a[a.size() - 2] * (a.back() / n) -
                                      a.back());
        break;
    case BoundKind::Selmer:
        r.value = static_cast<double>(2 * a.back() * (a.front() / n) -
                                      a.front());
        // Survey-level applicability only; the original theorem carries
        // preconditions the survey drops, and the printed form undercuts F
        // on redundant systems (e.g. (4,7,8), where F = 17 > 12).
        r.reason = "original precondition not restated by the survey; "
                   "treat as reference when an entry is representable by "
                   "the others";
        break;
    case BoundKind::Vitek:
        if (n < 3) {
            r.applicable = false;
            r.value = std::numeric_limits<double>::quiet_NaN();
            r.reason = "needs at least three entries";
            return r;
        }
        r.value = 0.5 * static_cast<double>(a[1] - 1) *
                      static_cast<double>(a.back() - 2) -
                  1.0;
        break;
    case BoundKind::FukshanskyRobins: {
        double norm_sq = 0.0;
        for (std::int64_t ai : a)
            norm_sq += static_cast<double>(ai) * static_cast<double>(ai);
        double sum = 0.0;
        for (std::int64_t ai : a) {
            const double aid = static_cast<double>(ai);
            sum += aid * std::sqrt(norm_sq - aid * aid);
        }
        const double nd = static_cast<double>(n);
        const double coef = (nd - 1.0) * (nd - 1.0) *
                            std::exp(std::lgamma((nd + 1.0) / 2.0)) /
                            std::pow(std::numbers::pi, (nd - 1.0) / 2.0);
        r.value = std::floor(coef * sum + 1.0);
        break;
    }
    default:
        throw std::invalid_argument("ub_classical: unsupported bound kind");
    }
    return r;
}

BoundResult ub_pairwise_sylvester(const Instance& inst) {
    BoundResult r{BoundKind::PairwiseSylvester, 0.0, true, ""};
    const std::int64_t a1 = inst.entry(0);
    const std::int64_t a2 = inst.entry(1);
    r.value = static_cast<double>((a1 - 1) * (a2 - 1) - 1);
    if (!inst.strong_ok()) {
        r.applicable = false;
        r.reason = strong_failure_reason(inst);
    }
    return r;
}

BoundResult lower_odd_gap(const Instance& inst) {
    BoundResult r{BoundKind::OddGapLower, 0.0, true, ""};
    if (!inst.weak_ok()) {
        r.applicable = false;
        r.value = std::numeric_limits<double>::quiet_NaN();
        r.reason = "gcd > 1: no Frobenius number exists";
        return r;
    }
    r.value = static_cast<double>(smallest_odd(inst) - 2);
    return r;
}

std::vector<BoundResult> all_bounds(const Instance& inst) {
    return {
        ub_beck_corrected(inst),
        ub_beck_original(inst),
        ub_classical(inst, BoundKind::ErdosGraham),
        ub_classical(inst, BoundKind::Selmer),
        ub_classical(inst, BoundKind::Vitek),
        ub_classical(inst, BoundKind::FukshanskyRobins),
        ub_pairwise_sylvester(inst),
        lower_odd_gap(inst),
    };
}

} // namespace frob
