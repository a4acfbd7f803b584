#include "gsp4/lifts.hpp"

#include <algorithm>

namespace gsp4 {

const char* to_string(LiftPlan::Certificate c) {
    switch (c) {
        case LiftPlan::Certificate::Ordinary: return "ordinary";
        case LiftPlan::Certificate::InducedShortRange: return "induced-short-range";
        case LiftPlan::Certificate::Composite: return "composite";
    }
    return "?";
}

std::int64_t PlanBlock::fold(Prime p) const {
    const std::int64_t pv = p.value();
    switch (level) {
        case 1:
            return mod_reduce(weights.at(0), pv - 1);
        case 2:
            // (hi, lo) reduces to the level-2 exponent lo + hi*p.
            return mod_reduce(weights.at(1) + weights.at(0) * pv, pv * pv - 1);
        case 4: {
            std::int64_t v = 0, pw = 1;
            for (int i = 0; i < 4; ++i) {
                v = mod_reduce(v + mod_reduce(weights.at(i), p.level_modulus(4)) * pw,
                               p.level_modulus(4));
                pw = mod_reduce(pw * pv, p.level_modulus(4));
            }
            return v;
        }
        default:
            throw validation_error("plan block with invalid level");
    }
}

InertiaPattern LiftPlan::reduction(Prime p) const {
    std::vector<PatternSlot> slots;
    for (const auto& b : structure) slots.push_back({b.level, b.fold(p)});
    return InertiaPattern(p, std::move(slots));
}

TwoDimLift lift_2dim_irred(Prime p, std::int64_t a, std::int64_t b, std::int64_t twist) {
    if (!(0 <= b && b < a && a < p.value()))
        throw validation_error("induced 2-dim data requires 0 <= b < a < p");
    return TwoDimLift{{a + twist, b + twist}, LiftPlan::Certificate::InducedShortRange};
}

std::array<std::int64_t, 2> lift_2dim_red(Prime p, std::int64_t a, std::int64_t b,
                                          ExtensionFlag flag) {
    if (a < 0 || a > p.value() - 2 || b < 0 || b > p.value() - 2)
        throw validation_error("residues must lie in [0, p-2]");
    require_flag_legal(p, flag, a - b, "extension class");
    if (flag == ExtensionFlag::TresRamifiee) return {b + p.value(), b};
    if (a > b) return {a, b};
    return {a + p.value() - 1, b};
}

ThreeDimLift lift_3dim(Prime p, ThreeDimCase which, const ThreeDimData& data) {
    const std::int64_t m = p.residue_modulus();
    if (data.a < 0 || data.a > m - 1 || data.b < 0 || data.b > m - 1 || data.c < 0 ||
        data.c > m - 1)
        throw validation_error("residues must lie in [0, p-2]");

    if (which == ThreeDimCase::Red1) {
        require_flag_legal(p, data.upper, data.a - data.b, "upper class");
        require_flag_legal(p, data.lower, data.b - data.c, "lower class");
        const std::int64_t r1 = lift_twist(p, {make_char(p, 1, data.a - data.b), data.upper}).r;
        const std::int64_t r2 = lift_twist(p, {make_char(p, 1, data.b - data.c), data.lower}).r;
        std::int64_t a2 = 0;
        while (data.b + a2 * m + r2 <= data.c) ++a2;
        const std::int64_t w2 = data.b + a2 * m + r2;
        std::int64_t a1 = 0;
        while (data.a + a1 * m + r1 <= w2) ++a1;
        return ThreeDimLift{{data.a + a1 * m + r1, w2, data.c}, a1, a2};
    }

    // Red2: induced block with exponent b + ap over a character of residue c.
    if (!(data.b < data.a))
        throw validation_error("induced block requires b < a");
    require_flag_legal(p, data.lower, data.c, "character class");
    const std::int64_t r = lift_twist(p, {make_char(p, 1, data.c), data.lower}).r;
    std::int64_t a2 = 0;
    while (data.c + a2 * m + r <= 0) ++a2;
    const std::int64_t w3 = data.c + a2 * m + r;
    std::int64_t a1 = 0;
    while (data.b + a1 * m <= w3) ++a1;
    return ThreeDimLift{{data.a + a1 * m, data.b + a1 * m, w3}, a1, a2};
}

std::array<std::int64_t, 4> frobenius_normalize(Prime p, const std::array<std::int64_t, 4>& digits) {
    std::array<std::int64_t, 4> d = digits;
    for (int i = 0; i < 4; ++i) {
        if (d[0] + d[2] >= d[1] + d[3]) return d;
        d = {d[3], d[0], d[1], d[2]};  // digit vector of p*a
    }
    throw validation_error("digit vector cannot be Frobenius-normalized");
}

DigitSymmetrization symmetrize_digits(Prime p, const std::array<std::int64_t, 4>& digits) {
    const std::int64_t pv = p.value();
    for (std::int64_t d : digits)
        if (d < 0 || d > pv - 1)
            throw validation_error("digit out of range [0, p-1]: " + std::to_string(d));
    std::int64_t value = 0, pw = 1;
    for (int i = 0; i < 4; ++i) {
        value += digits[i] * pw;
        pw *= pv;
    }
    if (value % (pv + 1) != 0)
        throw validation_error("symplectic digit data requires the exponent = 0 mod p+1");
    if (value % (pv * pv + 1) == 0)
        throw validation_error("digit data requires the exponent != 0 mod p^2+1");

    const std::int64_t diff = digits[0] + digits[2] - digits[1] - digits[3];
    if (diff == 0)
        return DigitSymmetrization{digits, digits, 0};
    if (diff == pv + 1) {
        std::array<std::int64_t, 4> b = {digits[1] + digits[3] - digits[2] + 1, digits[1] + 1,
                                         digits[2], digits[3]};
        return DigitSymmetrization{digits, b, 1};
    }
    throw validation_error("digit sums differ by " + std::to_string(diff) +
                           "; only 0 or p+1 occur for normalized symplectic data");
}

std::int64_t min_slot_gap(Prime p, ExtensionFlag flag, std::int64_t ratio_residue) {
    const std::int64_t m = p.residue_modulus();
    const std::int64_t res = mod_reduce(ratio_residue, m);
    require_flag_legal(p, flag, res, "slot");
    const bool forced =
        flag == ExtensionFlag::TresRamifiee || flag == ExtensionFlag::Ramified;
    if (res == 0) return m;  // positivity forces a full raise either way
    return forced ? res + m : res;
}

// --- per-type planning --------------------------------------------------------

namespace {

std::array<std::int64_t, 4> sorted_desc(std::array<std::int64_t, 4> v) {
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

bool strictly_decreasing(const std::array<std::int64_t, 4>& v) {
    return v[0] > v[1] && v[1] > v[2] && v[2] > v[3];
}

LiftPlan make_borel_plan(Prime p, std::int64_t A, std::int64_t B, std::int64_t C,
                         const BorelData& bd) {
    LiftPlan plan;
    plan.ht = {A + B + C, A + C, B + C, C};
    plan.certificate = LiftPlan::Certificate::Ordinary;
    plan.regular = strictly_decreasing(plan.ht);
    plan.structure = {{1, {A + B + C}}, {1, {A + C}}, {1, {B + C}}, {1, {C}}};
    plan.ledger = {{"a_weight", A},
                   {"b_weight", B},
                   {"central", C},
                   {"r_tau0", lift_twist(p, {make_char(p, 1, bd.y), bd.tau0}).r},
                   {"r_tau1", lift_twist(p, {make_char(p, 1, bd.x - bd.y), bd.tau1}).r}};
    return plan;
}

LiftPlan make_siegel_plan(Prime p, std::int64_t a1_raise, std::int64_t C, const SiegelData& sd) {
    const std::int64_t hi = sd.x + a1_raise, lo = sd.y + a1_raise;
    LiftPlan plan;
    plan.ht = {hi + lo + C, hi + C, lo + C, C};
    plan.certificate = LiftPlan::Certificate::Composite;
    plan.regular = strictly_decreasing(plan.ht);
    plan.structure = {{1, {hi + lo + C}}, {2, {hi + C, lo + C}}, {1, {C}}};
    plan.ledger = {{"block_raise", a1_raise / p.residue_modulus()}, {"central", C}};
    return plan;
}

LiftPlan make_klingen_plan(Prime p, std::int64_t raise, std::int64_t S, const KlingenData& kd) {
    const std::int64_t b_hi = kd.x + raise, b_lo = kd.y + raise;
    const std::int64_t d_hi = S - b_lo, d_lo = S - b_hi;
    LiftPlan plan;
    plan.ht = sorted_desc({b_hi, b_lo, d_hi, d_lo});
    plan.certificate = LiftPlan::Certificate::Composite;
    plan.regular = strictly_decreasing(plan.ht);
    plan.structure = {{2, {b_hi, b_lo}}, {2, {d_hi, d_lo}}};
    plan.ledger = {{"block_raise", raise / p.residue_modulus()},
                   {"similitude_weight", S},
                   {"similitude_raise", (S - kd.w - 3) / p.residue_modulus()}};
    return plan;
}

LiftPlan make_endoscopic_plan(Prime p, std::int64_t shift, const EndoscopicData& ed) {
    const bool reindexed = ed.a + ed.b != ed.c + ed.d;
    const std::int64_t hi2 = (reindexed ? ed.d + p.value() : ed.c) + shift;
    const std::int64_t lo2 = (reindexed ? ed.c - 1 : ed.d) + shift;
    LiftPlan plan;
    plan.ht = sorted_desc({ed.a + shift, ed.b + shift, hi2, lo2});
    plan.certificate = LiftPlan::Certificate::Composite;
    plan.regular = strictly_decreasing(plan.ht);
    plan.structure = {{2, {ed.a + shift, ed.b + shift}}, {2, {hi2, lo2}}};
    plan.ledger = {{"shift", shift}, {"reindexed", reindexed ? 1 : 0}};
    return plan;
}

LiftPlan make_irreducible_plan(Prime p, const std::array<std::int64_t, 4>& b, int case_index,
                               int rotation, std::int64_t shift) {
    std::array<std::int64_t, 4> w = b;
    for (auto& v : w) v += shift;
    LiftPlan plan;
    plan.ht = sorted_desc(w);
    plan.certificate = LiftPlan::Certificate::InducedShortRange;
    plan.regular = strictly_decreasing(plan.ht);
    plan.structure = {{4, {w[0], w[1], w[2], w[3]}}};
    plan.ledger = {{"case", case_index},
                   {"rotation", rotation},
                   {"twist", shift / p.residue_modulus()}};
    return plan;
}

// All Frobenius-normalized digit symmetrizations of the level-4 exponent.
struct IrredCandidate {
    DigitSymmetrization sym;
    int rotation;
};

std::vector<IrredCandidate> irreducible_candidates(Prime p, std::int64_t exponent) {
    std::vector<IrredCandidate> out;
    std::array<std::int64_t, 4> d{};
    {
        std::int64_t e = mod_reduce(exponent, p.level_modulus(4));
        for (int i = 0; i < 4; ++i) {
            d[i] = e % p.value();
            e /= p.value();
        }
    }
    for (int rot = 0; rot < 4; ++rot) {
        if (d[0] + d[2] >= d[1] + d[3]) out.push_back({symmetrize_digits(p, d), rot});
        d = {d[3], d[0], d[1], d[2]};
    }
    return out;
}

bool plan_less(const LiftPlan& a, const LiftPlan& b) {
    if (a.regular != b.regular) return a.regular;  // regular plans first
    return a.ht < b.ht;
}

}  // namespace

LiftPlan lift_gsp4(const LocalRepresentation& rep) {
    const Prime& p = rep.prime();
    const std::int64_t m = p.residue_modulus();

    switch (classify(rep)) {
        case RepType::BorelOrdinary: {
            const auto& bd = std::get<BorelData>(rep.data());
            const std::int64_t B = min_slot_gap(p, bd.tau0, bd.y);
            const std::int64_t G = min_slot_gap(p, bd.tau1, bd.x - bd.y);
            return make_borel_plan(p, B + G, B, rep.central_exponent(), bd);
        }
        case RepType::SiegelOrdinary: {
            const auto& sd = std::get<SiegelData>(rep.data());
            const std::int64_t raise = sd.y == 0 ? m : 0;
            return make_siegel_plan(p, raise, rep.central_exponent(), sd);
        }
        case RepType::KlingenOrdinary: {
            const auto& kd = std::get<KlingenData>(rep.data());
            std::optional<LiftPlan> best;
            for (std::int64_t a1 = 0; a1 <= 4; ++a1)
                for (std::int64_t t = 0; t <= 4; ++t) {
                    LiftPlan plan = make_klingen_plan(p, a1 * m, kd.w + 3 + t * m, kd);
                    if (!best || plan_less(plan, *best)) best = plan;
                }
            return *best;
        }
        case RepType::Endoscopic: {
            const auto& ed = std::get<EndoscopicData>(rep.data());
            return make_endoscopic_plan(p, rep.central_exponent(), ed);
        }
        case RepType::Irreducible: {
            const auto& id = std::get<IrreducibleData>(rep.data());
            std::optional<LiftPlan> best;
            for (const auto& cand : irreducible_candidates(p, id.exponent)) {
                LiftPlan plan =
                    make_irreducible_plan(p, cand.sym.output, cand.sym.case_index, cand.rotation, 0);
                if (!best || plan_less(plan, *best)) best = plan;
            }
            return *best;
        }
    }
    throw validation_error("unclassifiable representation");
}

std::optional<LiftPlan> plan_with_ht(const LocalRepresentation& rep,
                                     const std::array<std::int64_t, 4>& ht) {
    const Prime& p = rep.prime();
    const std::int64_t m = p.residue_modulus();
    if (!strictly_decreasing(ht)) return std::nullopt;
    if (ht[0] + ht[3] != ht[1] + ht[2]) return std::nullopt;

    const InertiaPattern target = inertia_pattern(rep);
    auto verified = [&](LiftPlan plan) -> std::optional<LiftPlan> {
        if (plan.ht != ht) return std::nullopt;
        if (!(plan.reduction(p) == target)) return std::nullopt;
        return plan;
    };

    switch (classify(rep)) {
        case RepType::BorelOrdinary: {
            const auto& bd = std::get<BorelData>(rep.data());
            const std::int64_t C = ht[3], A = ht[1] - C, B = ht[2] - C;
            if (!(A > B && B > 0)) return std::nullopt;
            if (mod_reduce(A - bd.x, m) != 0 || mod_reduce(B - bd.y, m) != 0) return std::nullopt;
            if (mod_reduce(C - rep.central_exponent(), m) != 0) return std::nullopt;
            if (B < min_slot_gap(p, bd.tau0, bd.y)) return std::nullopt;
            if (A - B < min_slot_gap(p, bd.tau1, bd.x - bd.y)) return std::nullopt;
            return verified(make_borel_plan(p, A, B, C, bd));
        }
        case RepType::SiegelOrdinary: {
            const auto& sd = std::get<SiegelData>(rep.data());
            const std::int64_t C = ht[3];
            if (mod_reduce(C - rep.central_exponent(), m) != 0) return std::nullopt;
            if (ht[1] - ht[2] != sd.x - sd.y) return std::nullopt;
            if (mod_reduce(ht[2] - C - sd.y, m) != 0) return std::nullopt;
            return verified(make_siegel_plan(p, ht[2] - C - sd.y, C, sd));
        }
        case RepType::KlingenOrdinary: {
            const auto& kd = std::get<KlingenData>(rep.data());
            const std::int64_t S = ht[0] + ht[3];
            if (mod_reduce(S - (kd.w + 3), m) != 0) return std::nullopt;
            for (std::int64_t top : ht) {  // any weight may carry the input block's top
                const std::int64_t raise = top - kd.x;
                if (mod_reduce(raise, m) != 0) continue;
                if (auto plan = verified(make_klingen_plan(p, raise, S, kd))) return plan;
            }
            return std::nullopt;
        }
        case RepType::Endoscopic: {
            const auto& ed = std::get<EndoscopicData>(rep.data());
            const bool reindexed = ed.a + ed.b != ed.c + ed.d;
            const std::int64_t base2_hi = reindexed ? ed.d + p.value() : ed.c;
            const std::pair<std::int64_t, std::int64_t> pairs[2] = {{ht[0], ht[3]}, {ht[1], ht[2]}};
            for (int i = 0; i < 2; ++i) {
                const auto& p1 = pairs[i];
                const auto& p2 = pairs[1 - i];
                const std::int64_t s1 = p1.first - ed.a;
                if (p1.second - ed.b != s1) continue;
                if (p2.first - base2_hi != s1) continue;
                if (mod_reduce(s1, m) != 0) continue;
                if (auto plan = verified(make_endoscopic_plan(p, s1, ed))) return plan;
            }
            return std::nullopt;
        }
        case RepType::Irreducible: {
            const auto& id = std::get<IrreducibleData>(rep.data());
            for (const auto& cand : irreducible_candidates(p, id.exponent)) {
                const auto bs = sorted_desc(cand.sym.output);
                const std::int64_t s = ht[0] - bs[0];
                if (mod_reduce(s, m) != 0) continue;
                bool match = true;
                for (int i = 0; i < 4; ++i)
                    if (ht[i] != bs[i] + s) { match = false; break; }
                if (!match) continue;
                if (auto plan = verified(make_irreducible_plan(p, cand.sym.output,
                                                               cand.sym.case_index, cand.rotation, s)))
                    return plan;
            }
            return std::nullopt;
        }
    }
    return std::nullopt;
}

}  // namespace gsp4
