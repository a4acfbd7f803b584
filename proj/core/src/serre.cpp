#include "gsp4/serre.hpp"

#include <algorithm>

namespace gsp4 {

SearchWindow SearchWindow::defaults(Prime p) {
    const std::int64_t pv = p.value();
    return SearchWindow{1, 3 * pv, 1, 3 * pv, 0, 2 * (pv - 1) - 1, 0, 2 * (pv - 1) - 1};
}

std::vector<SWEntry> sw_set(const LocalRepresentation& rep, const SearchWindow& window) {
    if (window.a_min > window.a_max || window.b_min > window.b_max || window.c_min > window.c_max)
        throw validation_error("empty search window");
    std::vector<SWEntry> out;
    for (std::int64_t a = std::max<std::int64_t>(window.a_min, 2); a <= window.a_max; ++a)
        for (std::int64_t b = std::max<std::int64_t>(window.b_min, 1); b < a && b <= window.b_max; ++b)
            for (std::int64_t c = std::max<std::int64_t>(window.c_min, 0); c <= window.c_max; ++c) {
                if (auto plan = plan_with_ht(rep, {a + b + c, a + c, b + c, c}))
                    out.push_back(SWEntry{a, b, c, *plan});
            }
    std::sort(out.begin(), out.end());
    return out;
}

ClassicalWeight classical_weight(const LocalRepresentation& rep, const SearchWindow& window) {
    // Lexicographic scan: the first witness is the minimum of (a+1, b+2, c).
    for (std::int64_t a = std::max<std::int64_t>(window.a_min, 2); a <= window.a_max; ++a)
        for (std::int64_t b = std::max<std::int64_t>(window.b_min, 1); b < a && b <= window.b_max; ++b)
            for (std::int64_t c = std::max<std::int64_t>(window.c_min, 0); c <= window.c_max; ++c) {
                if (auto plan = plan_with_ht(rep, {a + b + c, a + c, b + c, c}))
                    return ClassicalWeight{a + 1, b + 2, c, SWEntry{a, b, c, *plan}};
            }
    throw window_too_small("no weight witness inside the search window");
}

ClassicalWeight classical_weight(const LocalRepresentation& rep) {
    return classical_weight(rep, SearchWindow::defaults(rep.prime()));
}

namespace {

/// The inertial display of the case matching the representation's shape, for
/// the parameter (w'; m1, m2).
std::optional<InertiaPattern> parameter_pattern(RepType type, Prime p, std::int64_t m1,
                                                std::int64_t m2, std::int64_t dp) {
    const std::int64_t pv = p.value();
    switch (type) {
        case RepType::BorelOrdinary:
            return InertiaPattern(p, {{1, dp + m1 + m2}, {1, dp + m1}, {1, dp + m2}, {1, dp}});
        case RepType::SiegelOrdinary:
            return InertiaPattern(p, {{1, dp + m1 + m2}, {2, (dp + m2) + (dp + m1) * pv}, {1, dp}});
        case RepType::KlingenOrdinary:
            return InertiaPattern(p, {{2, (dp + m1) + (dp + m1 + m2) * pv},
                                      {2, dp + (dp + m2) * pv}});
        case RepType::Endoscopic:
            return InertiaPattern(p, {{2, dp + (dp + m1 + m2) * pv},
                                      {2, (dp + m2) + (dp + m1) * pv}});
        case RepType::Irreducible:
            return std::nullopt;  // matched by digit assignment instead
    }
    return std::nullopt;
}

bool irreducible_parameter_match(const LocalRepresentation& rep, std::array<std::int64_t, 4> ht) {
    const Prime& p = rep.prime();
    const InertiaPattern target = inertia_pattern(rep);
    std::sort(ht.begin(), ht.end());
    do {
        if (ht[0] + ht[2] != ht[1] + ht[3]) continue;
        if (InertiaPattern(p, {{4, PlanBlock{4, {ht[0], ht[1], ht[2], ht[3]}}.fold(p)}}) == target)
            return true;
    } while (std::next_permutation(ht.begin(), ht.end()));
    return false;
}

}  // namespace

WeightSetReport enumerate_pdcris_weights(const LocalRepresentation& rep,
                                         const SearchWindow& window) {
    const Prime& p = rep.prime();
    const RepType type = classify(rep);
    const InertiaPattern target = inertia_pattern(rep);

    WeightSetReport report;
    report.window = window;

    for (std::int64_t m1 = 1; m1 <= p.value() - 1; ++m1)
        for (std::int64_t m2 = 1; m2 < m1; ++m2) {
            const Alcove alc = alcove_of(p, Rational(m1), Rational(m2));
            if (alc != Alcove::C0 && alc != Alcove::C1) continue;
            for (std::int64_t w = window.w_min; w <= window.w_max; ++w) {
                if (mod_reduce(m1 + m2 - (w + 1), 2) != 0) continue;
                const std::int64_t dp = (w + 3 - m1 - m2) / 2;
                const std::array<std::int64_t, 4> ht = {dp + m1 + m2, dp + m1, dp + m2, dp};

                if (type == RepType::Irreducible) {
                    if (!irreducible_parameter_match(rep, ht)) continue;
                } else {
                    auto pattern = parameter_pattern(type, p, m1, m2, dp);
                    if (!pattern || !(*pattern == target)) continue;
                }
                auto witness = plan_with_ht(rep, ht);
                if (!witness) continue;

                report.entries.push_back(PdcrisEntry{
                    serre_label(p, HighestWeight(m1 - 2, m2 - 1, w)), m1, m2, w, ht, alc,
                    static_cast<int>(type) + 1});
            }
        }

    std::sort(report.entries.begin(), report.entries.end());
    report.entries.erase(std::unique(report.entries.begin(), report.entries.end(),
                                     [](const PdcrisEntry& a, const PdcrisEntry& b) {
                                         return !(a < b) && !(b < a);
                                     }),
                         report.entries.end());
    return report;
}

WeightSetReport enumerate_pdcris_weights(const LocalRepresentation& rep) {
    return enumerate_pdcris_weights(rep, SearchWindow::defaults(rep.prime()));
}

}  // namespace gsp4
