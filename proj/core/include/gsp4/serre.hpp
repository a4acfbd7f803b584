#pragma once

#include <cstdint>
#include <vector>

#include "gsp4/lifts.hpp"
#include "gsp4/localrep.hpp"

namespace gsp4 {

/// Half-open parameter ranges for the lift searches. Defaults cover one full
/// raise per slot plus the forced double raise, with the central coordinate
/// periodic mod 2(p-1).
struct SearchWindow {
    std::int64_t a_min, a_max;  // inclusive bounds for the first weight coordinate
    std::int64_t b_min, b_max;
    std::int64_t c_min, c_max;  // central coordinate, inclusive
    std::int64_t w_min, w_max;  // parameter w' range, inclusive

    static SearchWindow defaults(Prime p);
};

/// A triple (a, b, c), a > b > 0, realized by a planned lift with Hodge-Tate
/// weights {a+b+c, a+c, b+c, c}; the witness plan is attached.
struct SWEntry {
    std::int64_t a, b, c;
    LiftPlan witness;

    friend bool operator<(const SWEntry& l, const SWEntry& r) {
        if (l.a != r.a) return l.a < r.a;
        if (l.b != r.b) return l.b < r.b;
        return l.c < r.c;
    }
};

/// All entries realizable by the constructive lift family inside the window.
/// This computes the constructive subset of the full existential weight set;
/// reports carry that caveat.
std::vector<SWEntry> sw_set(const LocalRepresentation& rep, const SearchWindow& window);

/// The classical weight (k1, k2, w): lexicographic minimum of
/// {(a+1, b+2, c)} over sw_set. k1 >= k2 >= 3 always holds.
struct ClassicalWeight {
    std::int64_t k1, k2, w;
    SWEntry witness;
};

ClassicalWeight classical_weight(const LocalRepresentation& rep, const SearchWindow& window);
ClassicalWeight classical_weight(const LocalRepresentation& rep);

/// One member of the restricted-range weight set: the socle label of the Weyl
/// module of the parameter (w'; m1, m2), plus the witness data.
struct PdcrisEntry {
    SerreWeightLabel label;
    std::int64_t m1, m2, wprime;
    std::array<std::int64_t, 4> ht;  // descending witness weights
    Alcove alcove;                   // C0 or C1
    int case_tag;                    // 1..5, matching the five shapes

    friend bool operator<(const PdcrisEntry& l, const PdcrisEntry& r) {
        if (!(l.label == r.label)) return l.label < r.label;
        if (l.wprime != r.wprime) return l.wprime < r.wprime;
        if (l.m1 != r.m1) return l.m1 < r.m1;
        return l.m2 < r.m2;
    }
};

struct WeightSetReport {
    std::vector<PdcrisEntry> entries;  // sorted, deduplicated
    SearchWindow window;
};

/// Enumerates the weight labels F~(m1-2, m2-1; w') whose parameter matches the
/// representation: shifted weight interior to C0 or C1, inertia pattern equal
/// to the case display, and a constructive lift with the parameter's
/// Hodge-Tate multiset. Every entry carries its witness.
WeightSetReport enumerate_pdcris_weights(const LocalRepresentation& rep, const SearchWindow& window);
WeightSetReport enumerate_pdcris_weights(const LocalRepresentation& rep);

}  // namespace gsp4
