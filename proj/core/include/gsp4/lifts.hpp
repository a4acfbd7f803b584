#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gsp4/galois_cohomology.hpp"
#include "gsp4/localrep.hpp"

namespace gsp4 {

/// One diagonal block of a planned crystalline lift. `weights` holds the
/// Hodge-Tate weights of the block: one entry for a character, a decreasing
/// pair for a level-2 induction, and the four digit-ordered exponents
/// (b0..b3) for a level-4 induction.
struct PlanBlock {
    int level;
    std::vector<std::int64_t> weights;

    /// Exponent of the mod-p reduction at the block's level.
    std::int64_t fold(Prime p) const;
};

/// A candidate potentially diagonalizable crystalline lift, recorded as the
/// ordered Hodge-Tate weight multiset plus the block structure and the chosen
/// ledger parameters.
struct LiftPlan {
    enum class Certificate { Ordinary, InducedShortRange, Composite };

    std::array<std::int64_t, 4> ht;  // descending
    Certificate certificate;
    bool regular;                    // all four weights distinct
    std::map<std::string, std::int64_t> ledger;
    std::vector<PlanBlock> structure;

    bool symplectic() const noexcept { return ht[0] + ht[3] == ht[1] + ht[2]; }
    InertiaPattern reduction(Prime p) const;
};

const char* to_string(LiftPlan::Certificate c);

/// Crystalline lift of the induced 2-dimensional representation with exponent
/// b + ap (0 <= b < a < p): Hodge-Tate weights {a, b} shifted by `twist`.
/// The short range 0 <= a-b <= p-1 certifies potential diagonalizability.
struct TwoDimLift {
    std::array<std::int64_t, 2> ht;  // descending
    LiftPlan::Certificate certificate;
};

TwoDimLift lift_2dim_irred(Prime p, std::int64_t a, std::int64_t b, std::int64_t twist = 0);

/// Minimal Hodge-Tate weights of a crystalline lift of the reducible 2-dim
/// representation with diagonal residues (a, b), top to bottom:
///   {b+p, b}    if the ratio is eps and the class is tres ramifiee
///   {a, b}      if a > b and the class is peu ramifiee
///   {a+p-1, b}  if a <= b
/// Always strictly decreasing.
std::array<std::int64_t, 2> lift_2dim_red(Prime p, std::int64_t a, std::int64_t b, ExtensionFlag flag);

enum class ThreeDimCase { Red1, Red2 };

/// Data for the two 3-dimensional reducible shapes.
///   Red1: three characters with residues (a, b, c) top to bottom; flags of
///         the two adjacent classes (ratios eps^{a-b}, eps^{b-c}).
///   Red2: induced block with exponent b + ap over a character of residue c;
///         flag of the class over eps^c.
struct ThreeDimData {
    std::int64_t a, b, c;
    ExtensionFlag upper = ExtensionFlag::PeuRamifiee;  // Red1 only
    ExtensionFlag lower = ExtensionFlag::PeuRamifiee;  // Red1: slot b-c; Red2: class over eps^c
};

struct ThreeDimLift {
    std::array<std::int64_t, 3> ht;  // descending
    std::int64_t a1, a2;             // chosen raises
};

/// Minimal nonnegative raises (a1, a2) making the weight chain strict.
ThreeDimLift lift_3dim(Prime p, ThreeDimCase which, const ThreeDimData& data);

/// Reindexing of a level-4 digit vector (a0..a3), already Frobenius-normalized
/// so that a0+a2 >= a1+a3, into exponents (b0..b3) with b0+b2 = b1+b3 and the
/// same exact integer value sum(b_i p^i) = sum(a_i p^i). Case 0 is the
/// identity; case 1 applies (a1+a3-a2+1, a1+1, a2, a3) and can make b0
/// negative.
struct DigitSymmetrization {
    std::array<std::int64_t, 4> input;
    std::array<std::int64_t, 4> output;
    int case_index;  // 0 or 1
};

DigitSymmetrization symmetrize_digits(Prime p, const std::array<std::int64_t, 4>& digits);

/// Rotates the digit vector by Frobenius until a0+a2 >= a1+a3.
std::array<std::int64_t, 4> frobenius_normalize(Prime p, const std::array<std::int64_t, 4>& digits);

/// The minimal lift plan for a validated representation: regular weights where
/// the construction family allows it, symplectic symmetry always, parameters
/// chosen lexicographically minimal on (h1, h2, h3, h4), smaller total twist
/// breaking ties.
LiftPlan lift_gsp4(const LocalRepresentation& rep);

/// Solves the ledger for a plan with exactly the requested weights
/// (descending). Returns nullopt when the family of constructions for this
/// representation cannot realize them (wrong congruences, flag minima
/// violated, non-symplectic multiset).
std::optional<LiftPlan> plan_with_ht(const LocalRepresentation& rep,
                                     const std::array<std::int64_t, 4>& ht_desc);

/// Minimal legal Hodge-Tate gap for an extension slot: the smallest g > 0 with
/// g = residue mod p-1 and g >= residue + r(flag).
std::int64_t min_slot_gap(Prime p, ExtensionFlag flag, std::int64_t ratio_residue);

}  // namespace gsp4
