#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gsp4/galois_cohomology.hpp"
#include "gsp4/weights.hpp"

namespace gsp4 {

/// The five shapes of a semisimplified 4-dimensional symplectic mod-p local
/// representation.
enum class RepType { BorelOrdinary, SiegelOrdinary, KlingenOrdinary, Endoscopic, Irreducible };

const char* to_string(RepType t);

/// One semisimple block: a single tame character, or the induction of a
/// level-2 / level-4 character (with full Frobenius orbit).
struct Block {
    enum class Kind { Char, Induced2, Induced4 };

    Kind kind;
    std::int64_t exponent;  // canonical mod p^level - 1
    std::string unramified_twist;

    int level() const noexcept { return kind == Kind::Char ? 1 : kind == Kind::Induced2 ? 2 : 4; }
    int dim() const noexcept { return level(); }
};

/// A slot of the restriction to inertia after semisimplification: `level`
/// distinguishes a character (1) from a full induced orbit (2 or 4), and
/// `exponent` is the orbit minimum of the canonical exponent. Reducible
/// inductions are split into lower-level slots during canonicalization.
struct PatternSlot {
    int level;
    std::int64_t exponent;

    friend bool operator==(const PatternSlot& a, const PatternSlot& b) {
        return a.level == b.level && a.exponent == b.exponent;
    }
    friend bool operator<(const PatternSlot& a, const PatternSlot& b) {
        return a.level != b.level ? a.level < b.level : a.exponent < b.exponent;
    }
};

/// Canonical multiset of inertial slots of total dimension 4, with any overall
/// cyclotomic twist folded into the exponents. Two representations have equal
/// patterns exactly when their inertia semisimplifications agree.
class InertiaPattern {
public:
    InertiaPattern(Prime p, std::vector<PatternSlot> raw_slots);

    const Prime& prime() const noexcept { return p_; }
    const std::vector<PatternSlot>& slots() const noexcept { return slots_; }
    std::string to_string() const;

    friend bool operator==(const InertiaPattern& a, const InertiaPattern& b) {
        return a.p_ == b.p_ && a.slots_ == b.slots_;
    }
    friend bool operator!=(const InertiaPattern& a, const InertiaPattern& b) { return !(a == b); }

private:
    Prime p_;
    std::vector<PatternSlot> slots_;
};

// --- per-type defining data -------------------------------------------------
//
// Exponent parameters are kept as exact integers (they pin the associated
// highest weight), while patterns and ledgers only see them mod p-1 / p^2-1.

struct BorelData {
    std::int64_t x, y, w;          // diagonal exponents (x+y, x, y, 0) (x) eps^delta
    ExtensionFlag tau0;            // adjacent slots 1-2 and 3-4 (dual pair), ratio eps^y
    ExtensionFlag tau1;            // adjacent slot 2-3, ratio eps^{x-y}
    std::string twist;             // unramified central twist (symbolic)
};

struct SiegelData {
    std::int64_t x, y, w;          // chars eps^{x+y}, 1; induced block omega_2^{y+xp}
    std::optional<ExtensionFlag> corner;  // class over eps^{x+y}; recorded, never raises
    std::string twist;
};

struct KlingenData {
    std::int64_t x, y, w;          // block omega_2^{y+xp} and its similitude dual
};

struct EndoscopicData {
    std::int64_t a, b, c, d, e;    // blocks omega_2^{b+ap}, omega_2^{d+cp}, twist eps^e
    bool swapped;                  // input blocks were reordered so a+b >= c+d
};

struct IrreducibleData {
    std::int64_t exponent;         // level-4 exponent, = 0 mod p+1, != 0 mod p^2+1
    std::string twist;
};

using RepData = std::variant<BorelData, SiegelData, KlingenData, EndoscopicData, IrreducibleData>;

/// Symbolic model of a 4-dimensional symplectic mod-p local representation:
/// semisimple blocks, ramification flags for the extension slots the normal
/// form carries, and the similitude/central bookkeeping. Immutable.
class LocalRepresentation {
public:
    static LocalRepresentation borel(Prime p, std::int64_t x, std::int64_t y, std::int64_t w,
                                     ExtensionFlag tau0 = ExtensionFlag::PeuRamifiee,
                                     ExtensionFlag tau1 = ExtensionFlag::PeuRamifiee,
                                     std::string twist = {});
    static LocalRepresentation siegel(Prime p, std::int64_t x, std::int64_t y, std::int64_t w,
                                      std::optional<ExtensionFlag> corner = std::nullopt,
                                      std::string twist = {});
    static LocalRepresentation klingen(Prime p, std::int64_t x, std::int64_t y, std::int64_t w);
    static LocalRepresentation endoscopic(Prime p, std::int64_t a, std::int64_t b, std::int64_t c,
                                          std::int64_t d, std::int64_t e);
    static LocalRepresentation irreducible(Prime p, std::int64_t exponent, std::string twist = {});

    const Prime& prime() const noexcept { return p_; }
    const std::vector<Block>& blocks() const noexcept { return blocks_; }
    const std::map<std::string, ExtensionFlag>& ext_flags() const noexcept { return ext_flags_; }
    const RepData& data() const noexcept { return data_; }

    /// Exponent of the overall cyclotomic twist eps^delta, canonical mod p-1.
    std::int64_t central_exponent() const noexcept { return central_; }
    /// Similitude character exponent mod p-1 (product of any dual slot pair).
    std::int64_t similitude_exponent() const noexcept { return similitude_; }

private:
    LocalRepresentation(Prime p, RepData data);

    Prime p_;
    RepData data_;
    std::vector<Block> blocks_;
    std::map<std::string, ExtensionFlag> ext_flags_;
    std::int64_t central_ = 0;
    std::int64_t similitude_ = 0;
};

/// Shape classification from the block list.
RepType classify(const LocalRepresentation& rep);

/// Canonical inertial slot multiset of the semisimplification.
InertiaPattern inertia_pattern(const LocalRepresentation& rep);

/// The p-restricted highest weight attached to the representation by the
/// per-type recipes, or nullopt when no representative in the lowest two
/// shifted alcoves exists (e.g. Borel with x, y both divisible by p-1).
std::optional<HighestWeight> associated_weight(const LocalRepresentation& rep);

/// Genericity of the associated weight: interior C0, or interior C1 with
/// m1+m2 > p+1 (and additionally m1 < p-1 for the Klingen type).
/// `lambda` must equal associated_weight(rep).
bool is_generic(const LocalRepresentation& rep, const HighestWeight& lambda);
bool is_generic(const LocalRepresentation& rep);

/// Predicted inertia pattern(s) of a Fontaine-Laffaille-range crystalline lift
/// with the reflected parameter (p-m2, p-m1; w+3): one pattern for
/// Borel/Klingen/endoscopic, two alternatives for Siegel.
/// Requires lambda generic of type C1.
std::vector<InertiaPattern> fl_reduction_patterns(RepType type, Prime p, const HighestWeight& lambda);

/// True when the actual pattern differs from every Fontaine-Laffaille
/// prediction, i.e. the contradiction backing the weight-set theorem holds for
/// this instance. Requires the associated weight to be generic of type C1;
/// C0 or non-generic input throws unsupported_weight.
bool fl_obstruction_check(const LocalRepresentation& rep);

}  // namespace gsp4
