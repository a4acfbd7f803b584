#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "gsp4/charlattice.hpp"
#include "gsp4/prime.hpp"

namespace gsp4 {

/// Ramification class of an extension between two characters, keyed by the
/// ratio chi1 * chi2^{-1}:
///   - ratio = eps:      peu ramifiee vs tres ramifiee
///   - ratio trivial:    unramified vs ramified
///   - any other ratio:  peu ramifiee (every class lifts without raising)
enum class ExtensionFlag { Unramified, PeuRamifiee, TresRamifiee, Ramified };

const char* to_string(ExtensionFlag f);

/// True when the flag is a legal label for a class over the given ratio
/// residue (exponent of the ratio mod p-1).
bool flag_legal(Prime p, ExtensionFlag f, std::int64_t ratio_residue);

/// Validates flag legality; throws validation_error naming the violated rule.
void require_flag_legal(Prime p, ExtensionFlag f, std::int64_t ratio_residue,
                        const std::string& slot_name);

/// A class in H^1(Q_p, ratio) together with its ramification flag.
struct CharacterClassData {
    InertiaCharacter ratio;  // level 1
    ExtensionFlag flag;
};

/// The (psi, r) bookkeeping attached to a class: psi is a symbolic unramified
/// character with trivial reduction (only its non-triviality matters), and
/// r is the forced weight raise: p-1 for tres ramifiee / ramified, 0 otherwise.
struct TwistLedgerEntry {
    bool psi_nontrivial;
    std::int64_t r;
    std::string psi_name;  // "1" when trivial
};

TwistLedgerEntry lift_twist(Prime p, const CharacterClassData& data);

/// dim H^1(Q_p, r) for a 2-dimensional upper-triangular r with diagonal
/// (c1, c2) and a nontrivial extension class:
///   4 if (c1, c2) = (1, eps); 3 if exactly one of c1 = 1, c2 = eps; 2 else.
/// With a trivial (split) extension the direct-sum count applies instead.
int h1_dim_2dim(Prime p, const InertiaCharacter& c1, const InertiaCharacter& c2,
                bool nontrivial_ext = true);

/// dim H^1_f(Q_p, .) for the crystalline character of Hodge-Tate weight a
/// twisted by an unramified character whose reduction is nontrivial when
/// `unramified_nontrivial` is set. Returns 1 for a > 0 and 0 for a = 0 with a
/// nontrivial twist. The pairs (a mod p-1, reduction) in {(1,1), (0,1)} are
/// out of range of the closed form and throw exceptional_case.
int h1f_dim_char(Prime p, std::int64_t a, bool unramified_nontrivial);

/// pi-adic length of H^1(K, O(psi))_tor for a character psi with trivial
/// reduction: the torsion is cyclic of length c(psi) = max ord_pi(psi(g)-1).
/// std::nullopt encodes the trivial psi, for which the torsion degenerates;
/// that input throws infinite_torsion.
int torsion_order(std::optional<int> c_psi);

/// Minimal-data planning step for one character slot: the class alpha over
/// ratio = eps^b (data.flag tells its ramification) lifts to a crystalline
/// character of Hodge-Tate weight b + k(p-1). For tres ramifiee or ramified
/// classes k = 0 is illegal (those classes only lift once the weight is
/// raised past b + (p-1)).
struct CharLift {
    std::int64_t weight;
    TwistLedgerEntry ledger;
};

CharLift lift_char(Prime p, std::int64_t b, const CharacterClassData& data, std::int64_t k);

}  // namespace gsp4
