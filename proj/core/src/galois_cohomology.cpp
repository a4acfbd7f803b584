#include "gsp4/galois_cohomology.hpp"

namespace gsp4 {

const char* to_string(ExtensionFlag f) {
    switch (f) {
        case ExtensionFlag::Unramified: return "unramified";
        case ExtensionFlag::PeuRamifiee: return "peu";
        case ExtensionFlag::TresRamifiee: return "tres";
        case ExtensionFlag::Ramified: return "ramified";
    }
    return "?";
}

bool flag_legal(Prime p, ExtensionFlag f, std::int64_t ratio_residue) {
    const std::int64_t r = mod_reduce(ratio_residue, p.residue_modulus());
    switch (f) {
        case ExtensionFlag::TresRamifiee:
            return r == mod_reduce(1, p.residue_modulus());
        case ExtensionFlag::Ramified:
            return r == 0;
        case ExtensionFlag::Unramified:
            return r == 0;
        case ExtensionFlag::PeuRamifiee:
            return r != 0;
    }
    return false;
}

void require_flag_legal(Prime p, ExtensionFlag f, std::int64_t ratio_residue,
                        const std::string& slot_name) {
    if (flag_legal(p, f, ratio_residue)) return;
    const std::int64_t r = mod_reduce(ratio_residue, p.residue_modulus());
    std::string msg = slot_name + ": ";
    switch (f) {
        case ExtensionFlag::TresRamifiee:
            msg += "tres-ramifiee flag requires ratio eps";
            break;
        case ExtensionFlag::Ramified:
            msg += "ramified flag requires a trivial ratio";
            break;
        case ExtensionFlag::Unramified:
            msg += "unramified flag requires a trivial ratio";
            break;
        case ExtensionFlag::PeuRamifiee:
            msg += "peu-ramifiee flag requires a nontrivial ratio (trivial ratios use unramified/ramified)";
            break;
    }
    msg += " (ratio residue " + std::to_string(r) + " mod " + std::to_string(p.residue_modulus()) + ")";
    throw validation_error(msg);
}

TwistLedgerEntry lift_twist(Prime p, const CharacterClassData& data) {
    if (data.ratio.level() != 1)
        throw validation_error("class data ratio must be a level-1 character");
    require_flag_legal(p, data.flag, data.ratio.exponent(), "class");
    const bool forced =
        data.flag == ExtensionFlag::TresRamifiee || data.flag == ExtensionFlag::Ramified;
    return TwistLedgerEntry{forced, forced ? p.residue_modulus() : 0,
                            forced ? std::string("psi_alpha") : std::string("1")};
}

namespace {

bool is_one(Prime p, const InertiaCharacter& c) {
    return mod_reduce(c.exponent(), p.residue_modulus()) == 0 && c.unramified_twist().empty();
}

bool is_eps(Prime p, const InertiaCharacter& c) {
    return mod_reduce(c.exponent() - 1, p.residue_modulus()) == 0 && c.unramified_twist().empty();
}

}  // namespace

int h1_dim_2dim(Prime p, const InertiaCharacter& c1, const InertiaCharacter& c2,
                bool nontrivial_ext) {
    if (c1.level() != 1 || c2.level() != 1)
        throw validation_error("h1_dim_2dim takes level-1 characters");
    if (nontrivial_ext)
        return 2 + (is_one(p, c1) ? 1 : 0) + (is_eps(p, c2) ? 1 : 0);
    // Split case: local Euler characteristic of the direct sum.
    return 2 + (is_one(p, c1) ? 1 : 0) + (is_one(p, c2) ? 1 : 0) + (is_eps(p, c1) ? 1 : 0) +
           (is_eps(p, c2) ? 1 : 0);
}

int h1f_dim_char(Prime p, std::int64_t a, bool unramified_nontrivial) {
    if (a < 0) throw validation_error("h1f_dim_char takes a nonnegative weight");
    const std::int64_t b = mod_reduce(a, p.residue_modulus());
    if (!unramified_nontrivial && (b == 0 || b == 1))
        throw exceptional_case(
            "pair (" + std::to_string(b) +
            ", trivial) is outside the closed form; use the peu/tres or unramified/ramified branches");
    if (a == 0) return 0;  // weight-zero with a nontrivial twist has no crystalline classes
    return 1;
}

int torsion_order(std::optional<int> c_psi) {
    if (!c_psi)
        throw infinite_torsion("torsion order is undefined for the trivial twist");
    if (*c_psi < 0) throw validation_error("c(psi) must be nonnegative");
    return *c_psi;
}

CharLift lift_char(Prime p, std::int64_t b, const CharacterClassData& data, std::int64_t k) {
    if (b < 0 || b >= p.residue_modulus())
        throw validation_error("residue exponent must lie in [0, p-2]");
    if (mod_reduce(data.ratio.exponent() - b, p.residue_modulus()) != 0)
        throw validation_error("class ratio must agree with the residue exponent");
    if (k < 0) throw validation_error("raise k must be nonnegative");
    TwistLedgerEntry ledger = lift_twist(p, data);
    if (k == 0 && ledger.r != 0)
        throw validation_error("k = 0 is illegal for tres-ramifiee/ramified classes; "
                               "they lift only at weight b + k(p-1), k >= 1");
    return CharLift{b + k * p.residue_modulus(), ledger};
}

}  // namespace gsp4
