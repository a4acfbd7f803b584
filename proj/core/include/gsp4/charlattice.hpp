#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gsp4/prime.hpp"

namespace gsp4 {

/// A character of tame inertia written as a power of the level-f fundamental
/// character, together with an optional symbolic unramified twist.
///
/// The exponent is always stored as the canonical residue mod p^f - 1.
/// Unramified characters carry no inertial data; they are tracked only as
/// opaque names (empty name = trivial twist), since every recipe downstream
/// consumes inertia exponents and ramification flags alone.
class InertiaCharacter {
public:
    InertiaCharacter(Prime p, int level, std::int64_t exponent, std::string unramified_twist = {});

    const Prime& prime() const noexcept { return p_; }
    int level() const noexcept { return level_; }
    std::int64_t exponent() const noexcept { return exponent_; }
    std::int64_t modulus() const { return p_.level_modulus(level_); }
    const std::string& unramified_twist() const noexcept { return unramified_twist_; }

    /// Trivial on inertia (exponent 0), ignoring the unramified part.
    bool is_trivial_on_inertia() const noexcept { return exponent_ == 0; }
    /// Trivial as a character: trivial on inertia and no unramified twist.
    bool is_trivial() const noexcept { return exponent_ == 0 && unramified_twist_.empty(); }

    InertiaCharacter power(std::int64_t k) const;
    InertiaCharacter frobenius() const;  // exponent -> p * exponent

    friend bool operator==(const InertiaCharacter& a, const InertiaCharacter& b) {
        return a.p_ == b.p_ && a.level_ == b.level_ && a.exponent_ == b.exponent_ &&
               a.unramified_twist_ == b.unramified_twist_;
    }

private:
    Prime p_;
    int level_;
    std::int64_t exponent_;
    std::string unramified_twist_;
};

/// Base-p digit expansion of a level-f exponent, least significant digit first.
struct DigitVector {
    std::int64_t base;
    int level;
    std::vector<std::int64_t> digits;  // 0 <= d_i <= p-1, size = level

    /// The exponent sum(d_i p^i) as a plain integer (not reduced).
    std::int64_t value() const;
};

InertiaCharacter make_char(Prime p, int level, std::int64_t exponent, std::string unramified_twist = {});
InertiaCharacter make_char(const DigitVector& dv);

/// The cyclotomic power eps^k expressed at level f via eps = omega_f^{(p^f-1)/(p-1)}.
/// The result is trivial exactly when k = 0 mod p-1.
InertiaCharacter cyclotomic_as_level(Prime p, int level, std::int64_t k);

/// Distinct Frobenius twists {chi, chi^p, chi^{p^2}, ...}, starting from chi.
/// Orbit size equal to the level certifies that the induced representation of
/// that dimension is irreducible.
std::vector<InertiaCharacter> frobenius_orbit(const InertiaCharacter& chi);

/// Digit expansion of the canonical exponent; round-trips with make_char.
DigitVector digits(const InertiaCharacter& chi);

}  // namespace gsp4
