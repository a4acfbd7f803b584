#include "gsp4/charlattice.hpp"

#include <utility>

namespace gsp4 {

InertiaCharacter::InertiaCharacter(Prime p, int level, std::int64_t exponent,
                                   std::string unramified_twist)
    : p_(p), level_(level), exponent_(0), unramified_twist_(std::move(unramified_twist)) {
    if (!is_valid_level(level))
        throw validation_error("invalid level " + std::to_string(level) + "; levels are 1, 2, 4");
    exponent_ = mod_reduce(exponent, p_.level_modulus(level_));
}

InertiaCharacter InertiaCharacter::power(std::int64_t k) const {
    // exponent * k may exceed 64 bits only for absurd k; moduli here are < 2^15.
    return InertiaCharacter(p_, level_, mod_reduce(exponent_ % modulus() * (k % modulus()), modulus()),
                            unramified_twist_);
}

InertiaCharacter InertiaCharacter::frobenius() const {
    return InertiaCharacter(p_, level_, mod_reduce(exponent_ * p_.value(), modulus()),
                            unramified_twist_);
}

std::int64_t DigitVector::value() const {
    std::int64_t v = 0, pw = 1;
    for (std::int64_t d : digits) {
        v += d * pw;
        pw *= base;
    }
    return v;
}

InertiaCharacter make_char(Prime p, int level, std::int64_t exponent, std::string unramified_twist) {
    return InertiaCharacter(p, level, exponent, std::move(unramified_twist));
}

InertiaCharacter make_char(const DigitVector& dv) {
    Prime p(dv.base);
    for (std::int64_t d : dv.digits)
        if (d < 0 || d > dv.base - 1)
            throw validation_error("digit out of range [0, p-1]: " + std::to_string(d));
    if (static_cast<int>(dv.digits.size()) != dv.level)
        throw validation_error("digit vector length does not match its level");
    return InertiaCharacter(p, dv.level, dv.value());
}

InertiaCharacter cyclotomic_as_level(Prime p, int level, std::int64_t k) {
    const std::int64_t norm = p.level_modulus(level) / p.residue_modulus();
    return InertiaCharacter(p, level, mod_reduce(k, p.level_modulus(level)) * norm);
}

std::vector<InertiaCharacter> frobenius_orbit(const InertiaCharacter& chi) {
    std::vector<InertiaCharacter> orbit;
    InertiaCharacter current = chi;
    for (int i = 0; i < chi.level(); ++i) {
        bool seen = false;
        for (const auto& prev : orbit)
            if (prev.exponent() == current.exponent()) { seen = true; break; }
        if (seen) break;
        orbit.push_back(current);
        current = current.frobenius();
    }
    return orbit;
}

DigitVector digits(const InertiaCharacter& chi) {
    DigitVector dv{chi.prime().value(), chi.level(), {}};
    std::int64_t e = chi.exponent();
    for (int i = 0; i < chi.level(); ++i) {
        dv.digits.push_back(e % dv.base);
        e /= dv.base;
    }
    return dv;
}

}  // namespace gsp4
