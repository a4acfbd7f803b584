#pragma once

#include <cstdint>

#include "gsp4/errors.hpp"

namespace gsp4 {

/// An odd rational prime. The whole calculus assumes p >= 3.
class Prime {
public:
    explicit Prime(std::int64_t p);

    std::int64_t value() const noexcept { return p_; }

    /// Order of the mod-p cyclotomic character on tame inertia.
    std::int64_t residue_modulus() const noexcept { return p_ - 1; }

    /// p^f - 1, the exponent modulus of the level-f fundamental character.
    std::int64_t level_modulus(int level) const;

    friend bool operator==(const Prime& a, const Prime& b) noexcept { return a.p_ == b.p_; }
    friend bool operator!=(const Prime& a, const Prime& b) noexcept { return a.p_ != b.p_; }

private:
    std::int64_t p_;
};

/// Canonical residue of v in [0, m).
std::int64_t mod_reduce(std::int64_t v, std::int64_t m);

bool is_valid_level(int level);

}  // namespace gsp4
