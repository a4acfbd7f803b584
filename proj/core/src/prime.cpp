#include "gsp4/prime.hpp"

namespace gsp4 {

namespace {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

Prime::Prime(std::int64_t p) : p_(p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw validation_error("prime must be an odd rational prime >= 3, got " + std::to_string(p));
}

std::int64_t Prime::level_modulus(int level) const {
    if (!is_valid_level(level))
        throw validation_error("invalid level " + std::to_string(level) + "; levels are 1, 2, 4");
    std::int64_t m = 1;
    for (int i = 0; i < level; ++i) m *= p_;
    return m - 1;
}

std::int64_t mod_reduce(std::int64_t v, std::int64_t m) {
    std::int64_t r = v % m;
    return r < 0 ? r + m : r;
}

bool is_valid_level(int level) { return level == 1 || level == 2 || level == 4; }

}  // namespace gsp4
