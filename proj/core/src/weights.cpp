#include "gsp4/weights.hpp"

#include <numeric>

namespace gsp4 {

Rational::Rational(std::int64_t n) : num(n), den(1) {}

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw validation_error("rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
}

bool operator<(const Rational& a, const Rational& b) { return a.num * b.den < b.num * a.den; }
bool operator==(const Rational& a, const Rational& b) { return a.num == b.num && a.den == b.den; }
Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
}
Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
}

HighestWeight::HighestWeight(std::int64_t a_, std::int64_t b_, std::int64_t c_)
    : a(a_), b(b_), c(c_) {
    if (mod_reduce(a + b - c, 2) != 0)
        throw parity_error("(a, b; c) must satisfy a + b = c mod 2");
}

const char* to_string(Alcove a) {
    switch (a) {
        case Alcove::C0: return "C0";
        case Alcove::C1: return "C1";
        case Alcove::C2: return "C2";
        case Alcove::C3: return "C3";
        case Alcove::Boundary: return "boundary";
        case Alcove::Outside: return "outside";
    }
    return "?";
}

bool in_X1(Prime p, const HighestWeight& lambda) {
    return 0 <= lambda.a - lambda.b && lambda.a - lambda.b < p.value() && 0 <= lambda.b &&
           lambda.b < p.value();
}

bool is_p_regular(Prime p, const HighestWeight& lambda) {
    return 0 <= lambda.a - lambda.b && lambda.a - lambda.b < p.value() - 1 && 0 <= lambda.b &&
           lambda.b < p.value() - 1;
}

namespace {

// Strict / weak membership in one alcove, as a pair of predicates on (x, y).
struct Region {
    bool (*interior)(const Rational&, const Rational&, std::int64_t);
    bool (*closure)(const Rational&, const Rational&, std::int64_t);
};

constexpr Region kAlcoves[4] = {
    // C0: x > y > 0, x + y < p
    {[](const Rational& x, const Rational& y, std::int64_t p) {
         return y < x && Rational(0) < y && x + y < Rational(p);
     },
     [](const Rational& x, const Rational& y, std::int64_t p) {
         return !(x < y) && !(y < Rational(0)) && !(Rational(p) < x + y);
     }},
    // C1: x + y > p, y < x < p
    {[](const Rational& x, const Rational& y, std::int64_t p) {
         return Rational(p) < x + y && y < x && x < Rational(p);
     },
     [](const Rational& x, const Rational& y, std::int64_t p) {
         return !(x + y < Rational(p)) && !(x < y) && !(Rational(p) < x);
     }},
    // C2: x - y < p < x, x + y < 2p
    {[](const Rational& x, const Rational& y, std::int64_t p) {
         return x - y < Rational(p) && Rational(p) < x && x + y < Rational(2 * p);
     },
     [](const Rational& x, const Rational& y, std::int64_t p) {
         return !(Rational(p) < x - y) && !(x < Rational(p)) && !(Rational(2 * p) < x + y);
     }},
    // C3: y < p < x, x + y > 2p, x - y < p
    {[](const Rational& x, const Rational& y, std::int64_t p) {
         return y < Rational(p) && Rational(2 * p) < x + y && x - y < Rational(p);
     },
     [](const Rational& x, const Rational& y, std::int64_t p) {
         return !(Rational(p) < y) && !(x + y < Rational(2 * p)) && !(Rational(p) < x - y);
     }},
};

}  // namespace

Alcove alcove_of(Prime p, const Rational& x, const Rational& y) {
    for (int i = 0; i < 4; ++i)
        if (kAlcoves[i].interior(x, y, p.value())) return static_cast<Alcove>(i);
    for (int i = 0; i < 4; ++i)
        if (kAlcoves[i].closure(x, y, p.value())) return Alcove::Boundary;
    return Alcove::Outside;
}

Alcove shifted_alcove(Prime p, const HighestWeight& lambda) {
    return alcove_of(p, Rational(lambda.a + 2), Rational(lambda.b + 1));
}

bool serre_weight_equiv(Prime p, const HighestWeight& lambda, const HighestWeight& mu) {
    if (!in_X1(p, lambda) || !in_X1(p, mu))
        throw validation_error("serre_weight_equiv requires p-restricted weights");
    return lambda.a == mu.a && lambda.b == mu.b &&
           mod_reduce(lambda.c - mu.c, 2 * p.residue_modulus()) == 0;
}

SerreWeightLabel serre_label(Prime p, const HighestWeight& lambda) {
    if (!in_X1(p, lambda))
        throw validation_error("Serre weight labels require p-restricted weights");
    return SerreWeightLabel{lambda.a, lambda.b, mod_reduce(lambda.c, 2 * p.residue_modulus())};
}

std::vector<SerreWeightLabel> weyl_constituents(Prime p, const HighestWeight& lambda) {
    if (!in_X1(p, lambda))
        throw validation_error("weyl_constituents requires a p-restricted weight");
    switch (shifted_alcove(p, lambda)) {
        case Alcove::C0:
            return {serre_label(p, lambda)};
        case Alcove::C1: {
            const HighestWeight mu(p.value() - lambda.b - 3, p.value() - lambda.a - 3, lambda.c);
            return {serre_label(p, lambda), serre_label(p, mu)};  // socle first
        }
        default:
            throw unsupported_weight("Weyl module reduction is only available below the first two alcoves");
    }
}

std::int64_t weyl_dim(std::int64_t m1, std::int64_t m2) {
    if (!(m1 > m2 && m2 > 0))
        throw validation_error("weyl_dim requires m1 > m2 > 0");
    return (m1 - m2) * (m1 + m2) * m1 * m2 / 6;
}

std::array<std::int64_t, 4> ht_from_parameter(std::int64_t w, std::int64_t m1, std::int64_t m2) {
    if (!(m1 > m2 && m2 > 0))
        throw validation_error("Harish-Chandra parameter requires m1 > m2 > 0");
    if (mod_reduce(m1 + m2 - (w + 1), 2) != 0)
        throw parity_error("parameter requires m1 + m2 = w + 1 mod 2");
    const std::int64_t d = (w + 3 - m1 - m2) / 2;
    return {d, d + m2, d + m1, d + m1 + m2};
}

HighestWeight hc_to_weight(std::int64_t m1, std::int64_t m2, std::int64_t w) {
    if (!(m1 > m2 && m2 > 0))
        throw validation_error("Harish-Chandra parameter requires m1 > m2 > 0");
    if (mod_reduce(m1 + m2 - (w + 1), 2) != 0)
        throw parity_error("parameter requires m1 + m2 = w + 1 mod 2");
    return HighestWeight(m1 - 2, m2 - 1, w);
}

}  // namespace gsp4
