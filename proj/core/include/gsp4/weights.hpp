#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "gsp4/prime.hpp"

namespace gsp4 {

/// Exact rational with reduced representation, den > 0. Only what the alcove
/// classifier needs: construction and exact comparison against integers.
struct Rational {
    std::int64_t num{0};
    std::int64_t den{1};

    Rational() = default;
    Rational(std::int64_t n);  // NOLINT: implicit from integers is the point
    Rational(std::int64_t n, std::int64_t d);
};

bool operator<(const Rational& a, const Rational& b);
bool operator==(const Rational& a, const Rational& b);
inline bool operator>(const Rational& a, const Rational& b) { return b < a; }
inline bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
Rational operator+(const Rational& a, const Rational& b);
Rational operator-(const Rational& a, const Rational& b);

/// A point (a, b; c) of the character lattice X(T) of the diagonal torus:
/// the sublattice of Z^3 with a + b = c mod 2.
struct HighestWeight {
    std::int64_t a;
    std::int64_t b;
    std::int64_t c;

    HighestWeight(std::int64_t a_, std::int64_t b_, std::int64_t c_);

    friend bool operator==(const HighestWeight& l, const HighestWeight& r) {
        return l.a == r.a && l.b == r.b && l.c == r.c;
    }
};

enum class Alcove { C0, C1, C2, C3, Boundary, Outside };

const char* to_string(Alcove a);

/// p-restricted: 0 <= a-b < p and 0 <= b < p.
bool in_X1(Prime p, const HighestWeight& lambda);

/// p-regular: same inequalities with bound p-1.
bool is_p_regular(Prime p, const HighestWeight& lambda);

/// Classifies a point of X(T) (x) R into the four restricted alcoves:
///   C0: x > y > 0,        x + y < p
///   C1: x + y > p,        y < x < p
///   C2: x - y < p < x,    x + y < 2p
///   C3: y < p < x,        2p < x + y,  x - y < p
/// Points on a wall of some alcove closure return Boundary, everything else
/// Outside.
Alcove alcove_of(Prime p, const Rational& x, const Rational& y);

/// Alcove of lambda + rho~ where rho~ = (2, 1; 3), i.e. of the point (a+2, b+1).
Alcove shifted_alcove(Prime p, const HighestWeight& lambda);

/// F~(lambda) = F~(lambda') for p-restricted weights iff the difference lies in
/// (p-1) X^0(T), i.e. a = a', b = b' and c = c' mod 2(p-1).
bool serre_weight_equiv(Prime p, const HighestWeight& lambda, const HighestWeight& mu);

/// Label of an irreducible GSp4(F_p)-representation: a p-restricted highest
/// weight with the central coordinate normalized mod 2(p-1).
struct SerreWeightLabel {
    std::int64_t a;
    std::int64_t b;
    std::int64_t c;  // canonical residue mod 2(p-1)

    friend bool operator==(const SerreWeightLabel& l, const SerreWeightLabel& r) {
        return l.a == r.a && l.b == r.b && l.c == r.c;
    }
    friend bool operator<(const SerreWeightLabel& l, const SerreWeightLabel& r) {
        if (l.a != r.a) return l.a < r.a;
        if (l.b != r.b) return l.b < r.b;
        return l.c < r.c;
    }
};

SerreWeightLabel serre_label(Prime p, const HighestWeight& lambda);

/// Jordan-Holder constituents of the mod-p Weyl module W(lambda), socle first.
/// Covers the lowest two (shifted) alcoves only:
///   C0: [F~(lambda)]
///   C1: [F~(lambda), F~(p-b-3, p-a-3; c)]
/// Walls and upper alcoves throw unsupported_weight.
std::vector<SerreWeightLabel> weyl_constituents(Prime p, const HighestWeight& lambda);

/// Dimension (m1-m2)(m1+m2) m1 m2 / 6 of the algebraic representation with
/// Harish-Chandra parameter (m1, m2); requires m1 > m2 > 0.
std::int64_t weyl_dim(std::int64_t m1, std::int64_t m2);

/// Hodge-Tate weights {d, d+m2, d+m1, d+m1+m2} (ascending) attached to the
/// archimedean parameter (w; m1, m2), d = (w+3-m1-m2)/2.
/// Requires m1 > m2 > 0 and m1+m2 = w+1 mod 2. The output always satisfies
/// h1+h4 = h2+h3 = w+3.
std::array<std::int64_t, 4> ht_from_parameter(std::int64_t w, std::int64_t m1, std::int64_t m2);

/// The highest weight (m1-2, m2-1; w) attached to the parameter (w; m1, m2).
HighestWeight hc_to_weight(std::int64_t m1, std::int64_t m2, std::int64_t w);

}  // namespace gsp4
