#include <doctest.h>

#include "gsp4/charlattice.hpp"

using namespace gsp4;

TEST_CASE("make_char canonicalizes exponents") {
    CHECK(make_char(Prime(5), 2, 24).exponent() == 0);  // full order at level 2
    CHECK(make_char(Prime(5), 1, 7).exponent() == 3);
    CHECK(make_char(Prime(7), 4, 2400).exponent() == 0);
    CHECK(make_char(Prime(5), 2, -1).exponent() == 23);
    CHECK_THROWS_AS(make_char(Prime(5), 3, 1), validation_error);
    CHECK_THROWS_AS(Prime(4), validation_error);
    CHECK_THROWS_AS(Prime(2), validation_error);
    CHECK_THROWS_AS(Prime(9), validation_error);
}

TEST_CASE("cyclotomic restriction to higher level") {
    CHECK(cyclotomic_as_level(Prime(5), 2, 1).exponent() == 6);
    CHECK(cyclotomic_as_level(Prime(5), 1, 3).exponent() == 3);
    CHECK(cyclotomic_as_level(Prime(3), 4, 2).exponent() == 0);

    // Degenerate exactly when k = 0 mod p-1, at every level.
    for (std::int64_t pv : {3, 5, 7}) {
        Prime p(pv);
        for (int level : {1, 2, 4})
            for (std::int64_t k = 0; k < 3 * (pv - 1); ++k)
                CHECK(cyclotomic_as_level(p, level, k).is_trivial_on_inertia() ==
                      (k % (pv - 1) == 0));
    }
}

TEST_CASE("cyclotomic restriction recovers the level-1 exponent") {
    for (std::int64_t pv : {3, 5, 7}) {
        Prime p(pv);
        for (int level : {2, 4}) {
            const std::int64_t norm = p.level_modulus(level) / p.residue_modulus();
            for (std::int64_t k = 0; k < pv - 1; ++k) {
                const auto chi = cyclotomic_as_level(p, level, k);
                CHECK(chi.exponent() % norm == 0);
                CHECK((chi.exponent() / norm) % (pv - 1) == k);
            }
        }
    }
}

TEST_CASE("frobenius orbits and irreducibility certificates") {
    const auto orbit = frobenius_orbit(make_char(Prime(5), 2, 16));
    REQUIRE(orbit.size() == 2);
    CHECK(orbit[0].exponent() == 16);
    CHECK(orbit[1].exponent() == 8);

    // eps at level 2 is Frobenius-stable: reducible induction.
    CHECK(frobenius_orbit(make_char(Prime(5), 2, 6)).size() == 1);

    // exponent divisible by p^2+1 collapses the level-4 orbit
    CHECK(frobenius_orbit(make_char(Prime(3), 4, 10)).size() <= 2);
}

TEST_CASE("frobenius orbit is a group action") {
    for (std::int64_t pv : {3, 5}) {
        Prime p(pv);
        for (int level : {1, 2, 4})
            for (std::int64_t e = 0; e < p.level_modulus(level); ++e) {
                InertiaCharacter chi = make_char(p, level, e);
                InertiaCharacter cur = chi;
                for (int i = 0; i < level; ++i) cur = cur.frobenius();
                CHECK(cur == chi);
                CHECK(frobenius_orbit(chi).size() <= static_cast<std::size_t>(level));
            }
    }
}

TEST_CASE("digit expansions") {
    const auto dv = digits(make_char(Prime(5), 4, 84));
    CHECK(dv.digits == std::vector<std::int64_t>{4, 1, 3, 0});
    CHECK(digits(make_char(Prime(7), 2, 0)).digits == std::vector<std::int64_t>{0, 0});
    CHECK(digits(make_char(Prime(5), 1, 3)).digits == std::vector<std::int64_t>{3});
}

TEST_CASE("digits round-trip with make_char, exhaustively") {
    for (std::int64_t pv : {3, 5, 7}) {
        Prime p(pv);
        for (int level : {1, 2, 4})
            for (std::int64_t e = 0; e < p.level_modulus(level); ++e) {
                const InertiaCharacter chi = make_char(p, level, e);
                CHECK(make_char(digits(chi)) == chi);
            }
    }
}

TEST_CASE("eps^(p-1) is trivial at every level") {
    for (std::int64_t pv : {3, 5, 7, 11}) {
        Prime p(pv);
        for (int level : {1, 2, 4})
            CHECK(cyclotomic_as_level(p, level, pv - 1).is_trivial_on_inertia());
    }
}
