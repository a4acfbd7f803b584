#include <doctest.h>

#include "gsp4/weights.hpp"

using namespace gsp4;

TEST_CASE("lattice membership and parity") {
    CHECK_THROWS_AS(HighestWeight(1, 0, 0), parity_error);
    CHECK(in_X1(Prime(5), HighestWeight(4, 1, 1)));
    CHECK_FALSE(in_X1(Prime(5), HighestWeight(6, 0, 0)));
    CHECK(in_X1(Prime(7), HighestWeight(3, 2, 1)));

    // p-regular is the strictly smaller box
    CHECK(is_p_regular(Prime(7), HighestWeight(3, 2, 1)));
    CHECK_FALSE(is_p_regular(Prime(5), HighestWeight(4, 0, 0)));
    CHECK(in_X1(Prime(5), HighestWeight(4, 0, 0)));
}

TEST_CASE("alcove classification") {
    Prime p5(5);
    CHECK(alcove_of(p5, 3, 1) == Alcove::C0);
    CHECK(alcove_of(p5, 4, 2) == Alcove::C1);
    CHECK(alcove_of(Prime(7), 9, 3) == Alcove::C2);
    CHECK(alcove_of(Prime(7), Rational(21, 2), Rational(9, 2)) == Alcove::C3);
    CHECK(alcove_of(p5, 5, 3) == Alcove::Boundary);   // wall x = p
    CHECK(alcove_of(p5, 3, 3) == Alcove::Boundary);   // wall x = y
    CHECK(alcove_of(p5, -1, -2) == Alcove::Outside);
    // dominant-side classification only: reflected points fall outside
    CHECK(alcove_of(Prime(3), 1, 4) == Alcove::Outside);
}

TEST_CASE("shifted alcove") {
    CHECK(shifted_alcove(Prime(7), HighestWeight(3, 2, 1)) == Alcove::C1);
    CHECK(shifted_alcove(Prime(7), HighestWeight(1, 1, 0)) == Alcove::C0);
    CHECK(shifted_alcove(Prime(5), HighestWeight(3, 2, 1)) == Alcove::Boundary);
}

TEST_CASE("restricted box is tiled by the four shifted alcove closures") {
    for (std::int64_t pv : {5, 7, 11, 13}) {
        Prime p(pv);
        for (std::int64_t a = 0; a <= 3 * pv; ++a)
            for (std::int64_t b = 0; b <= a; ++b) {
                const HighestWeight lambda(a, b, (a + b) % 2);
                const Alcove alc = shifted_alcove(p, lambda);
                CHECK(in_X1(p, lambda) == (alc != Alcove::Outside));
            }
    }
}

TEST_CASE("serre weight equivalence") {
    Prime p(5);
    CHECK(serre_weight_equiv(p, HighestWeight(2, 1, 1), HighestWeight(2, 1, 9)));
    CHECK_FALSE(serre_weight_equiv(p, HighestWeight(2, 1, 1), HighestWeight(2, 1, 5)));
    CHECK_FALSE(serre_weight_equiv(p, HighestWeight(2, 1, 1), HighestWeight(3, 0, 1)));
    CHECK_THROWS_AS(serre_weight_equiv(p, HighestWeight(6, 0, 0), HighestWeight(2, 1, 1)),
                    validation_error);
    // weights off the lattice cannot even be built
    CHECK_THROWS_AS(HighestWeight(3, 1, 1), parity_error);
}

TEST_CASE("serre weight equivalence is an equivalence relation (p = 5)") {
    Prime p(5);
    std::vector<HighestWeight> box;
    for (std::int64_t b = 0; b < 5; ++b)
        for (std::int64_t a = b; a < b + 5; ++a)
            for (std::int64_t c = -8; c <= 8; ++c) {
                if ((a + b - c) % 2 != 0) continue;
                box.emplace_back(a, b, c);
            }
    for (const auto& l : box) CHECK(serre_weight_equiv(p, l, l));
    for (std::size_t i = 0; i < box.size(); i += 7)
        for (std::size_t j = 0; j < box.size(); j += 5) {
            const bool ij = serre_weight_equiv(p, box[i], box[j]);
            CHECK(ij == serre_weight_equiv(p, box[j], box[i]));
            if (ij)
                for (std::size_t k = 0; k < box.size(); k += 3)
                    if (serre_weight_equiv(p, box[j], box[k]))
                        CHECK(serre_weight_equiv(p, box[i], box[k]));
        }
}

TEST_CASE("weyl module constituents in the lowest alcoves") {
    const auto pair = weyl_constituents(Prime(7), HighestWeight(3, 2, 1));
    REQUIRE(pair.size() == 2);
    CHECK(pair[0] == SerreWeightLabel{3, 2, 1});  // socle
    CHECK(pair[1] == SerreWeightLabel{2, 1, 1});

    const auto single = weyl_constituents(Prime(7), HighestWeight(1, 1, 0));
    REQUIRE(single.size() == 1);
    CHECK(single[0] == SerreWeightLabel{1, 1, 0});

    const auto p5 = weyl_constituents(Prime(5), HighestWeight(2, 2, 0));
    REQUIRE(p5.size() == 2);
    CHECK(p5[1] == SerreWeightLabel{0, 0, 0});

    CHECK_THROWS_AS(weyl_constituents(Prime(5), HighestWeight(3, 2, 1)), unsupported_weight);
    CHECK_THROWS_AS(weyl_constituents(Prime(5), HighestWeight(4, 4, 0)), unsupported_weight);
}

TEST_CASE("companion formula is an involution on the upper alcove") {
    for (std::int64_t pv : {5, 7, 11, 13}) {
        Prime p(pv);
        for (std::int64_t a = 0; a < 2 * pv; ++a)
            for (std::int64_t b = 0; b <= a; ++b) {
                const HighestWeight lambda(a, b, (a + b) % 2);
                if (!in_X1(p, lambda) || shifted_alcove(p, lambda) != Alcove::C1) continue;
                const HighestWeight mu(pv - b - 3, pv - a - 3, lambda.c);
                CHECK(in_X1(p, mu));
                CHECK(shifted_alcove(p, mu) == Alcove::C0);
                CHECK(HighestWeight(pv - mu.b - 3, pv - mu.a - 3, mu.c) == lambda);
            }
    }
}

TEST_CASE("archimedean dimension formula") {
    CHECK(weyl_dim(2, 1) == 1);
    CHECK(weyl_dim(3, 2) == 5);
    CHECK(weyl_dim(4, 1) == 10);
    CHECK_THROWS_AS(weyl_dim(1, 2), validation_error);

    for (std::int64_t m1 = 2; m1 <= 12; ++m1)
        for (std::int64_t m2 = 1; m2 < m1; ++m2)
            CHECK(weyl_dim(m1, m2) >= 1);
    CHECK(weyl_dim(2, 1) == 1);  // equality exactly at the weight-zero parameter
}

TEST_CASE("hodge-tate weights from the archimedean parameter") {
    CHECK(ht_from_parameter(0, 2, 1) == std::array<std::int64_t, 4>{0, 1, 2, 3});
    CHECK(ht_from_parameter(2, 3, 2) == std::array<std::int64_t, 4>{0, 2, 3, 5});
    CHECK_THROWS_AS(ht_from_parameter(3, 3, 2), parity_error);

    for (std::int64_t w = -4; w <= 8; ++w)
        for (std::int64_t m1 = 2; m1 <= 9; ++m1)
            for (std::int64_t m2 = 1; m2 < m1; ++m2) {
                if ((m1 + m2 - (w + 1)) % 2 != 0) continue;
                const auto ht = ht_from_parameter(w, m1, m2);
                CHECK(ht[0] + ht[3] == ht[1] + ht[2]);
                CHECK(ht[0] + ht[3] == w + 3);
            }
}

TEST_CASE("parameter to highest weight") {
    CHECK(hc_to_weight(2, 1, 0) == HighestWeight(0, 0, 0));
    CHECK(hc_to_weight(5, 3, 1) == HighestWeight(3, 2, 1));
    CHECK_THROWS_AS(hc_to_weight(4, 2, 2), parity_error);
}
