#include <doctest.h>

#include "gsp4/galois_cohomology.hpp"

using namespace gsp4;

namespace {

InertiaCharacter eps_pow(Prime p, std::int64_t k, std::string twist = {}) {
    return make_char(p, 1, k, std::move(twist));
}

}  // namespace

TEST_CASE("two-dimensional H^1 dimension table") {
    Prime p(5);
    CHECK(h1_dim_2dim(p, eps_pow(p, 0), eps_pow(p, 1)) == 4);
    CHECK(h1_dim_2dim(p, eps_pow(p, 0), eps_pow(p, 2)) == 3);
    CHECK(h1_dim_2dim(p, eps_pow(p, 3), eps_pow(p, 2)) == 2);
    // unramified twists break the coincidences
    CHECK(h1_dim_2dim(p, eps_pow(p, 0, "psi"), eps_pow(p, 1)) == 3);
    CHECK(h1_dim_2dim(p, eps_pow(p, 0, "psi"), eps_pow(p, 1, "psi")) == 2);
}

TEST_CASE("dimension table matches the Euler-characteristic count, exhaustively") {
    for (std::int64_t pv : {3, 5, 7}) {
        Prime p(pv);
        for (std::int64_t e1 = 0; e1 < pv - 1; ++e1)
            for (std::int64_t e2 = 0; e2 < pv - 1; ++e2)
                for (int t1 = 0; t1 < 2; ++t1)
                    for (int t2 = 0; t2 < 2; ++t2) {
                        const auto c1 = eps_pow(p, e1, t1 ? "u" : "");
                        const auto c2 = eps_pow(p, e2, t2 ? "u" : "");
                        // Independent count: 2 + h^0(sub) + h^0(dual twist of quotient).
                        const int h0 = (e1 == 0 && t1 == 0) ? 1 : 0;
                        const int h2 = (e2 % (pv - 1) == 1 % (pv - 1) && t2 == 0) ? 1 : 0;
                        CHECK(h1_dim_2dim(p, c1, c2) == 2 + h0 + h2);
                        const int dim = h1_dim_2dim(p, c1, c2);
                        CHECK(dim >= 2);
                        CHECK(dim <= 4);
                    }
    }
}

TEST_CASE("crystalline H^1_f dimensions for characters") {
    Prime p(5);
    CHECK(h1f_dim_char(p, 3, true) == 1);
    CHECK(h1f_dim_char(p, 0, true) == 0);
    CHECK_THROWS_AS(h1f_dim_char(p, 1, false), exceptional_case);
    CHECK_THROWS_AS(h1f_dim_char(p, 0, false), exceptional_case);
    CHECK_THROWS_AS(h1f_dim_char(p, 5, false), exceptional_case);  // residue 1 again
    CHECK(h1f_dim_char(p, 2, false) == 1);

    // never exceeds the H^1 bound for characters
    for (std::int64_t a = 1; a < 12; ++a)
        if (a % 4 != 0 && a % 4 != 1) CHECK(h1f_dim_char(p, a, false) <= 2);
}

TEST_CASE("torsion order") {
    CHECK(torsion_order(1) == 1);
    CHECK(torsion_order(0) == 0);
    CHECK_THROWS_AS(torsion_order(std::nullopt), infinite_torsion);
    // monotone in c(psi)
    for (int c = 0; c < 5; ++c) CHECK(torsion_order(c) <= torsion_order(c + 1));
}

TEST_CASE("twist ledger") {
    Prime p(5);
    const auto tres = lift_twist(p, {eps_pow(p, 1), ExtensionFlag::TresRamifiee});
    CHECK(tres.psi_nontrivial);
    CHECK(tres.r == 4);

    const auto peu = lift_twist(p, {eps_pow(p, 2), ExtensionFlag::PeuRamifiee});
    CHECK_FALSE(peu.psi_nontrivial);
    CHECK(peu.r == 0);

    const auto ram = lift_twist(p, {eps_pow(p, 0), ExtensionFlag::Ramified});
    CHECK(ram.psi_nontrivial);
    CHECK(ram.r == 4);

    CHECK_THROWS_AS(lift_twist(p, {eps_pow(p, 2), ExtensionFlag::TresRamifiee}), validation_error);
    CHECK_THROWS_AS(lift_twist(p, {eps_pow(p, 1), ExtensionFlag::Ramified}), validation_error);

    // r depends on the flag alone
    for (std::int64_t pv : {3, 5, 7}) {
        Prime q(pv);
        for (std::int64_t e = 0; e < pv - 1; ++e)
            for (ExtensionFlag f : {ExtensionFlag::Unramified, ExtensionFlag::PeuRamifiee,
                                    ExtensionFlag::TresRamifiee, ExtensionFlag::Ramified}) {
                if (!flag_legal(q, f, e)) continue;
                const auto entry = lift_twist(q, {eps_pow(q, e), f});
                const bool forced =
                    f == ExtensionFlag::TresRamifiee || f == ExtensionFlag::Ramified;
                CHECK(entry.r == (forced ? pv - 1 : 0));
                CHECK(entry.psi_nontrivial == forced);
            }
    }
}

TEST_CASE("single-character lift weights") {
    Prime p5(5);
    CHECK(lift_char(p5, 1, {eps_pow(p5, 1), ExtensionFlag::PeuRamifiee}, 0).weight == 1);
    CHECK(lift_char(p5, 1, {eps_pow(p5, 1), ExtensionFlag::TresRamifiee}, 1).weight == 5);
    Prime p7(7);
    const auto ram = lift_char(p7, 0, {eps_pow(p7, 0), ExtensionFlag::Ramified}, 1);
    CHECK(ram.weight == 6);
    CHECK(ram.ledger.psi_nontrivial);
    CHECK_THROWS_AS(lift_char(p5, 1, {eps_pow(p5, 1), ExtensionFlag::TresRamifiee}, 0),
                    validation_error);
    CHECK_THROWS_AS(lift_char(p5, 0, {eps_pow(p5, 0), ExtensionFlag::Ramified}, 0),
                    validation_error);
}
