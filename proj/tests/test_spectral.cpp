#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "qfrob/hecke.hpp"
#include "qfrob/spectral.hpp"
#include "support/classical_sym.hpp"

using namespace qfrob;

namespace {
const RatFunc qq = RatFunc::q(1), qi = RatFunc::q(-1);
const RatFunc qbar = qq - qi;
}

TEST_CASE("symmetric polynomial building blocks") {
    // e_1 in two scaled variables
    auto e1 = sym_poly(SymKind::Elementary, 1, {0, 1}, qi, 2);
    CHECK(e1 == (MultiPoly::variable(2, 0) + MultiPoly::variable(2, 1)).scaled(qi));
    // e_3 of two variables vanishes
    CHECK(sym_poly(SymKind::Elementary, 3, {0, 1}, RatFunc(1), 2).is_zero());
    // h_2 of one variable is its square
    CHECK(sym_poly(SymKind::Complete, 2, {0}, RatFunc(1), 1) == MultiPoly::variable(1, 0, 2));
    CHECK(sym_poly(SymKind::Elementary, 0, {0}, RatFunc(1), 1) ==
          MultiPoly::constant(1, RatFunc(1)));
}

TEST_CASE("even eigenvalue relations") {
    SpectralFamily f(2, 0);
    auto mu1 = MultiPoly::variable(2, 0), mu2 = MultiPoly::variable(2, 1);
    auto er = eigen_relations(f);
    REQUIRE(er.size() == 2);
    CHECK(er[0] == (mu1 + mu2).scaled(qi));             // q e_1 = mu1 + mu2
    CHECK(er[1] == (mu1 * mu2).scaled(RatFunc::q(-2)));  // q^2 e_2 = mu1 mu2
    SpectralFamily f1(1, 0);
    CHECK(eigen_relations(f1)[0] == MultiPoly::variable(1, 0).scaled(qi));
    CHECK_THROWS_AS(eigen_relations(SpectralFamily(1, 1)), FamilyError);
    // these agree with the one-column Schur values
    CHECK(er[1] == schur_spectral(f, Partition{1, 1}));
}

TEST_CASE("spectral power sums match the worked examples") {
    SpectralFamily f20(2, 0);
    auto mu1 = MultiPoly::variable(2, 0), mu2 = MultiPoly::variable(2, 1);
    CHECK(power_sum_spectral(f20, 1) == (mu1 + mu2).scaled(qi));
    CHECK(power_sum_spectral(f20, 2) ==
          (mu1.pow(2) + mu2.pow(2)).scaled(qi) + (mu1 * mu2).scaled(RatFunc::q(-2) * qbar));
    CHECK(power_sum_spectral(f20, 3) ==
          (mu1.pow(3) + mu2.pow(3)).scaled(qi) +
              (mu1 * mu2 * (mu1 + mu2)).scaled(RatFunc::q(-2) * qbar));

    SpectralFamily f11(1, 1);
    auto mu = MultiPoly::variable(2, 0), nu = MultiPoly::variable(2, 1);
    auto p1 = mu.scaled(qi) - nu.scaled(qq);
    CHECK(power_sum_spectral(f11, 1) == p1);
    CHECK(power_sum_spectral(f11, 2) == (mu + nu) * p1);
    CHECK(power_sum_spectral(f11, 3) == (mu.pow(2) + mu * nu + nu.pow(2)) * p1);

    // always a polynomial (exact division succeeds) for every family tested
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; n + m <= 4; ++n) {
            if (m + n == 0) continue;
            for (int k = 1; k <= 5; ++k)
                CHECK_NOTHROW(power_sum_spectral(SpectralFamily(m, n), k));
        }
}

TEST_CASE("spectral Schur values match the worked examples") {
    SpectralFamily f20(2, 0);
    auto mu1 = MultiPoly::variable(2, 0), mu2 = MultiPoly::variable(2, 1);
    CHECK(schur_spectral(f20, Partition{3}) ==
          (mu1.pow(3) + mu2.pow(3) + mu1 * mu2 * (mu1 + mu2)).scaled(RatFunc::q(-3)));
    CHECK(schur_spectral(f20, Partition{2, 1}) ==
          (mu1 * mu2 * (mu1 + mu2)).scaled(RatFunc::q(-3)));
    CHECK(schur_spectral(f20, Partition{1, 1, 1}).is_zero());

    SpectralFamily f11(1, 1);
    auto mu = MultiPoly::variable(2, 0), nu = MultiPoly::variable(2, 1);
    auto p1 = mu.scaled(qi) - nu.scaled(qq);
    CHECK(schur_spectral(f11, Partition{3}) == mu.pow(2).scaled(RatFunc::q(-2)) * p1);
    CHECK(schur_spectral(f11, Partition{2, 1}) == -(mu * nu) * p1);
    CHECK(schur_spectral(f11, Partition{1, 1, 1}) == nu.pow(2).scaled(RatFunc::q(2)) * p1);

    CHECK(schur_spectral(f11, Partition{1}) == power_sum_spectral(f11, 1));
}

TEST_CASE("quantum Newton identities") {
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; n + m <= 4; ++n) {
            if (m + n == 0) continue;
            for (int k = 1; k <= 5; ++k) CHECK(newton_check(SpectralFamily(m, n), k));
        }
}

TEST_CASE("Hall-Littlewood comparison") {
    // worked example: q_1 = (1 - t)(x1 + x2)
    auto q1 = hall_littlewood_row(1, 2, RatFunc::q(-2));
    CHECK(q1 == (MultiPoly::variable(2, 0) + MultiPoly::variable(2, 1))
                    .scaled(RatFunc(1) - RatFunc::q(-2)));
    for (int m = 1; m <= 3; ++m)
        for (int k = 1; k <= 4; ++k) CHECK(hl_compare(SpectralFamily(m, 0), k));
    CHECK_THROWS_AS(hl_compare(SpectralFamily(1, 1), 1), FamilyError);
}

TEST_CASE("super-symmetry") {
    SpectralFamily f11(1, 1), f21(2, 1);
    for (int k = 1; k <= 3; ++k) {
        CHECK(supersymmetry_check(power_sum_spectral(f11, k), f11));
        CHECK(supersymmetry_check(power_sum_spectral(f21, k), f21));
    }
    CHECK(supersymmetry_check(schur_spectral(f21, Partition{2, 1}), f21));
    CHECK(supersymmetry_check(schur_spectral(f11, Partition{2}), f11));
    // wrong scaling breaks the cancellation
    CHECK(!supersymmetry_check(MultiPoly::variable(2, 0) + MultiPoly::variable(2, 1), f11));
    CHECK_THROWS_AS(supersymmetry_check(MultiPoly(2), SpectralFamily(2, 0)), FamilyError);
}

TEST_CASE("classical limits against the classical oracle") {
    using testsupport::classical_schur;
    // p_k -> sum mu^k - sum nu^k
    for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 0}, {1, 1}, {2, 1}})
        for (int k = 1; k <= 3; ++k) {
            SpectralFamily f(m, n);
            MultiPoly lim = classical_limit(power_sum_spectral(f, k));
            MultiPoly expect(f.nvars());
            for (int i = 0; i < m; ++i) expect += MultiPoly::variable(f.nvars(), i, k);
            for (int j = 0; j < n; ++j) expect -= MultiPoly::variable(f.nvars(), m + j, k);
            CHECK(lim == expect);
        }
    // s_lambda -> classical Schur for even families
    for (int m = 2; m <= 3; ++m) {
        SpectralFamily f(m, 0);
        for (int deg = 1; deg <= 3; ++deg)
            for (const auto& lam : all_partitions(deg))
                CHECK(classical_limit(schur_spectral(f, lam)) == classical_schur(lam, m));
    }
    CHECK_THROWS_AS(classical_limit(MultiPoly::constant(1, RatFunc(1) / (RatFunc::q() - RatFunc(1)))),
                    PoleAtPoint);
}

TEST_CASE("spectral Frobenius identity, n up to 4") {
    for (int n = 2; n <= 4; ++n) {
        auto parts = all_partitions(n);
        auto table = character_table(n);
        for (auto [m, nn] : std::vector<std::pair<int, int>>{{2, 0}, {1, 1}, {3, 0}, {2, 1}}) {
            SpectralFamily f(m, nn);
            for (std::size_t r = 0; r < parts.size(); ++r) {
                MultiPoly lhs = power_sum_spectral(f, parts[r]);
                MultiPoly rhs(f.nvars());
                for (std::size_t c = 0; c < parts.size(); ++c)
                    rhs += schur_spectral(f, parts[c])
                               .scaled(table.at(static_cast<int>(r), static_cast<int>(c)));
                CHECK(lhs == rhs);
            }
        }
    }
}
