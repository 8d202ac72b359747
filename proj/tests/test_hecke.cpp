#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "qfrob/hecke.hpp"
#include "support/sn_oracle.hpp"

using namespace qfrob;

namespace {

const RatFunc qbar = RatFunc::q(1) - RatFunc::q(-1);

HeckeElement random_element(std::mt19937& rng, int n) {
    auto perms = all_perms(n);
    std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
    std::uniform_int_distribution<int> coeff(-2, 2), expo(-2, 2);
    HeckeElement out(n);
    for (int t = 0; t < 3; ++t)
        out += HeckeElement::basis(n, perms[pick(rng)],
                                   RatFunc(coeff(rng)) + RatFunc(coeff(rng)) * RatFunc::q(expo(rng)));
    return out;
}

}  // namespace

TEST_CASE("defining relations up to n = 5") {
    for (int n = 2; n <= 5; ++n) {
        for (int i = 1; i <= n - 1; ++i) {
            auto ti = HeckeElement::generator(n, i);
            CHECK(multiply(ti, ti) == HeckeElement::unit(n) + ti.scaled(qbar));
            if (i + 1 <= n - 1) {
                auto tj = HeckeElement::generator(n, i + 1);
                CHECK(multiply(multiply(ti, tj), ti) == multiply(multiply(tj, ti), tj));
            }
            for (int j = i + 2; j <= n - 1; ++j) {
                auto tj = HeckeElement::generator(n, j);
                CHECK(multiply(ti, tj) == multiply(tj, ti));
            }
        }
    }
}

TEST_CASE("unit and associativity") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        auto x = random_element(rng, 4), y = random_element(rng, 4), z = random_element(rng, 4);
        CHECK(multiply(HeckeElement::unit(4), x) == x);
        CHECK(multiply(x, HeckeElement::unit(4)) == x);
        CHECK(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)));
    }
    CHECK_THROWS_AS(multiply(HeckeElement::unit(3), HeckeElement::unit(4)), DimensionMismatch);
}

TEST_CASE("Jucys-Murphy elements") {
    CHECK(jucys_murphy(4, 1) == HeckeElement::unit(4));
    CHECK(jucys_murphy(3, 2) ==
          HeckeElement::unit(3) + HeckeElement::generator(3, 1).scaled(qbar));
    auto j2 = jucys_murphy(3, 2), j3 = jucys_murphy(3, 3);
    CHECK(multiply(j2, j3) == multiply(j3, j2));
    for (int k = 1; k <= 4; ++k)
        for (int l = k + 1; l <= 4; ++l)
            CHECK(multiply(jucys_murphy(4, k), jucys_murphy(4, l)) ==
                  multiply(jucys_murphy(4, l), jucys_murphy(4, k)));
    CHECK_THROWS_AS(jucys_murphy(3, 4), IndexError);
}

TEST_CASE("symmetrizers") {
    auto a2 = antisymmetrizer(2);
    CHECK(a2 == (HeckeElement::unit(2).scaled(RatFunc::q()) - HeckeElement::generator(2, 1))
                    .scaled(q_int(2).inverse()));
    for (int k = 2; k <= 4; ++k) {
        auto a = antisymmetrizer(k);
        CHECK(multiply(a, a) == a);
        auto h = symmetrizer(k);
        CHECK(multiply(h, h) == h);
    }
    CHECK(multiply(symmetrizer(2), antisymmetrizer(2)).is_zero());
}

TEST_CASE("primitive idempotents") {
    // column tableau of shape (1,1) gives the antisymmetrizer
    auto col = StdTableau(Partition{1, 1}, {{1}, {2}});
    CHECK(primitive_idempotent(col) == antisymmetrizer(2));
    // row tableau of shape (2): j_2 e = q^2 e
    auto row = StdTableau(Partition{2}, {{1, 2}});
    auto e_row = primitive_idempotent(row);
    CHECK(multiply(jucys_murphy(2, 2), e_row) == e_row.scaled(RatFunc::q(2)));

    for (int n = 2; n <= 4; ++n) {
        HeckeElement sum(n);
        std::vector<HeckeElement> all;
        for (const auto& lam : all_partitions(n))
            for (const auto& t : standard_tableaux(lam)) {
                auto e = primitive_idempotent(t);
                CHECK(multiply(e, e) == e);
                // JM eigenvalues q^{2 c(k)} on both sides
                for (int k = 1; k <= n; ++k) {
                    auto jk = jucys_murphy(n, k);
                    CHECK(multiply(jk, e) == e.scaled(RatFunc::q(2 * t.content(k))));
                    CHECK(multiply(e, jk) == e.scaled(RatFunc::q(2 * t.content(k))));
                }
                all.push_back(std::move(e));
                sum += all.back();
            }
        CHECK(sum == HeckeElement::unit(n));
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = 0; j < all.size(); ++j)
                if (i != j) CHECK(multiply(all[i], all[j]).is_zero());
    }
}

TEST_CASE("tableau counting") {
    // sum of squares of tableau counts is n!
    long fact = 1;
    for (int n = 1; n <= 6; ++n) {
        fact *= n;
        long sum = 0;
        for (const auto& lam : all_partitions(n)) {
            long d = tableau_count(lam);
            CHECK(d == static_cast<long>(standard_tableaux(lam).size()));
            sum += d * d;
        }
        CHECK(sum == fact);
    }
}

TEST_CASE("Coxeter elements with gaps") {
    CHECK(coxeter_word(Partition{4}) == std::vector<int>{3, 2, 1});
    CHECK(coxeter_with_gaps(Partition{1, 1, 1}) == HeckeElement::unit(3));
    CHECK(coxeter_word(Partition{4, 2, 1}) == std::vector<int>{3, 2, 1, 5});
}

TEST_CASE("characters for n = 2 and 3") {
    CHECK(character(Partition{2}, HeckeElement::generator(2, 1)) == RatFunc::q());
    CHECK(character(Partition{1, 1}, HeckeElement::generator(2, 1)) == -RatFunc::q(-1));
    CHECK(character(Partition{2, 1}, HeckeElement::unit(3)) == RatFunc(2));

    auto table = character_table(3);
    const RatFunc expected[3][3] = {
        {RatFunc::q(2), -RatFunc(1), RatFunc::q(-2)},
        {RatFunc::q(), qbar, -RatFunc::q(-1)},
        {RatFunc(1), RatFunc(2), RatFunc(1)},
    };
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) CHECK(table.at(r, c) == expected[r][c]);

    auto table2 = character_table(2);
    CHECK(table2.at(0, 0) == RatFunc::q());
    CHECK(table2.at(0, 1) == -RatFunc::q(-1));
    CHECK(table2.at(1, 0) == RatFunc(1));
    CHECK(table2.at(1, 1) == RatFunc(1));

    CHECK_THROWS_AS(character_table(6, 5), BoundExceeded);
}

TEST_CASE("character trace property and tableau independence") {
    std::mt19937 rng(23);
    LeftIdealTrace tr(Partition{2, 1});
    for (int trial = 0; trial < 6; ++trial) {
        auto x = random_element(rng, 3), y = random_element(rng, 3);
        CHECK(tr.value(multiply(x, y)) == tr.value(multiply(y, x)));
    }

    // chi^lambda(z) equals the trace of x -> z x e_T on the whole algebra,
    // for either standard tableau T of the shape.
    auto z = random_element(rng, 3);
    for (const auto& t : standard_tableaux(Partition{2, 1})) {
        auto e = primitive_idempotent(t);
        RatFunc trace;
        for (const auto& w : all_perms(3)) {
            auto x = multiply(multiply(z, HeckeElement::basis(3, w)), e);
            trace += x.coeff(w);
        }
        CHECK(trace == character(Partition{2, 1}, z));
    }

    // sum_lambda d_lambda chi^lambda(z) is the regular trace of z
    RatFunc reg;
    for (const auto& lam : all_partitions(3))
        reg += character(lam, z) * RatFunc(Rational(tableau_count(lam)));
    RatFunc brute;
    for (const auto& w : all_perms(3))
        brute += multiply(z, HeckeElement::basis(3, w)).coeff(w);
    CHECK(reg == brute);
}

TEST_CASE("gap placement invariance of characters, all types of 4") {
    for (const auto& nu : all_partitions(4)) {
        auto alt = [&]() -> std::vector<std::vector<int>> {
            std::vector<std::vector<int>> words{coxeter_word(nu)};
            // shift every string one slot right when there is room
            auto word = coxeter_word(nu);
            if (!word.empty()) {
                int mx = *std::max_element(word.begin(), word.end());
                if (mx + 1 <= nu.n() - 1) {
                    for (int& g : word) ++g;
                    words.push_back(word);
                }
            }
            return words;
        }();
        if (alt.size() < 2) continue;
        for (const auto& lam : all_partitions(4)) {
            LeftIdealTrace tr(lam);
            CHECK(tr.value_word(alt[0]) == tr.value_word(alt[1]));
        }
    }
}

TEST_CASE("value and value_word agree") {
    for (const auto& nu : all_partitions(4)) {
        auto z = coxeter_with_gaps(nu);
        for (const auto& lam : all_partitions(4)) {
            LeftIdealTrace tr(lam);
            CHECK(tr.value(z) == tr.value_word(coxeter_word(nu)));
        }
    }
}

TEST_CASE("character table at the default bound") {
    auto table = character_table(5);
    auto parts = all_partitions(5);
    // the identity row lists the dimensions
    for (std::size_t c = 0; c < parts.size(); ++c)
        CHECK(table.at(static_cast<int>(parts.size()) - 1, static_cast<int>(c)) ==
              RatFunc(Rational(tableau_count(parts[c]))));
}

TEST_CASE("q -> 1 recovers the symmetric group character table") {
    using testsupport::sn_character_table;
    for (int n = 3; n <= 4; ++n) {
        auto oracle = sn_character_table(n);
        auto parts = all_partitions(n);
        auto table = character_table(n);
        // each Hecke column matches exactly one oracle character
        std::vector<bool> used(oracle.chi.size(), false);
        for (std::size_t c = 0; c < parts.size(); ++c) {
            std::vector<Rational> col;
            for (std::size_t r = 0; r < parts.size(); ++r)
                col.push_back(table.at(static_cast<int>(r), static_cast<int>(c))
                                  .specialize(Rational(1)));
            int match = -1;
            for (std::size_t o = 0; o < oracle.chi.size(); ++o) {
                if (used[o]) continue;
                if (oracle.chi[o] == col) {
                    match = static_cast<int>(o);
                    break;
                }
            }
            REQUIRE(match >= 0);
            used[static_cast<std::size_t>(match)] = true;
        }
    }
}
