#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <memory>
#include <random>
#include <set>

#include "doctest.h"
#include "qfrob/re_algebra.hpp"
#include "support/classical_sym.hpp"

using namespace qfrob;

namespace {

const RatFunc qbar = RatFunc::q(1) - RatFunc::q(-1);

ReAlgebra& algebra(const char* name) {
    static std::map<std::string, std::unique_ptr<ReAlgebra>> cache;
    auto it = cache.find(name);
    if (it == cache.end())
        it = cache.emplace(name, std::make_unique<ReAlgebra>(builtin(name))).first;
    return *it->second;
}

// Forget the order of letters: image in the commutative polynomial ring.
MultiPoly abelianized(const NCPoly& p) {
    const int nv = p.n() * p.n();
    MultiPoly out(nv);
    for (const auto& [w, c] : p.terms()) {
        std::vector<int> e(static_cast<std::size_t>(nv), 0);
        for (char ch : w) ++e[static_cast<std::size_t>(static_cast<unsigned char>(ch))];
        out.add_term(e, c);
    }
    return out;
}

}  // namespace

TEST_CASE("defining relations and ideal components") {
    auto& alg = algebra("r2");
    // every relation is homogeneous quadratic in the 4 generators
    for (const auto& r : alg.relations()) CHECK(r.homogeneous_degree() == 2);
    // rank 6 in the 16-dimensional degree-2 word space, quotient 10
    CHECK(alg.ideal_component(2).rank() == 6);
    CHECK(alg.ideal_component(2).quotient_dim() == 10);
    // degree 3: quotient 20 (= monomials of degree 3 in 4 commuting variables)
    CHECK(alg.ideal_component(3).quotient_dim() == 20);
    // relations reduce to zero; every basis vector reduces to zero
    for (const auto& r : alg.relations()) CHECK(alg.reduces_to_zero(r));
    for (const auto& b : alg.ideal_component(2).basis_polynomials(2))
        CHECK(alg.reduces_to_zero(b));
    CHECK_THROWS_AS(alg.ideal_component(1), IndexError);
}

TEST_CASE("relations become commutators at q = 1") {
    // with R specialized at q = 1 the relations abelianize to zero
    auto& alg = algebra("r2");
    for (const auto& r : alg.relations()) {
        MultiPoly ab = abelianized(r);
        MultiPoly lim(4);
        for (const auto& [e, c] : ab.terms()) lim.add_term(e, RatFunc(c.specialize(Rational(1))));
        CHECK(lim.is_zero());
    }
}

TEST_CASE("normal form") {
    auto& alg = algebra("r2");
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> gen(0, 3);
    auto random_word = [&](int len) {
        Word w;
        for (int i = 0; i < len; ++i) w.push_back(static_cast<char>(gen(rng)));
        return w;
    };
    // a word that is no row's leading word is its own normal form
    {
        const auto& basis = alg.ideal_component(2);
        std::set<long> pivots;
        for (const auto& row : basis.rows()) pivots.insert(row.pivot);
        long free_col = -1;
        for (long col = 0; col < basis.word_dim(); ++col)
            if (!pivots.count(col)) {
                free_col = col;
                break;
            }
        REQUIRE(free_col >= 0);
        Word w;
        w.push_back(static_cast<char>(free_col / 4));
        w.push_back(static_cast<char>(free_col % 4));
        NCPoly mono = NCPoly::term(2, w, RatFunc(1));
        CHECK(alg.normal_form(mono) == mono);
    }
    // membership invariance: normal_form(p + u r v) = normal_form(p)
    for (int trial = 0; trial < 8; ++trial) {
        const auto& rels = alg.relations();
        NCPoly r = rels[static_cast<std::size_t>(trial) % rels.size()];
        NCPoly u = NCPoly::term(2, random_word(1), RatFunc(1));
        NCPoly v = NCPoly::term(2, random_word(1), RatFunc(1));
        NCPoly p = NCPoly::term(2, random_word(4), RatFunc::q(1) + RatFunc(2));
        CHECK(alg.normal_form(p + u * r * v) == alg.normal_form(p));
    }
    CHECK_THROWS_AS(alg.normal_form(NCPoly::generator(2, 0, 0) +
                                    NCPoly::generator(2, 0, 0) * NCPoly::generator(2, 1, 1)),
                    DegreeMismatch);
}

TEST_CASE("L products and the braid exchange identity") {
    auto& alg = algebra("r2");
    // k = 1 is the generating matrix itself
    CHECK(alg.l_product(1) == LMatrix::generating(2));
    // L_<2> entrywise: R L1 R^-1
    {
        const auto& s = alg.symmetry();
        LMatrix l1(4, 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int a = 0; a < 2; ++a)
                    l1.at(i * 2 + a, j * 2 + a) = NCPoly::generator(2, i, j);
        LMatrix l2 = mul_scalar_left(s.r(), mul_scalar_right(l1, s.r_inverse()));
        CHECK(alg.l_product(2) == l1 * l2);
    }
    // (R_{n-1} ... R_1) L_<1..n> = L_<1..n> (R_{n-1} ... R_1) modulo the ideal
    for (int n = 2; n <= 3; ++n) {
        ScalarMatrix chain = ScalarMatrix::identity(n == 2 ? 4 : 8);
        for (int i = n - 1; i >= 1; --i)
            chain = chain * embed_factor(alg.symmetry().r(), i, n);
        LMatrix lhs = mul_scalar_left(chain, alg.l_product(n));
        LMatrix rhs = mul_scalar_right(alg.l_product(n), chain);
        for (int i = 0; i < lhs.dim(); ++i)
            for (int j = 0; j < lhs.dim(); ++j)
                CHECK(alg.reduces_to_zero(lhs.at(i, j) - rhs.at(i, j)));
    }
}

TEST_CASE("characteristic map") {
    auto& alg = algebra("r2");
    // ch(e, 1) = Tr_R L = p_1
    CHECK(alg.ch(HeckeElement::unit(1), 1) == alg.power_sum(1));
    // ch(tau_1, 2) == p_2 modulo the ideal
    CHECK(alg.reduces_to_zero(alg.ch(HeckeElement::generator(2, 1), 2) - alg.power_sum(2)));
    // both trace orders agree exactly
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (int n = 2; n <= 3; ++n) {
        auto perms = all_perms(n);
        std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
        HeckeElement z(n);
        for (int t = 0; t < 3; ++t)
            z += HeckeElement::basis(n, perms[pick(rng)], RatFunc(coeff(rng)) + RatFunc::q(coeff(rng)));
        ScalarMatrix m = rho(alg.symmetry(), z, n);
        ScalarMatrix cc = alg.c_power(n);
        NCPoly left = alg.traced_pairing(cc * m, alg.l_product(n));
        NCPoly right = alg.traced_pairing(m * cc, alg.l_product(n));
        CHECK(left == right);
        CHECK(alg.ch(z, n) == left);
    }
    // centrality of ch(z, n) for random z
    for (int n = 2; n <= 3; ++n) {
        for (const auto* name : {"r2", "r11"}) {
            auto& a = algebra(name);
            auto z = HeckeElement::generator(n, 1).scaled(RatFunc::q(2)) + HeckeElement::unit(n);
            CHECK(a.is_central(a.normal_form(a.ch(z, n))));
        }
    }
}

TEST_CASE("power sums") {
    auto& alg = algebra("r2");
    // p_1 = sum C_j^i l_i^j
    NCPoly expect(2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            expect += NCPoly::generator(2, i, j).scaled(alg.skew().c.at(j, i));
    CHECK(alg.power_sum(1) == expect);
    // p_(1,1) = p_1 p_1
    CHECK(alg.power_sum(Partition{1, 1}) == alg.power_sum(1) * alg.power_sum(1));
    // factor order does not matter modulo the ideal
    NCPoly p21 = alg.power_sum(2) * alg.power_sum(1);
    NCPoly p12 = alg.power_sum(1) * alg.power_sum(2);
    CHECK(alg.reduces_to_zero(p21 - p12));
}

TEST_CASE("Schur polynomials") {
    for (const auto* name : {"r2", "r11"}) {
        auto& alg = algebra(name);
        CHECK(alg.schur(Partition{1}) == alg.power_sum(1));
        // tableau independence of the normal form
        auto tabs = standard_tableaux(Partition{2, 1});
        CHECK(alg.normal_form(alg.schur(tabs[0])) == alg.normal_form(alg.schur(tabs[1])));
    }
    CHECK(algebra("r2").reduces_to_zero(algebra("r2").schur(Partition{1, 1, 1})));
    CHECK(algebra("r2").is_central(algebra("r2").normal_form(algebra("r2").schur(Partition{2, 1}))));
    CHECK(algebra("r11").is_central(algebra("r11").normal_form(algebra("r11").schur(Partition{2, 1}))));
}

TEST_CASE("Littlewood-Richardson, small cases, against the classical oracle") {
    // classical coefficients by expanding products of classical Schur
    // polynomials in 6 commuting variables
    using testsupport::classical_schur;
    using testsupport::schur_expand;
    auto prod11 = classical_schur(Partition{1}, 6) * classical_schur(Partition{1}, 6);
    auto c11 = schur_expand(prod11, 6);
    CHECK(c11.size() == 2);
    CHECK(c11.at({2}) == 1);
    CHECK(c11.at({1, 1}) == 1);
    auto prod21 = classical_schur(Partition{2}, 6) * classical_schur(Partition{1}, 6);
    auto c21 = schur_expand(prod21, 6);
    CHECK(c21.size() == 2);
    CHECK(c21.at({3}) == 1);
    CHECK(c21.at({2, 1}) == 1);

    for (const auto* name : {"r2", "r11"}) {
        auto& alg = algebra(name);
        NCPoly lhs1 = alg.schur(Partition{1}) * alg.schur(Partition{1});
        NCPoly rhs1 = alg.schur(Partition{2}) + alg.schur(Partition{1, 1});
        CHECK(alg.reduces_to_zero(lhs1 - rhs1));
        NCPoly lhs2 = alg.schur(Partition{2}) * alg.schur(Partition{1});
        NCPoly rhs2 = alg.schur(Partition{3}) + alg.schur(Partition{2, 1});
        CHECK(alg.reduces_to_zero(lhs2 - rhs2));
    }
}

TEST_CASE("representations") {
    for (const auto* name : {"r2", "r11"}) {
        auto& alg = algebra(name);
        const auto& reps1 = alg.rep_generators(1);
        CHECK(reps1.convention == "column");
        // matches the defining rank-one action entrywise
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                ScalarMatrix expect(2, 2);
                for (int b = 0; b < 2; ++b) {
                    if (i == j) expect.at(b, b) += RatFunc(1);
                    expect.at(i, b) -= qbar * alg.skew().b.at(b, j);
                }
                CHECK(reps1.gen[static_cast<std::size_t>(i * 2 + j)] == expect);
            }
        // k = 0: counit
        const auto& reps0 = alg.rep_generators(0);
        for (int g = 0; g < 4; ++g)
            CHECK(reps0.gen[static_cast<std::size_t>(g)].at(0, 0) ==
                  (g % 3 == 0 ? RatFunc(1) : RatFunc()));
        // defining relations act as zero for k <= 3
        for (int k = 0; k <= 3; ++k) {
            const auto& reps = alg.rep_generators(k);
            for (const auto& r : alg.relations()) CHECK(alg.apply_rep(reps, r).is_zero());
        }
        // homomorphism and unit
        const auto& reps2 = alg.rep_generators(2);
        CHECK(alg.apply_rep(reps2, NCPoly::constant(2, RatFunc(1))).is_identity());
        NCPoly x = NCPoly::generator(2, 0, 1) + NCPoly::generator(2, 1, 1).scaled(RatFunc::q());
        NCPoly y = NCPoly::generator(2, 1, 0) * NCPoly::generator(2, 0, 0);
        CHECK(alg.apply_rep(reps2, x * y) ==
              alg.apply_rep(reps2, x) * alg.apply_rep(reps2, y));
        // normal form is annihilated consistently
        NCPoly p = NCPoly::generator(2, 0, 1) * NCPoly::generator(2, 1, 0) *
                   NCPoly::generator(2, 0, 0);
        CHECK(alg.apply_rep(alg.rep_generators(3), alg.normal_form(p)) ==
              alg.apply_rep(alg.rep_generators(3), p));
        // Schur-Weyl
        CHECK(alg.schur_weyl_check(2));
        CHECK(alg.schur_weyl_check(3));
    }
    // a corrupted family fails the commutant check
    {
        auto& alg = algebra("r2");
        RepFamily bad = alg.rep_generators(2);
        bad.gen[1].at(0, 1) += RatFunc(1);
        ScalarMatrix r1 = embed_factor(alg.symmetry().r(), 1, 2);
        bool commutes = true;
        for (const auto& g : bad.gen)
            if (g * r1 != r1 * g) commutes = false;
        CHECK(!commutes);
    }
}

TEST_CASE("Cayley-Hamilton, even case") {
    CHECK(algebra("r2").cayley_hamilton_even(2));
    CHECK_THROWS_AS(algebra("r11").cayley_hamilton_even(1), DimensionMismatch);

    // q -> 1 turns the m = 2 identity into the classical one before any
    // reduction: the abelianized residue vanishes identically
    auto& alg = algebra("r2");
    LMatrix l = LMatrix::generating(2);
    LMatrix acc = l * l;
    acc = acc + l.scaled_poly(alg.elementary(1).scaled(-RatFunc::q(1)));
    acc = acc + LMatrix::identity(2, 2).scaled_poly(alg.elementary(2).scaled(RatFunc::q(2)));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            MultiPoly ab = abelianized(acc.at(i, j));
            MultiPoly lim(4);
            for (const auto& [e, c] : ab.terms())
                lim.add_term(e, RatFunc(c.specialize(Rational(1))));
            CHECK(lim.is_zero());
        }
}

TEST_CASE("prop 11 for the gl(3) symmetry at degree 2") {
    auto& alg = algebra("glN:3");
    for (const auto& nu : all_partitions(2)) {
        NCPoly lhs = alg.ch(coxeter_with_gaps(nu), 2);
        CHECK(alg.reduces_to_zero(lhs - alg.power_sum(nu)));
    }
}
