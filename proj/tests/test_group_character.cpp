#include <doctest.h>

#include <memory>
#include <random>

#include "tamearith/character.hpp"
#include "tamearith/group.hpp"

using namespace tamearith;

namespace {

std::shared_ptr<const FiniteGroup> make(const FiniteGroup& g) {
    return std::make_shared<FiniteGroup>(g);
}

std::vector<std::shared_ptr<const FiniteGroup>> corpus() {
    return {make(FiniteGroup::cyclic(2)),  make(FiniteGroup::cyclic(3)),
            make(FiniteGroup::cyclic(4)),  make(FiniteGroup::klein_four()),
            make(FiniteGroup::symmetric3()), make(FiniteGroup::dihedral4()),
            make(FiniteGroup::quaternion8()), make(FiniteGroup::cyclic(6))};
}

} // namespace

TEST_CASE("conjugacy classes for the trivial, S3 and Q8 groups") {
    auto triv = make(FiniteGroup::cyclic(1));
    CHECK(conjugacy_classes(*triv).count() == 1);

    auto s3 = make(FiniteGroup::symmetric3());
    auto cls = conjugacy_classes(*s3);
    std::vector<size_t> sizes;
    for (const auto& c : cls.classes) sizes.push_back(c.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<size_t>{1, 2, 3});

    auto q8 = make(FiniteGroup::quaternion8());
    auto qcls = conjugacy_classes(*q8);
    std::vector<size_t> qsizes;
    for (const auto& c : qcls.classes) qsizes.push_back(c.size());
    std::sort(qsizes.begin(), qsizes.end());
    CHECK(qsizes == std::vector<size_t>{1, 1, 2, 2, 2});
}

TEST_CASE("character tables: orthogonality and degree identities hold for the corpus") {
    for (const auto& g : corpus()) {
        auto table = character_table(g);  // finalize() enforces exact orthogonality
        CHECK(table->size() == conjugacy_classes(*g).count());
        long sum_sq = 0;
        for (const auto& chi : table->irreducibles) sum_sq += chi.degree * chi.degree;
        CHECK(sum_sq == g->order());
    }
}

TEST_CASE("C2 and C4 abelian tables") {
    auto c2 = character_table(make(FiniteGroup::cyclic(2)));
    CHECK(c2->size() == 2);
    CHECK(c2->value(1, 1) == CyclotomicNumber(-1));

    auto c4 = character_table(make(FiniteGroup::cyclic(4)));
    CHECK(c4->size() == 4);
    // every value is a 4th root of unity
    for (size_t i = 0; i < 4; ++i)
        for (int g = 0; g < 4; ++g) {
            auto v = c4->value(i, g);
            CHECK(pow_cyc(v, 4) == CyclotomicNumber(1));
        }
}

TEST_CASE("Q8 has four linear characters and one quaternionic one") {
    auto q8 = make(FiniteGroup::quaternion8());
    auto table = character_table(q8);
    int deg2 = 0;
    size_t deg2_idx = 0;
    for (size_t i = 0; i < table->size(); ++i) {
        if (table->irreducibles[i].degree == 2) {
            ++deg2;
            deg2_idx = i;
        }
    }
    CHECK(deg2 == 1);
    // center generator is -1 (index 1 in the builder's ordering)
    CHECK(table->value(deg2_idx, 1) == CyclotomicNumber(-2));
    CHECK(table->frobenius_schur(deg2_idx) == -1);

    // FS list: four +1 linear characters and one -1
    int plus = 0, minus = 0;
    for (size_t i = 0; i < table->size(); ++i) {
        int fs = table->frobenius_schur(i);
        if (fs == 1) ++plus;
        if (fs == -1) ++minus;
    }
    CHECK(plus == 4);
    CHECK(minus == 1);
}

TEST_CASE("Frobenius-Schur values across the corpus stay in {-1,0,1}") {
    for (const auto& g : corpus()) {
        auto table = character_table(g);
        for (size_t i = 0; i < table->size(); ++i) {
            int fs = table->frobenius_schur(i);
            CHECK(fs >= -1);
            CHECK(fs <= 1);
        }
    }
}

TEST_CASE("C4 faithful character has indicator zero") {
    auto c4 = character_table(make(FiniteGroup::cyclic(4)));
    bool found = false;
    for (size_t i = 0; i < 4; ++i) {
        auto v = c4->value(i, 1);
        if (v == CyclotomicNumber::zeta(4) || v == CyclotomicNumber::zeta(4, 3)) {
            CHECK(c4->frobenius_schur(i) == 0);
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("symplectic generators") {
    // trivial group: {2*1}
    auto triv = character_table(make(FiniteGroup::cyclic(1)));
    auto gens = symplectic_generators(triv);
    REQUIRE(gens.size() == 1);
    CHECK(gens[0].character.degree() == 2);

    // Q8: 2*chi for the four linear, the quaternionic character once
    auto q8 = character_table(make(FiniteGroup::quaternion8()));
    auto qgens = symplectic_generators(q8);
    CHECK(qgens.size() == 5);
    int quaternionic = 0;
    for (const auto& gen : qgens)
        if (gen.kind == SymplecticGenerator::Kind::quaternionic) {
            ++quaternionic;
            CHECK(gen.character.degree() == 2);
        }
    CHECK(quaternionic == 1);

    // C4: 2*1, 2*eta, chi + conj(chi)
    auto c4 = character_table(make(FiniteGroup::cyclic(4)));
    auto cgens = symplectic_generators(c4);
    CHECK(cgens.size() == 3);
    int pairs = 0;
    for (const auto& gen : cgens)
        if (gen.kind == SymplecticGenerator::Kind::conjugate_pair) ++pairs;
    CHECK(pairs == 1);
}

TEST_CASE("inner products") {
    auto q8 = character_table(make(FiniteGroup::quaternion8()));
    for (size_t i = 0; i < q8->size(); ++i)
        CHECK(inner_product(q8->irreducible_char(i), q8->irreducible_char(i)) == 1);
    CHECK(inner_product(q8->regular_char(), q8->trivial_char()) == 1);

    // C4 with u = reg - 1: (chi1 + chi3, u) = 2 for the two faithful characters
    auto c4g = make(FiniteGroup::cyclic(4));
    auto c4 = character_table(c4g);
    std::vector<long> coeffs(4, 0);
    for (size_t i = 0; i < 4; ++i) {
        auto v = c4->value(i, 1);
        if (v == CyclotomicNumber::zeta(4) || v == CyclotomicNumber::zeta(4, 3)) coeffs[i] = 1;
    }
    auto psi = c4->virtual_char(coeffs);
    auto u = c4->regular_char() - c4->trivial_char();
    CHECK(inner_product(psi, u) == 2);
}

TEST_CASE("induction and restriction with Frobenius reciprocity") {
    auto s3 = make(FiniteGroup::symmetric3());
    auto s3_table = character_table(s3);

    // C3 = the rotations: identity at 0 plus the two 3-cycles
    std::vector<int> rot{0};
    for (int x = 0; x < 6; ++x)
        if (s3->element_order(x) == 3) rot.push_back(x);
    auto c3 = make_subgroup(s3, rot, "C3");
    auto c3_table = character_table(std::shared_ptr<const FiniteGroup>(c3.group));

    // restriction of the regular character of S3 is 2 * reg(C3)
    auto reg_res = restrict_char(s3_table->regular_char(), c3, c3_table);
    auto expected = c3_table->regular_char() * 2;
    CHECK(reg_res.coeffs == expected.coeffs);

    // induce trivial from {e}: the regular character
    auto e_sub = make_subgroup(s3, {0}, "E");
    auto e_table = character_table(std::shared_ptr<const FiniteGroup>(e_sub.group));
    auto induced = induce(e_sub, e_table, e_table->trivial_char(), s3_table);
    CHECK(induced.coeffs == s3_table->regular_char().coeffs);

    // reciprocity on random virtual characters
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> coeff(-3, 3);
    for (int iter = 0; iter < 100; ++iter) {
        std::vector<long> a(c3_table->size()), b(s3_table->size());
        for (auto& x : a) x = coeff(rng);
        for (auto& x : b) x = coeff(rng);
        auto theta = c3_table->virtual_char(a);
        auto psi = s3_table->virtual_char(b);
        CHECK(inner_product(induce(c3, c3_table, theta, s3_table), psi) ==
              inner_product(theta, restrict_char(psi, c3, c3_table)));
    }

    // {identity, one 3-cycle} is not closed
    int three_cycle = -1;
    for (int x = 0; x < 6; ++x)
        if (s3->element_order(x) == 3) three_cycle = x;
    CHECK_THROWS_AS(make_subgroup(s3, {0, three_cycle}, "bad"), error);
}

TEST_CASE("augmentation character") {
    auto c4 = character_table(make(FiniteGroup::cyclic(4)));
    auto u = augmentation_character(c4);
    CHECK(u.degree() == 3);
    for (int g = 1; g < 4; ++g) CHECK(u.value_at_element(g) == CyclotomicNumber(-1));

    auto triv = character_table(make(FiniteGroup::cyclic(1)));
    auto u0 = augmentation_character(triv);
    CHECK(u0.degree() == 0);
}

TEST_CASE("symplectic generators restrict evenly to cyclic subgroups") {
    for (const auto& g : corpus()) {
        auto table = character_table(g);
        auto gens = symplectic_generators(table);
        // cyclic subgroups generated by single elements
        for (int x = 0; x < g->order(); ++x) {
            std::vector<int> elems;
            int y = g->identity();
            do {
                elems.push_back(y);
                y = g->mul(y, x);
            } while (y != g->identity());
            auto sub = make_subgroup(g, elems, "I");
            auto sub_table = character_table(std::shared_ptr<const FiniteGroup>(sub.group));
            auto u = augmentation_character(sub_table);
            for (const auto& gen : gens) {
                long pairing = inner_product(restrict_char(gen.character, sub, sub_table), u);
                CHECK(pairing % 2 == 0);
            }
        }
    }
}

TEST_CASE("determinant characters") {
    auto c4t = character_table(make(FiniteGroup::cyclic(4)));
    auto reps = abelian_reps(*c4t);
    for (size_t i = 0; i < reps.size(); ++i) {
        validate_rep(*c4t, i, reps[i]);
        CHECK(det_character(reps[i], 0) == CyclotomicNumber(1));
    }
    // the faithful character maps the generator to i
    for (size_t i = 0; i < reps.size(); ++i) {
        if (c4t->value(i, 1) == CyclotomicNumber::zeta(4))
            CHECK(det_character(reps[i], 1) == CyclotomicNumber::zeta(4));
    }
}

TEST_CASE("supplied table validation rejects a broken table") {
    auto c2 = make(FiniteGroup::cyclic(2));
    std::vector<Character> bad(2);
    bad[0].values = {CyclotomicNumber(1), CyclotomicNumber(1)};
    bad[1].values = {CyclotomicNumber(1), CyclotomicNumber(1)};  // duplicate of trivial
    CHECK_THROWS_AS(character_table(c2, bad), error);
}
