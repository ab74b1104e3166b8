#include <doctest.h>

#include <memory>

#include "tamearith/tamefield.hpp"

using namespace tamearith;

namespace {

// Q(zeta5)/Q with group C4 = <sigma_2>, normal integral basis b = zeta5
TameFieldDescriptor qzeta5() {
    TameFieldDescriptor f;
    f.name = "Q(zeta5)";
    f.group = std::make_shared<FiniteGroup>(FiniteGroup::cyclic(4));
    f.table = character_table(f.group);
    f.reps = abelian_reps(*f.table);
    // element j is sigma_2^j, acting as zeta -> zeta^{2^j}
    static const long k_of[4] = {1, 2, 4, 3};
    for (int j = 0; j < 4; ++j) f.embeddings.push_back(root_of_unity(5, k_of[j]));
    f.conj_element = 2;  // zeta -> zeta^4
    RamRecord r;
    r.p = 5;
    r.f = 1;
    r.num_primes = 1;
    r.inertia_elements = {0, 1, 2, 3};
    r.inertia_gen = 1;
    r.inertia_exp = 1;
    r.q = 5;
    f.ram.push_back(r);
    f.provenance = "test fixture";
    f.validate();
    return f;
}

size_t find_char(const TablePtr& t, const CyclotomicNumber& value_at_gen) {
    for (size_t i = 0; i < t->size(); ++i)
        if (t->value(i, 1) == value_at_gen) return i;
    FAIL("character not found");
    return 0;
}

} // namespace

TEST_CASE("descriptor validation catches broken data") {
    auto f = qzeta5();
    // wrong conjugation element
    auto bad = f;
    bad.conj_element = 0;
    bad.embeddings[2] = root_of_unity(5, 2);  // degrade embeddings consistency too
    CHECK_THROWS_AS(bad.validate(), error);

    // wild ramification rejected
    auto wild = f;
    wild.ram[0].p = 2;
    wild.ram[0].q = 2;
    CHECK_THROWS_AS(wild.validate(), error);

    // e f g mismatch
    auto efg = f;
    efg.ram[0].f = 2;
    CHECK_THROWS_AS(efg.validate(), error);
}

TEST_CASE("resolvents of Q(zeta5)") {
    auto f = qzeta5();
    size_t triv = f.table->trivial_index();
    auto r1 = resolvent(f, triv);
    CHECK(contains(r1.re, Rat(-1)));
    CHECK(std::abs(r1.im.midpoint()) < 1e-12);

    size_t chi1 = find_char(f.table, CyclotomicNumber::zeta(4));
    size_t chi3 = find_char(f.table, CyclotomicNumber::zeta(4, 3));
    auto g1 = resolvent(f, chi1);
    auto mag = abs_sq(g1);
    CHECK(std::abs(mag.midpoint() - 5.0) < 1e-12);

    // virtual psi = chi1 + chi3: product encloses -5
    std::vector<long> coeffs(4, 0);
    coeffs[chi1] = 1;
    coeffs[chi3] = 1;
    auto prod = resolvent_virtual(f, f.table->virtual_char(coeffs));
    CHECK(contains(prod.re, Rat(-5)));
    CHECK(certified_sign(prod) == -1);
}

TEST_CASE("galois action formula holds for all pairs") {
    auto f = qzeta5();
    for (int g = 0; g < 4; ++g)
        for (size_t irr = 0; irr < f.table->size(); ++irr) {
            auto res = galois_action_check(f, irr, g);
            CHECK(res.ok);
        }
    // det(chi1)(sigma_2) = i for the faithful character
    size_t chi1 = find_char(f.table, CyclotomicNumber::zeta(4));
    CHECK(det_character(f.reps[chi1], 1) == CyclotomicNumber::zeta(4));
}

TEST_CASE("artin conductor exponents") {
    auto f = qzeta5();
    size_t chi1 = find_char(f.table, CyclotomicNumber::zeta(4));
    size_t chi3 = find_char(f.table, CyclotomicNumber::zeta(4, 3));
    std::vector<long> coeffs(4, 0);
    coeffs[chi1] = 1;
    coeffs[chi3] = 1;
    auto psi = f.table->virtual_char(coeffs);
    CHECK(artin_conductor_p(f, psi, 5) == 2);
    CHECK(artin_conductor_p(f, psi, 7) == 0);
    CHECK(artin_conductor_p(f, f.table->trivial_char(), 5) == 0);
}

TEST_CASE("archimedean epsilon signs") {
    auto f = qzeta5();
    size_t chi1 = find_char(f.table, CyclotomicNumber::zeta(4));
    size_t chi3 = find_char(f.table, CyclotomicNumber::zeta(4, 3));
    std::vector<long> coeffs(4, 0);
    coeffs[chi1] = 1;
    coeffs[chi3] = 1;
    CHECK(eps_infinity_tilde(f, f.table->virtual_char(coeffs)) == -1);
    CHECK(eps_infinity_tilde(f, f.table->trivial_char() * 2) == 1);
    // non-symplectic character rejected
    std::vector<long> single(4, 0);
    single[chi1] = 1;
    CHECK_THROWS_AS(eps_infinity_tilde(f, f.table->virtual_char(single)), error);

    // totally real stand-in: conjugation element = identity forces +1
    auto real_f = f;
    real_f.conj_element = 0;
    // adjust embeddings so validation passes: use the field fixed by nothing;
    // instead skip validation and call directly
    CHECK(eps_infinity_tilde(real_f, real_f.table->trivial_char() * 2) == 1);
}

TEST_CASE("tame gauss sums satisfy the exact identities") {
    struct Case {
        unsigned long p, q;
    };
    for (Case c : {Case{5, 5}, Case{7, 7}, Case{13, 13}, Case{5, 25}}) {
        long e = static_cast<long>(c.q) - 1;
        for (long k = 1; k < e; ++k) {
            auto tau = tame_gauss_sum(c.p, c.q, e, k);
            CHECK(tau.value * conjugate(tau.value) ==
                  CyclotomicNumber(Rat(static_cast<long>(c.q))));
            // tau(chi) tau(conj chi) = chi(-1) q: chi(-1) = zeta_e^{k (q-1)/2}
            auto tau_bar = tame_gauss_sum(c.p, c.q, e, (e - k) % e);
            CyclotomicNumber chi_m1 = CyclotomicNumber::zeta(e, k * ((static_cast<long>(c.q) - 1) / 2));
            CHECK(tau.value * tau_bar.value ==
                  chi_m1 * CyclotomicNumber(Rat(static_cast<long>(c.q))));
        }
        auto trivial = tame_gauss_sum(c.p, c.q, e, 0);
        CHECK(trivial.value == CyclotomicNumber(-1));
    }
    // the order-4 character mod 5 gives tau tau_bar = -5
    auto a = tame_gauss_sum(5, 5, 4, 1);
    auto b = tame_gauss_sum(5, 5, 4, 3);
    CHECK(a.value * b.value == CyclotomicNumber(-5));
    CHECK_THROWS_AS(tame_gauss_sum(5, 5, 3, 1), error);  // 3 does not divide 4
}

TEST_CASE("pfaffian magnitude squares to the conductor power") {
    auto f = qzeta5();
    auto gens = symplectic_generators(f.table);
    for (const auto& gen : gens) {
        Rat pf = pfaffian_at(f, 0, gen.character);
        long cond = artin_conductor_p(f, gen.character, 5);
        CHECK(pf * pf == pow_rat(Rat(5), cond));
    }
}

TEST_CASE("theorem 5.9 representative for Q(zeta5)") {
    auto f = qzeta5();
    auto rep = theorem_5_9_representative(f);
    size_t chi1 = find_char(f.table, CyclotomicNumber::zeta(4));
    size_t chi3 = find_char(f.table, CyclotomicNumber::zeta(4, 3));
    for (size_t g = 0; g < rep.generators.size(); ++g) {
        const auto& gen = rep.generators[g];
        if (gen.kind == SymplecticGenerator::Kind::conjugate_pair &&
            ((gen.irr == chi1 && f.table->conjugate_index(chi1) == chi3) ||
             (gen.irr == chi3))) {
            // finite value (-1)(-5)^{-1} = 1/5 at p=5, theta 1/5, eps -1, delta 4
            CHECK(rep.eps_signs[g] == -1);
            auto v = rep.representative.fin[g].at(5).to_rational();
            REQUIRE(v.has_value());
            CHECK(*v == rat(1, 5));
            CHECK(rep.theta.values[g] == rat(1, 5));
            REQUIRE(rep.delta[g].exact.has_value());
            CHECK(*rep.delta[g].exact == 4);
        }
        if (gen.kind == SymplecticGenerator::Kind::doubled_orthogonal &&
            gen.irr == f.table->trivial_index()) {
            CHECK(rep.eps_signs[g] == 1);
            auto v = rep.representative.fin[g].at(5).to_rational();
            CHECK(*v == Rat(1));
            CHECK(rep.theta.values[g] == Rat(1));
            CHECK(*rep.delta[g].exact == 4);
        }
    }
}

TEST_CASE("chi of the ring of integers matches the resolvent route") {
    auto f = qzeta5();
    auto cls = chi_ring_of_integers(f);
    CHECK(cls.fin.support.empty());
    // archimedean coordinate at phi: delta(phi) |(b|phi)|
    for (size_t irr = 0; irr < f.table->size(); ++irr) {
        auto expect = delta_K(1, Rat(1), 4, f.table->irreducibles[irr].degree)
                          .times(ArchValue::from_interval(abs(resolvent(f, irr))));
        double x = cls.arch.values[irr].iv.midpoint();
        double y = expect.iv.midpoint();
        CHECK(std::abs(x - y) <= 1e-9 * std::max({1.0, std::abs(x), std::abs(y)}));
    }
    // at psi = chi1 + chi3 the product is 4 * 5 = 20
    size_t chi1 = find_char(f.table, CyclotomicNumber::zeta(4));
    size_t chi3 = find_char(f.table, CyclotomicNumber::zeta(4, 3));
    double v = cls.arch.values[chi1].iv.midpoint() * cls.arch.values[chi3].iv.midpoint();
    CHECK(std::abs(v - 20.0) < 1e-9 * 20.0);

    // a non-unimodular lattice is rejected
    RatMatrix bad = RatMatrix(4, 4, Rat(0));
    for (size_t i = 0; i < 4; ++i) bad(i, i) = Rat(2);
    CHECK_THROWS_AS(chi_ring_of_integers(f, bad), error);
}

TEST_CASE("theorem 5.10 signs for Q(zeta5)") {
    auto f = qzeta5();
    auto res = theorem_5_10_check(f);
    CHECK(res.all_match);
    size_t chi1 = find_char(f.table, CyclotomicNumber::zeta(4));
    auto gens = symplectic_generators(f.table);
    for (size_t g = 0; g < gens.size(); ++g)
        if (gens[g].kind == SymplecticGenerator::Kind::conjugate_pair &&
            (gens[g].irr == chi1 || f.table->conjugate_index(gens[g].irr) == chi1)) {
            CHECK(res.resolvent_signs[g] == -1);
            CHECK(res.eps_signs[g] == -1);
        }
}

TEST_CASE("proposition 5.7 for the ideal (1 - zeta5)") {
    auto f = qzeta5();
    // c = 1 - zeta = eta b with eta = -e - sum_g g
    GroupRingElem eta{Rat(-2), Rat(-1), Rat(-1), Rat(-1)};
    auto res = prop_5_7_check(f, eta, 5);
    CHECK(res.exact_trivial_coordinate);
    CHECK(res.exact_theta_projection);
    CHECK(res.interval_archimedean);

    // a = O_N itself: both sides trivial
    GroupRingElem unit = group_ring_unit(*f.group);
    auto triv = prop_5_7_check(f, unit, 5);
    CHECK(triv.exact_trivial_coordinate);
    CHECK(triv.exact_theta_projection);
    CHECK(triv.interval_archimedean);

    // a = 5 O_N: Det = 5 everywhere
    GroupRingElem five = gr_scale(group_ring_unit(*f.group), Rat(5));
    auto r5 = prop_5_7_check(f, five, 5);
    CHECK(r5.exact_trivial_coordinate);
    CHECK(r5.exact_theta_projection);
    CHECK(r5.interval_archimedean);
}

TEST_CASE("theorem 6.1 intersection degrees") {
    auto f = qzeta5();
    auto gens = symplectic_generators(f.table);
    std::vector<int> eps;
    for (const auto& gen : gens) eps.push_back(eps_infinity_tilde(f, gen.character));

    BranchIntersectionData d;
    d.group = f.group;
    d.table = f.table;

    // no intersection points: deg part 1
    auto none = theorem_6_1_representative(d, 1, Rat(1), eps);
    for (size_t g = 0; g < gens.size(); ++g) CHECK(none.representative.fin[g].empty());

    // single point replicating the p=5 datum
    BranchPoint pt;
    pt.p = 5;
    pt.f = 1;
    pt.inertia_elements = {0, 1, 2, 3};
    d.points.push_back(pt);
    auto one_pt = theorem_6_1_representative(d, 1, Rat(1), eps);
    size_t chi1 = find_char(f.table, CyclotomicNumber::zeta(4));
    for (size_t g = 0; g < gens.size(); ++g) {
        if (gens[g].kind == SymplecticGenerator::Kind::conjugate_pair &&
            (gens[g].irr == chi1 || f.table->conjugate_index(gens[g].irr) == chi1)) {
            auto v = one_pt.representative.fin[g].at(5).to_rational();
            // eps = -1 folded into (-5)^{-1}
            CHECK(*v == rat(1, 5));
        }
    }

    // two identical points: the degree part squares
    d.points.push_back(pt);
    auto two_pt = theorem_6_1_representative(d, 1, Rat(1), eps);
    for (size_t g = 0; g < gens.size(); ++g) {
        auto v1 = one_pt.representative.fin[g].at(5).to_rational();
        auto v2 = two_pt.representative.fin[g].at(5).to_rational();
        // strip the epsilon fold before comparing squares
        Rat deg1 = *v1 * eps[g];
        Rat deg2 = *v2 * eps[g];
        CHECK(deg2 == deg1 * deg1);
    }
}
