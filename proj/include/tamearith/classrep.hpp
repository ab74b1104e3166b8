#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "tamearith/character.hpp"
#include "tamearith/interval.hpp"

namespace tamearith {

/// Finitely-supported idele-valued character map: one nonzero cyclotomic value
/// per (prime in support, irreducible); implicitly 1 off support.
struct IdelicCharMap {
    std::set<unsigned long> support;
    std::map<unsigned long, std::vector<CyclotomicNumber>> values;  // prime -> per-irreducible

    const CyclotomicNumber& at(unsigned long p, size_t irr) const;
};

/// Positive real archimedean value with an interval certificate. When the
/// value arose as |rational| the exact witness is kept; values like sqrt(q)
/// keep the exact square instead, so products that return to Q recover
/// exactness.
struct ArchValue {
    RealInterval iv{1.0};
    std::optional<Rat> exact;     // the value itself, when exactly rational
    std::optional<Rat> exact_sq;  // the square of the value, when rational

    static ArchValue one();
    static ArchValue from_rat_abs(const Rat& q);
    static ArchValue from_rat_sq(const Rat& square);
    static ArchValue from_interval(RealInterval v);

    ArchValue times(const ArchValue& o) const;
    ArchValue inverse() const;
    ArchValue pow(long e) const;

    void normalize();
};

struct ArchCharMap {
    std::vector<ArchValue> values;  // per irreducible
};

/// Representative (finite idelic part, archimedean part) of a class in the
/// arithmetic classgroup of Z[G].
struct ArithClassRep {
    TablePtr table;
    IdelicCharMap fin;
    ArchCharMap arch;

    static ArithClassRep identity(const TablePtr& table);

    /// Componentwise value lookup with the implicit-1 convention.
    CyclotomicNumber fin_value(unsigned long p, size_t irr) const;
};

ArithClassRep mul(const ArithClassRep& a, const ArithClassRep& b);
ArithClassRep inv(const ArithClassRep& a);

/// Degree-zero shift f(chi) -> f(chi - chi(1) 1_G) on both coordinates.
ArithClassRep tilde(const ArithClassRep& a);

/// Evaluation of a representative on the symplectic generators.
struct SymplecticRestriction {
    std::vector<SymplecticGenerator> generators;
    std::set<unsigned long> support;
    std::vector<std::map<unsigned long, CyclotomicNumber>> fin;  // per generator
    std::vector<ArchValue> arch;                                 // per generator
};

SymplecticRestriction restrict_symplectic(const ArithClassRep& a,
                                          const std::vector<SymplecticGenerator>& gens);

/// Rational-valued homomorphism on the symplectic generators.
struct RationalSymplecticClass {
    std::vector<Rat> values;  // per generator, nonzero
};

/// The rational class extracted from a visibly-rational symplectic
/// restriction: per generator the finite part must carry one common rational
/// value r over the support and the archimedean part an exact rational
/// witness |r'|; the value reported is r / |r'| (sign from the finite part).
RationalSymplecticClass theta_rational(const SymplecticRestriction& s);

/// Group-ring element as coefficient vector (one rational per group element).
using GroupRingElem = std::vector<Rat>;

GroupRingElem group_ring_zero(const FiniteGroup& g);
GroupRingElem group_ring_unit(const FiniteGroup& g);
GroupRingElem group_ring_of(const FiniteGroup& g, int element, const Rat& coeff = Rat(1));
GroupRingElem gr_add(const FiniteGroup& g, const GroupRingElem& a, const GroupRingElem& b);
GroupRingElem gr_mul(const FiniteGroup& g, const GroupRingElem& a, const GroupRingElem& b);
GroupRingElem gr_scale(const GroupRingElem& a, const Rat& c);
Rat gr_augmentation(const GroupRingElem& a);
bool gr_p_integral(const GroupRingElem& a, unsigned long p);

/// Matrix over the rational group ring Q[G].
struct GroupRingMatrix {
    size_t rows = 0, cols = 0;
    std::vector<GroupRingElem> entries;  // row-major

    GroupRingMatrix() = default;
    GroupRingMatrix(size_t r, size_t c, const FiniteGroup& g)
        : rows(r), cols(c), entries(r * c, group_ring_zero(g)) {}

    GroupRingElem& operator()(size_t r, size_t c) { return entries[r * cols + c]; }
    const GroupRingElem& operator()(size_t r, size_t c) const { return entries[r * cols + c]; }

    static GroupRingMatrix identity(size_t n, const FiniteGroup& g);
};

/// Ordinary matrix product (base-change algebra: the entries multiply in the
/// written order).
GroupRingMatrix grm_mul(const FiniteGroup& g, const GroupRingMatrix& a, const GroupRingMatrix& b);

/// Composite of left-module maps "apply b, then a": for maps of free left
/// modules with column conventions d(a_j) = sum_t M_{tj} a_t the entries of
/// the composite multiply in the opposite order, (a o b)_{ik} =
/// sum_j b_{jk} a_{ij}.
GroupRingMatrix grm_compose(const FiniteGroup& g, const GroupRingMatrix& a,
                            const GroupRingMatrix& b);

/// Index transpose without any entry involution.
GroupRingMatrix grm_transpose(const GroupRingMatrix& a);

/// Inverse over Q[G] through the regular representation; throws Singular.
GroupRingMatrix grm_inverse(const FiniteGroup& g, const GroupRingMatrix& a);

/// Inverse for the module-map composition (grm_compose).
GroupRingMatrix grm_compose_inverse(const FiniteGroup& g, const GroupRingMatrix& a);

bool grm_p_integral(const GroupRingMatrix& a, unsigned long p);

/// Image of a group-ring element under the representation of an irreducible.
CycMatrix rep_of_elem(const IrreducibleRep& rep, const GroupRingElem& x);

/// Det(x)(psi) = det(T(x)) for each irreducible, via the block matrix with
/// entries run through the representation; throws Singular when any value
/// vanishes.
std::vector<CyclotomicNumber> det_of_unit(const GroupRingMatrix& x, const CharacterTable& table,
                                          const std::vector<IrreducibleRep>& reps);

/// Same but allows zero values (for rank / diagnostics).
std::vector<CyclotomicNumber> det_values(const GroupRingMatrix& x, const CharacterTable& table,
                                         const std::vector<IrreducibleRep>& reps);

/// Presentation of a finite cohomologically trivial module at p: the class is
/// represented by Det(alpha) placed at p.
struct TorsionModulePresentation {
    unsigned long p;
    GroupRingMatrix alpha;
};

ArithClassRep torsion_class(const TorsionModulePresentation& m, const TablePtr& table,
                            const std::vector<IrreducibleRep>& reps);

/// (-p)^{(psi, Ind_I^G u)/2} for a symplectic virtual character; the pairing
/// must be even. Inertia is handed in as a subgroup of the field's group.
struct TameLocalData {
    unsigned long p;
    Subgroup inertia;
    TablePtr inertia_table;
};

Rat pfaffian_p(const TameLocalData& ram, const VirtualCharacter& psi);

/// (|G|^{[K:Q]} |d_K|)^{psi(1)/2}, exact when the exponent is integral.
ArchValue delta_K(long k_degree, const Rat& dK_abs, long group_order, long psi_degree);

/// prod_{p in S} p^{-deg * d * chiY / 2} on a character of the given degree.
Rat xi_S(const std::vector<unsigned long>& S, long d, long chiY, long psi_degree);

/// Degree map for the trivial group: gamma = content(fin) / arch.
ArchValue degree_map_trivialG(const ArithClassRep& a);

/// gamma(a)^2, exact; throws NotRationalSquare when inexact.
Rat square_rationality(const ArithClassRep& a);

/// Content of the finite part at the trivial character (or at any rational
/// coordinate): product over support of p^{v_p(value at p)}; values must be
/// rational.
Rat content_trivial_coordinate(const ArithClassRep& a);

/// Induction A(Z) -> A(Z[G]): value at psi is a's value raised to psi(1).
ArithClassRep ind_from_trivial(const ArithClassRep& a, const TablePtr& target);

/// Projection of a class representative onto the trivial-character coordinate,
/// as a class representative over the trivial group.
ArithClassRep project_trivial_coordinate(const ArithClassRep& a, const TablePtr& trivial_table);

} // namespace tamearith
