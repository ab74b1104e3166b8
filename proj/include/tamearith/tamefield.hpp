#pragma once

#include "tamearith/metcomplex.hpp"

namespace tamearith {

/// Tame ramification data at one rational prime of a Galois field N/Q.
struct RamRecord {
    unsigned long p = 0;
    long f = 1;              // residue degree of primes of N above p
    long num_primes = 1;     // number of primes of N above p
    std::vector<int> inertia_elements;  // subgroup of the field's group
    int inertia_gen = 0;     // generator carrying the inertia character
    long inertia_exp = 1;    // phi(inertia_gen) = zeta_e^{inertia_exp}
    unsigned long q = 0;     // p^f
};

/// Galois number field N/Q with group G: normal-basis embeddings, complex
/// conjugation, and per-prime tame ramification data. K = Q in this version.
struct TameFieldDescriptor {
    std::string name;
    std::shared_ptr<const FiniteGroup> group;
    TablePtr table;
    std::vector<IrreducibleRep> reps;
    long k_degree = 1;   // [K:Q]
    Rat dK_abs = Rat(1); // |d_K|
    std::vector<ComplexInterval> embeddings;  // element g -> sigma0(g(b))
    int conj_element = 0;
    bool ram_complete = true;  // false when wild primes prevent full tame data
    std::vector<RamRecord> ram;
    std::string provenance;

    // built by validate(): subgroup structure per ramified prime
    std::vector<TameLocalData> local;

    void validate();
};

/// (b | phi): determinant of sum_g sigma0(g(b)) T(g^{-1}).
ComplexInterval resolvent(const TameFieldDescriptor& f, size_t irr);

/// Resolvent of a virtual character: product of powers of the irreducible
/// resolvents.
ComplexInterval resolvent_virtual(const TameFieldDescriptor& f, const VirtualCharacter& psi);

/// Resolvent with b replaced by g0(b).
ComplexInterval resolvent_translated(const TameFieldDescriptor& f, size_t irr, int g0);

/// Galois action formula (g(b)|phi) = (b|phi) det(phi)(g).
struct GaloisActionResult {
    bool ok = false;
    double residual = 0.0;
};
GaloisActionResult galois_action_check(const TameFieldDescriptor& f, size_t irr, int g0);

/// Exponent of p in the absolute norm of the Artin conductor: (psi, Ind_I^G u)
/// at the tame prime p; 0 at unramified primes.
long artin_conductor_p(const TameFieldDescriptor& f, const VirtualCharacter& psi, unsigned long p);

/// Archimedean epsilon sign on degree-zero symplectic characters:
/// (-i)^{(psi(1) - psi(c))/2} with c the complex-conjugation element.
int eps_infinity_tilde(const TameFieldDescriptor& f, const VirtualCharacter& psi);

/// True when psi is an integer combination of the symplectic generators.
bool is_symplectic(const VirtualCharacter& psi);

/// Tame Gauss sum over F_q: sum over x of chi(x)^{-1} zeta_p^{Tr(x)}, exact in
/// Q(zeta_{pe}); chi given by its exponent on the canonical generator of
/// F_q^x (deterministic field model and generator).
struct GaussSumResult {
    CyclotomicNumber value;
    unsigned long p = 0, q = 0;
    long e = 1;
    long chi_exponent = 0;
};
GaussSumResult tame_gauss_sum(unsigned long p, unsigned long q, long e, long chi_exponent);

/// Pf_p at one tame prime for a symplectic virtual character (K = Q: one
/// prime of K above p and residue degree one).
Rat pfaffian_at(const TameFieldDescriptor& f, size_t ram_idx, const VirtualCharacter& psi);

/// The Theorem 5.9 data per symplectic generator: the representative
/// (finite part epsilon-folded Pf^{-1}, archimedean part delta_K) and its
/// theta value relative to the free baseline class 1 x delta_K.
struct SymplecticClassReport {
    std::vector<SymplecticGenerator> generators;
    SymplecticRestriction representative;
    RationalSymplecticClass theta;
    std::vector<int> eps_signs;
    std::vector<ArchValue> delta;  // delta_K per generator
};

SymplecticClassReport theorem_5_9_representative(const TameFieldDescriptor& f);

/// Arithmetic class of the ring of integers with the Hecke-form metric.
/// The lattice matrix expresses a Z-basis of O_N over {g(b)}; it must be
/// unimodular (O_N free on b). Defaults to the identity.
ArithClassRep chi_ring_of_integers(const TameFieldDescriptor& f,
                                   const std::optional<RatMatrix>& lattice = std::nullopt);

/// Hecke-form Gram matrix on the basis {g(b)} from the descriptor embeddings.
FormMatrix hecke_form(const TameFieldDescriptor& f);

/// Proposition 5.7 instance: the G-stable ideal is Z[G] (eta b) for an
/// integral group-ring element eta; the quotient is supported at p.
struct Prop57Result {
    bool exact_trivial_coordinate = false;  // gamma projections agree exactly
    bool exact_theta_projection = false;    // unsigned content per generator
    bool interval_archimedean = false;      // chi-class ratios within tolerance
};
Prop57Result prop_5_7_check(const TameFieldDescriptor& f, const GroupRingElem& eta,
                            unsigned long p, double rel_tol = 1e-9);

/// Theorem 5.10: certified sign of the degree-zero resolvent product against
/// the archimedean epsilon sign, per symplectic generator.
struct Theorem510Result {
    std::vector<int> resolvent_signs;
    std::vector<int> eps_signs;
    bool all_match = false;
};
Theorem510Result theorem_5_10_check(const TameFieldDescriptor& f);

/// Intersection data for the one-dimensional horizontal cycle statement:
/// per point, the residue degree and the tame inertia data.
struct BranchPoint {
    unsigned long p = 0;
    long f = 1;
    std::vector<int> inertia_elements;
};
struct BranchIntersectionData {
    std::shared_ptr<const FiniteGroup> group;
    TablePtr table;
    std::vector<BranchPoint> points;
};

/// deg(W . Pf)^{-1} x delta_K on the symplectic generators; epsilon signs are
/// supplied by the caller (from the corresponding field datum).
SymplecticClassReport theorem_6_1_representative(const BranchIntersectionData& d, long k_degree,
                                                 const Rat& dK_abs,
                                                 const std::vector<int>& eps_signs);

} // namespace tamearith
