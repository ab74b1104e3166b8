#pragma once

#include <map>
#include <optional>
#include <vector>

#include "tamearith/classrep.hpp"

namespace tamearith {

/// Bounded complex of free Z[G]-modules with integer group-ring boundaries,
/// d . d = 0 enforced on construction.
struct PerfectComplex {
    std::shared_ptr<const FiniteGroup> group;
    long lo = 0;               // lowest degree
    std::vector<long> ranks;   // ranks[i] = rank in degree lo + i
    std::vector<GroupRingMatrix> boundaries;  // [i]: degree lo+i -> lo+i+1, shape d_{i+1} x d_i

    long hi() const { return lo + static_cast<long>(ranks.size()) - 1; }
    size_t terms() const { return ranks.size(); }
    long rank_at(size_t idx) const { return ranks[idx]; }

    void validate() const;  // shapes, integrality, d.d = 0
};

/// Hermitian form data per degree: exact cyclotomic entries or certified
/// intervals, on the basis {a_j g} of the complexified term (index j*|G|+g).
struct FormMatrix {
    bool exact = true;
    CycMatrix c;
    Matrix<ComplexInterval> iv;

    size_t dim() const { return exact ? c.rows() : iv.rows(); }
    ComplexInterval entry_interval(size_t i, size_t j) const;
    static FormMatrix identity(size_t n);
    static FormMatrix scaled_identity(size_t n, const Rat& t);
};

struct HermitianFormSpec {
    std::vector<FormMatrix> forms;  // aligned with complex term indices
};

/// Validates hermitian symmetry, G-invariance and certified positive
/// definiteness of each form against the complex shape.
void validate_forms(const PerfectComplex& p, const HermitianFormSpec& spec);

/// The standard form mu (Gram = identity on {a_j g}) and nu = |G| mu.
FormMatrix standard_form_mu(const FiniteGroup& g, long rank);
FormMatrix standard_form_nu(const FiniteGroup& g, long rank);

/// Metric on det H_phi: a positive norm quoted against explicit cohomology
/// representatives (columns, in isotypic coordinates, one matrix per term).
struct DetLineMetric {
    std::vector<CycMatrix> h_reps;
    ArchValue norm;
};

struct MetrisedComplex {
    PerfectComplex complex;
    std::vector<DetLineMetric> metrics;  // per irreducible
};

/// nu-orthonormal basis of the two-sided ideal W_phi: scaled matrix
/// coefficient elements e_{kl} / sqrt(m) presented as coefficient vectors in
/// C[G]; entries cyclotomic, scaling tracked separately.
struct WBasis {
    long m = 1;                 // phi(1)
    std::vector<CycMatrix> mats;  // per (l,k) flattened l*m+k: the C[G] coefficient column
};

WBasis orthonormal_w_basis(const CharacterTable& table, size_t irr, const IrreducibleRep& rep);

/// Basis of (P^i tensor W_phi)^G: each vector r(a^{ij})(1 tensor w) written
/// on the coordinates (module basis element, C[G] component), dimension
/// d_i phi(1)^2.
struct IsotypicSpace {
    size_t irr = 0;
    std::vector<CycMatrix> vectors;  // each (d_i * |G|) x |G|
};

IsotypicSpace isotypic_basis(const PerfectComplex& p, size_t term_idx, size_t irr,
                             const CharacterTable& table, const IrreducibleRep& rep);

/// Isotypic transfer of a group-ring matrix: entries eta act on the W-basis
/// index space; the result is (rows*m^2) x (cols*m^2) over cyclotomics with
/// basis order (module index, ideal column l, row k).
CycMatrix blowup_isotypic(const FiniteGroup& g, const GroupRingMatrix& mat,
                          const IrreducibleRep& rep);

/// Exact splitting data for the Knudsen-Mumford identification of one
/// isotypic complex: canonical cohomology representatives, image bases and
/// the scalar kappa with xi(tensor of std wedges) = kappa * (h-basis wedge).
struct KMData {
    long lo = 0;                       // lowest degree, for sign bookkeeping
    std::vector<CycMatrix> boundary;   // blown-up boundaries
    std::vector<CycMatrix> h_reps;     // canonical cohomology representatives per term
    std::vector<CycMatrix> b_reps;     // image (coboundary) bases per term
    CyclotomicNumber kappa;
    std::vector<long> dims;            // d_i * m^2
};

KMData km_isomorphism(const PerfectComplex& p, const IrreducibleRep& rep);

/// Gram matrix of the standard isotypic basis under (form tensor nu).
/// Exact when the form is exact.
FormMatrix isotypic_gram(const PerfectComplex& p, size_t term_idx, const FormMatrix& form,
                         const IrreducibleRep& rep);

/// Example 2.5: metrics on the equivariant determinants of cohomology induced
/// by hermitian forms on the terms.
MetrisedComplex hermitian_to_metrised(const PerfectComplex& p, const HermitianFormSpec& forms,
                                      const TablePtr& table,
                                      const std::vector<IrreducibleRep>& reps);

/// Evaluate a metric on the wedge of the given cohomology representatives
/// (columns per term): |det change| * metric.norm.
ArchValue metric_eval(const DetLineMetric& metric, const std::vector<CycMatrix>& target_h,
                      const KMData& km);

/// Precomputed splitting data per irreducible for repeated class evaluations
/// of one complex.
struct ClassContext {
    std::vector<KMData> km;
};
ClassContext make_class_context(const PerfectComplex& p, const TablePtr& table,
                                const std::vector<IrreducibleRep>& reps);

/// Def 3.3: the representative of the arithmetic class from a chosen global
/// basis per term (matrices over Q[G] expressing the basis in the standard
/// one) and local bases per declared prime.
ArithClassRep arithmetic_class(const MetrisedComplex& m, const TablePtr& table,
                               const std::vector<IrreducibleRep>& reps,
                               const std::vector<GroupRingMatrix>& q_bases,
                               const std::map<unsigned long, std::vector<GroupRingMatrix>>& p_bases,
                               const ClassContext* ctx = nullptr);

/// Convenience: standard bases everywhere, declared support only.
ArithClassRep arithmetic_class_std(const MetrisedComplex& m, const TablePtr& table,
                                   const std::vector<IrreducibleRep>& reps);

/// Metrics on C induced from metrics on D through a quasi-isomorphism
/// alpha: C -> D (one matrix per term, shape d_D x d_C).
std::vector<DetLineMetric> quasi_iso_transport(const PerfectComplex& c, const PerfectComplex& d,
                                               const std::vector<GroupRingMatrix>& alpha,
                                               const std::vector<DetLineMetric>& d_metrics,
                                               const TablePtr& table,
                                               const std::vector<IrreducibleRep>& reps);

/// Lemma 3.4 direct sum: complex and metrics of P + Q with product metrics.
MetrisedComplex direct_sum(const MetrisedComplex& p, const MetrisedComplex& q,
                           const TablePtr& table, const std::vector<IrreducibleRep>& reps);

/// Rescale the metric at each irreducible by alpha(phi)^{phi(1)}.
MetrisedComplex rescale_metrics(const MetrisedComplex& m, const TablePtr& table,
                                const std::vector<Rat>& alpha);

/// G-fixed-point complex over the trivial group with the trivial-character
/// metric, plus its arithmetic class computed independently.
struct FixedPointData {
    PerfectComplex fixed;            // over the trivial group
    ArithClassRep cls;               // class of the fixed complex
};

FixedPointData fixed_point_class(const MetrisedComplex& m, const HermitianFormSpec& forms,
                                 const std::vector<GroupRingMatrix>& q_bases,
                                 const std::map<unsigned long, std::vector<GroupRingMatrix>>& p_bases,
                                 const TablePtr& trivial_table);

/// Named self-test of the isometry (V tensor W)^G = conj(W) V: for random
/// exact vectors the two squared norms agree exactly. Returns the number of
/// vectors checked.
int lemma_2_3_isometry_check(const FiniteGroup& g, const CharacterTable& table, size_t irr,
                             const IrreducibleRep& rep, int samples, unsigned long seed,
                             double rel_tol);

/// |z| of an exact cyclotomic as an archimedean value (exact when possible).
ArchValue arch_abs(const CyclotomicNumber& z);

ArchValue arch_root(const ArchValue& v, long r);

ComplexInterval det_interval(Matrix<ComplexInterval> m);

} // namespace tamearith
