#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "tamearith/json_io.hpp"

namespace tamearith {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

struct VerifyOptions {
    unsigned long seed = 1;
    double tol = 1e-9;
    std::string corpus = "data";
};

/// Property suites per module; suite names: groupchar, cyclo, classrep,
/// metcomplex, tamefield. Deterministic under a fixed seed.
SuiteResult run_suite(const std::string& name, const VerifyOptions& opt);
std::vector<std::string> suite_names();
std::vector<SuiteResult> run_all_suites(const VerifyOptions& opt);

// ---- fixture helpers shared with the acceptance and benchmark drivers ----

/// The eight-group corpus, loaded from descriptors.
std::vector<GroupBundle> corpus_groups(const std::string& corpus);
std::vector<TameFieldDescriptor> corpus_fields(const std::string& corpus);

/// Unimodular matrix over Z[G] (product of elementary and signed monomial
/// factors) together with its inverse.
struct UnitPair {
    GroupRingMatrix m;
    GroupRingMatrix m_inv;
};
UnitPair random_gl_zg(std::mt19937_64& rng, const FiniteGroup& g, size_t d, int factors = 6);

/// p-integral matrix with unit determinant at p (adds odd scalar factors).
UnitPair random_gl_zpg(std::mt19937_64& rng, const FiniteGroup& g, size_t d, unsigned long p);

/// Invertible matrix over Q[G].
GroupRingMatrix random_gl_qg(std::mt19937_64& rng, const GroupBundle& bundle, size_t d);

/// Random G-invariant positive definite exact form on a rank-d term.
FormMatrix random_invariant_form(std::mt19937_64& rng, const FiniteGroup& g, long rank);

/// Random free complex over three degrees with exact invariant forms.
struct ComplexFixture {
    PerfectComplex complex;
    HermitianFormSpec forms;
};
ComplexFixture random_complex(std::mt19937_64& rng, const GroupBundle& bundle);

/// Quasi-isomorphic pair: P = U (D + acyclic) U^{-1} with the projection map
/// alpha: P -> D; metrics on D from the fixture forms.
struct QuasiIsoFixture {
    MetrisedComplex d;
    HermitianFormSpec d_forms;
    PerfectComplex p;
    std::vector<GroupRingMatrix> alpha;
};
QuasiIsoFixture random_quasi_iso_pair(std::mt19937_64& rng, const GroupBundle& bundle);

/// Smith-normal-form based |det| oracle over the integers.
Int snf_abs_det(std::vector<std::vector<Int>> m);

} // namespace tamearith
