#include "tamearith/error.hpp"

namespace tamearith {

const char* errc_name(errc c) {
    switch (c) {
        case errc::supplied_table_invalid: return "SuppliedTableInvalid";
        case errc::computation_overflow: return "ComputationOverflow";
        case errc::not_irreducible: return "NotIrreducible";
        case errc::not_a_subgroup: return "NotASubgroup";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::not_coprime: return "NotCoprime";
        case errc::precision_insufficient: return "PrecisionInsufficient";
        case errc::singular: return "Singular";
        case errc::group_mismatch: return "GroupMismatch";
        case errc::not_visibly_rational: return "NotVisiblyRational";
        case errc::odd_pairing: return "OddPairing";
        case errc::odd_product: return "OddProduct";
        case errc::not_rational_square: return "NotRationalSquare";
        case errc::not_a_basis: return "NotABasis";
        case errc::rank_deficiency: return "RankDeficiency";
        case errc::not_quasi_iso: return "NotQuasiIso";
        case errc::not_symplectic: return "NotSymplectic";
        case errc::non_integral_exponent: return "NonIntegralExponent";
        case errc::bad_order: return "BadOrder";
        case errc::not_free: return "NotFree";
        case errc::not_cohomologically_trivial: return "NotCohomologicallyTrivial";
        case errc::descriptor_invalid: return "DescriptorInvalid";
        case errc::internal: return "InternalError";
    }
    return "UnknownError";
}

} // namespace tamearith
