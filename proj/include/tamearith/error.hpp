#pragma once

#include <stdexcept>
#include <string>

namespace tamearith {

enum class errc {
    supplied_table_invalid,
    computation_overflow,
    not_irreducible,
    not_a_subgroup,
    division_by_zero,
    not_coprime,
    precision_insufficient,
    singular,
    group_mismatch,
    not_visibly_rational,
    odd_pairing,
    odd_product,
    not_rational_square,
    not_a_basis,
    rank_deficiency,
    not_quasi_iso,
    not_symplectic,
    non_integral_exponent,
    bad_order,
    not_free,
    not_cohomologically_trivial,
    descriptor_invalid,
    internal,
};

const char* errc_name(errc c);

/// All library failures are thrown as tamearith::error; `code()` carries the
/// contract violation so callers (and the CLI exit-code mapping) can dispatch
/// without string matching.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline void require(bool cond, errc code, const std::string& what) {
    if (!cond) fail(code, what);
}

} // namespace tamearith
