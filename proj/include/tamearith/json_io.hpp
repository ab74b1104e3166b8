#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "tamearith/tamefield.hpp"

namespace tamearith {

using json = nlohmann::json;

/// Group descriptor bundle: the group, its (supplied or computed) character
/// table and one representation per irreducible.
struct GroupBundle {
    std::string name;
    std::shared_ptr<const FiniteGroup> group;
    TablePtr table;
    std::vector<IrreducibleRep> reps;
};

GroupBundle load_group(const json& doc);
GroupBundle load_group_file(const std::string& path);

/// Field descriptor; group_file is resolved relative to the corpus root.
TameFieldDescriptor load_field(const json& doc, const std::string& corpus_root);
TameFieldDescriptor load_field_file(const std::string& path, const std::string& corpus_root);

/// Complex descriptor plus the hermitian forms (standard form by default,
/// optionally scaled).
struct ComplexBundle {
    std::string name;
    GroupBundle group;
    PerfectComplex complex;
    HermitianFormSpec forms;
};

ComplexBundle load_complex_file(const std::string& path, const std::string& corpus_root);

/// Bundled corpus location: the TAMEARITH_CORPUS environment variable wins,
/// then the provided fallback.
std::string corpus_root(const std::string& fallback = "data");

json cyclotomic_to_json(const CyclotomicNumber& z);
CyclotomicNumber cyclotomic_from_json(const json& j);

json class_rep_to_json(const ArithClassRep& rep);
json arch_value_to_json(const ArchValue& v);
json rational_to_json(const Rat& q);

} // namespace tamearith
