#include "tamearith/json_io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

namespace tamearith {

namespace {

json read_json(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), errc::descriptor_invalid, "cannot open " + path);
    json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        fail(errc::descriptor_invalid, "malformed JSON in " + path + ": " + e.what());
    }
    return doc;
}

Rat rat_from_json(const json& j) {
    require(j.is_array() && j.size() == 2, errc::descriptor_invalid,
            "rational literal must be [num, den]");
    Int num(j[0].get<long>());
    Int den(j[1].get<long>());
    return rat(num, den);
}

} // namespace

json rational_to_json(const Rat& q) {
    return json::array({q.get_num().get_str(), q.get_den().get_str()});
}

CyclotomicNumber cyclotomic_from_json(const json& j) {
    require(j.is_object() && j.contains("n") && j.contains("coeffs"), errc::descriptor_invalid,
            "cyclotomic literal must carry n and coeffs");
    long n = j["n"].get<long>();
    std::vector<Rat> coeffs;
    for (const auto& c : j["coeffs"]) coeffs.push_back(rat_from_json(c));
    return CyclotomicNumber::from_coeffs(n, std::move(coeffs));
}

json cyclotomic_to_json(const CyclotomicNumber& z) {
    json coeffs = json::array();
    for (const auto& c : z.coeffs())
        coeffs.push_back(json::array({c.get_num().get_str(), c.get_den().get_str()}));
    return json{{"n", z.conductor()}, {"coeffs", coeffs}};
}

json arch_value_to_json(const ArchValue& v) {
    json out;
    out["value"] = v.iv.midpoint();
    out["rad"] = v.iv.rad;
    if (v.exact) out["exact"] = rational_to_json(*v.exact);
    if (v.exact_sq) out["exact_sq"] = rational_to_json(*v.exact_sq);
    return out;
}

json class_rep_to_json(const ArithClassRep& rep) {
    json fin = json::object();
    for (unsigned long p : rep.fin.support) {
        json at_p = json::object();
        for (size_t i = 0; i < rep.table->size(); ++i)
            at_p[std::to_string(i)] = cyclotomic_to_json(rep.fin.at(p, i));
        fin[std::to_string(p)] = std::move(at_p);
    }
    json arch = json::object();
    for (size_t i = 0; i < rep.table->size(); ++i)
        arch[std::to_string(i)] = arch_value_to_json(rep.arch.values[i]);
    return json{{"fin", fin}, {"arch", arch}};
}

GroupBundle load_group(const json& doc) {
    require(doc.value("schema", "") == "tamearith/group-v1", errc::descriptor_invalid,
            "not a group descriptor");
    GroupBundle out;
    out.name = doc.value("name", "G");
    long order = doc.at("order").get<long>();
    std::vector<std::vector<int>> table;
    for (const auto& row : doc.at("mul_table")) {
        std::vector<int> r;
        for (const auto& v : row) r.push_back(v.get<int>());
        table.push_back(std::move(r));
    }
    require(static_cast<long>(table.size()) == order, errc::descriptor_invalid,
            "order disagrees with the multiplication table");
    out.group = std::make_shared<FiniteGroup>(out.name, std::move(table));

    std::optional<std::vector<Character>> supplied;
    if (doc.contains("char_table")) {
        auto classes = conjugacy_classes(*out.group);
        std::vector<Character> chars;
        for (const auto& row : doc["char_table"]) {
            Character chi;
            require(row.size() == classes.count(), errc::supplied_table_invalid,
                    "character row length must match the class count");
            for (const auto& v : row) chi.values.push_back(cyclotomic_from_json(v));
            chars.push_back(std::move(chi));
        }
        supplied = std::move(chars);
    }
    out.table = character_table(out.group, std::move(supplied));

    // representations: automatic for degree one, supplied otherwise
    out.reps.resize(out.table->size());
    for (size_t i = 0; i < out.table->size(); ++i) {
        if (out.table->irreducibles[i].degree == 1) {
            IrreducibleRep r;
            r.dim = 1;
            r.matrices.resize(out.group->order());
            for (int g = 0; g < out.group->order(); ++g) {
                CycMatrix m(1, 1);
                m(0, 0) = out.table->value(i, g);
                r.matrices[g] = std::move(m);
            }
            out.reps[i] = std::move(r);
        }
    }
    long exponent = out.group->exponent();
    if (doc.contains("irreps")) {
        for (const auto& rj : doc["irreps"]) {
            IrreducibleRep rep;
            rep.dim = rj.at("dim").get<long>();
            size_t idx = rj.at("character_index").get<size_t>();
            require(idx < out.table->size(), errc::descriptor_invalid,
                    "representation character index out of range");
            for (const auto& mj : rj.at("matrices")) {
                CycMatrix m(static_cast<size_t>(rep.dim), static_cast<size_t>(rep.dim),
                            CyclotomicNumber(0));
                require(mj.size() == static_cast<size_t>(rep.dim), errc::descriptor_invalid,
                        "representation matrix row count mismatch");
                for (size_t r = 0; r < m.rows(); ++r) {
                    require(mj[r].size() == static_cast<size_t>(rep.dim),
                            errc::descriptor_invalid, "representation matrix column mismatch");
                    for (size_t c = 0; c < m.cols(); ++c) {
                        CyclotomicNumber acc(0);
                        for (const auto& term : mj[r][c]) {
                            require(term.is_array() && term.size() == 3, errc::descriptor_invalid,
                                    "matrix entry terms are [num, den, zexp]");
                            Rat coeff = rat(Int(term[0].get<long>()),
                                            Int(term[1].get<long>()));
                            long zexp = term[2].get<long>();
                            acc += CyclotomicNumber(coeff) *
                                   CyclotomicNumber::zeta(exponent, zexp);
                        }
                        m(r, c) = std::move(acc);
                    }
                }
                rep.matrices.push_back(std::move(m));
            }
            validate_rep(*out.table, idx, rep);
            out.reps[idx] = std::move(rep);
        }
    }
    return out;
}

GroupBundle load_group_file(const std::string& path) { return load_group(read_json(path)); }

TameFieldDescriptor load_field(const json& doc, const std::string& root) {
    require(doc.value("schema", "") == "tamearith/field-v1", errc::descriptor_invalid,
            "not a field descriptor");
    auto group_path = std::filesystem::path(root) / doc.at("group_file").get<std::string>();
    GroupBundle bundle = load_group_file(group_path.string());

    TameFieldDescriptor f;
    f.name = doc.value("name", "N");
    f.group = bundle.group;
    f.table = bundle.table;
    f.reps = bundle.reps;
    f.k_degree = doc.value("k_degree", 1);
    if (doc.contains("d_K")) f.dK_abs = rat_from_json(doc["d_K"]);
    f.conj_element = doc.at("conj_element").get<int>();
    f.ram_complete = doc.value("ram_complete", true);
    f.provenance = doc.value("provenance", "");

    for (const auto& ej : doc.at("embeddings")) {
        DD re = dd_from_decimal(ej.at("re").get<std::string>());
        DD im = dd_from_decimal(ej.at("im").get<std::string>());
        double rad = ej.value("rad", 1e-30);
        f.embeddings.push_back(
            ComplexInterval{RealInterval(re, rad), RealInterval(im, rad)});
    }

    for (const auto& rj : doc.value("ram", json::array())) {
        RamRecord r;
        r.p = rj.at("p").get<unsigned long>();
        r.f = rj.at("f").get<long>();
        r.num_primes = rj.at("num_primes").get<long>();
        for (const auto& e : rj.at("inertia")) r.inertia_elements.push_back(e.get<int>());
        r.inertia_gen = rj.at("inertia_gen").get<int>();
        r.inertia_exp = rj.at("inertia_exp").get<long>();
        r.q = rj.at("q").get<unsigned long>();
        f.ram.push_back(std::move(r));
    }
    f.validate();
    return f;
}

TameFieldDescriptor load_field_file(const std::string& path, const std::string& root) {
    return load_field(read_json(path), root);
}

ComplexBundle load_complex_file(const std::string& path, const std::string& root) {
    json doc = read_json(path);
    require(doc.value("schema", "") == "tamearith/complex-v1", errc::descriptor_invalid,
            "not a complex descriptor");
    ComplexBundle out;
    out.name = doc.value("name", "complex");
    auto group_path = std::filesystem::path(root) / doc.at("group_file").get<std::string>();
    out.group = load_group_file(group_path.string());

    out.complex.group = out.group.group;
    out.complex.lo = doc.value("lo", 0);
    for (const auto& r : doc.at("ranks")) out.complex.ranks.push_back(r.get<long>());
    for (const auto& bj : doc.value("boundaries", json::array())) {
        size_t idx = out.complex.boundaries.size();
        long rows = out.complex.ranks[idx + 1];
        long cols = out.complex.ranks[idx];
        GroupRingMatrix b(static_cast<size_t>(rows), static_cast<size_t>(cols),
                          *out.group.group);
        require(bj.size() == static_cast<size_t>(rows), errc::descriptor_invalid,
                "boundary row count mismatch");
        for (size_t r = 0; r < static_cast<size_t>(rows); ++r) {
            require(bj[r].size() == static_cast<size_t>(cols), errc::descriptor_invalid,
                    "boundary column count mismatch");
            for (size_t c = 0; c < static_cast<size_t>(cols); ++c) {
                GroupRingElem e = group_ring_zero(*out.group.group);
                for (auto it = bj[r][c].begin(); it != bj[r][c].end(); ++it) {
                    int elt = std::stoi(it.key());
                    require(elt >= 0 && elt < out.group.group->order(), errc::descriptor_invalid,
                            "group element index out of range in boundary");
                    e[elt] = Rat(it.value().get<long>());
                }
                b(r, c) = std::move(e);
            }
        }
        out.complex.boundaries.push_back(std::move(b));
    }
    out.complex.validate();

    Rat scale(1);
    if (doc.contains("form_scale")) scale = rat_from_json(doc["form_scale"]);
    for (size_t t = 0; t < out.complex.terms(); ++t) {
        size_t dim = static_cast<size_t>(out.complex.ranks[t]) * out.group.group->order();
        out.forms.forms.push_back(scale == 1 ? FormMatrix::identity(dim)
                                             : FormMatrix::scaled_identity(dim, scale));
    }
    return out;
}

std::string corpus_root(const std::string& fallback) {
    if (const char* env = std::getenv("TAMEARITH_CORPUS")) return env;
    return fallback;
}

} // namespace tamearith
