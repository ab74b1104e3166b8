#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include <nlohmann/json.hpp>

#include "tamearith/parallel.hpp"
#include "tamearith/verify.hpp"

using namespace tamearith;
using ojson = nlohmann::ordered_json;

namespace {

struct CliOptions {
    unsigned long seed = 1;
    double tol = 1e-9;
    int precision_bits = 53;
    std::string format = "text";
    std::string out;
    std::string corpus;
    int threads = 0;
};

std::string basename_of(const std::string& path) {
    auto pos = path.find_last_of('/');
    return pos == std::string::npos ? path : path.substr(pos + 1);
}

void emit(const CliOptions& opt, const ojson& report, const std::string& text) {
    std::string payload = opt.format == "json" ? report.dump(1) + "\n" : text;
    if (opt.out.empty()) {
        std::cout << payload;
    } else {
        std::ofstream f(opt.out);
        if (!f.good()) {
            std::cerr << "cannot write " << opt.out << "\n";
            std::exit(2);
        }
        f << payload;
    }
}

std::string fmt_rat(const Rat& q) { return q.get_str(); }

std::string fmt_cyclo(const CyclotomicNumber& z) {
    if (auto q = z.to_rational()) return q->get_str();
    return z.to_string();
}

ojson interval_json(const ComplexInterval& z) {
    return ojson{{"re", z.re.midpoint()}, {"im", z.im.midpoint()},
                 {"rad", std::max(z.re.rad, z.im.rad)}};
}

int cmd_chars(const CliOptions& opt, const std::string& file) {
    auto bundle = load_group_file(file);
    ojson report;
    report["schema"] = "tamearith/report-v1";
    report["command"] = "chars";
    report["input"] = basename_of(file);
    report["group"] = bundle.name;
    report["order"] = bundle.group->order();
    report["classes"] = ojson::array();
    auto& table = *bundle.table;
    for (size_t c = 0; c < table.classes.count(); ++c)
        report["classes"].push_back(
            ojson{{"representative", table.classes.representatives[c]},
                  {"size", table.classes.classes[c].size()}});
    report["characters"] = ojson::array();
    std::string text = "group " + bundle.name + " (order " +
                       std::to_string(bundle.group->order()) + ")\n";
    for (size_t i = 0; i < table.size(); ++i) {
        ojson chi;
        chi["index"] = i;
        chi["degree"] = table.irreducibles[i].degree;
        chi["frobenius_schur"] = table.frobenius_schur(i);
        chi["values"] = ojson::array();
        text += "chi" + std::to_string(i) + ": degree " +
                std::to_string(table.irreducibles[i].degree) + ", FS " +
                std::to_string(table.frobenius_schur(i)) + ", values";
        for (size_t c = 0; c < table.classes.count(); ++c) {
            chi["values"].push_back(ojson(cyclotomic_to_json(table.irreducibles[i].values[c])));
            text += " " + fmt_cyclo(table.irreducibles[i].values[c]);
        }
        text += "\n";
        report["characters"].push_back(std::move(chi));
    }
    report["symplectic_generators"] = ojson::array();
    for (const auto& gen : symplectic_generators(bundle.table)) {
        ojson g;
        g["label"] = gen.label;
        g["degree"] = gen.character.degree();
        g["coeffs"] = gen.character.coeffs;
        report["symplectic_generators"].push_back(std::move(g));
        text += "symplectic generator " + gen.label + " (degree " +
                std::to_string(gen.character.degree()) + ")\n";
    }
    emit(opt, report, text);
    return 0;
}

int cmd_class_complex(const CliOptions& opt, const std::string& file,
                      const std::string& corpus) {
    auto bundle = load_complex_file(file, corpus);
    auto m = hermitian_to_metrised(bundle.complex, bundle.forms, bundle.group.table,
                                   bundle.group.reps);
    auto cls = arithmetic_class_std(m, bundle.group.table, bundle.group.reps);
    ojson report;
    report["schema"] = "tamearith/report-v1";
    report["command"] = "class-complex";
    report["input"] = basename_of(file);
    report["complex"] = bundle.name;
    report["class"] = ojson(class_rep_to_json(cls));
    std::string text = "complex " + bundle.name + "\n";
    for (size_t i = 0; i < bundle.group.table->size(); ++i) {
        text += "chi" + std::to_string(i) + ": arch = ";
        const auto& a = cls.arch.values[i];
        text += std::to_string(a.iv.midpoint());
        if (a.exact) text += " (= " + fmt_rat(*a.exact) + " exactly)";
        else if (a.exact_sq) text += " (square = " + fmt_rat(*a.exact_sq) + " exactly)";
        for (unsigned long p : cls.fin.support)
            text += ", fin@" + std::to_string(p) + " = " + fmt_cyclo(cls.fin.at(p, i));
        text += "\n";
    }
    emit(opt, report, text);
    return 0;
}

int cmd_field_report(const CliOptions& opt, const std::string& file,
                     const std::string& corpus) {
    auto f = load_field_file(file, corpus);
    ojson report;
    report["schema"] = "tamearith/report-v1";
    report["command"] = "field-report";
    report["input"] = basename_of(file);
    report["field"] = f.name;
    report["group_order"] = f.group->order();
    report["ram_complete"] = f.ram_complete;

    std::string text = "field " + f.name + "\n";

    report["resolvents"] = ojson::array();
    for (size_t irr = 0; irr < f.table->size(); ++irr) {
        auto r = resolvent(f, irr);
        ojson rr = interval_json(r);
        rr["character"] = irr;
        report["resolvents"].push_back(std::move(rr));
        text += "resolvent chi" + std::to_string(irr) + " = " +
                std::to_string(r.re.midpoint()) + " + " + std::to_string(r.im.midpoint()) +
                "i\n";
    }

    auto gens = symplectic_generators(f.table);
    report["generators"] = ojson::array();
    std::optional<SymplecticClassReport> thm59;
    if (f.ram_complete) thm59 = theorem_5_9_representative(f);
    auto thm510 = theorem_5_10_check(f);
    for (size_t g = 0; g < gens.size(); ++g) {
        ojson gj;
        gj["label"] = gens[g].label;
        gj["degree"] = gens[g].character.degree();
        gj["eps_infinity"] = thm510.eps_signs[g];
        gj["resolvent_sign"] = thm510.resolvent_signs[g];
        ojson cond = ojson::object();
        ojson pf = ojson::object();
        for (const auto& r : f.ram) {
            cond[std::to_string(r.p)] = artin_conductor_p(f, gens[g].character, r.p);
            size_t idx = static_cast<size_t>(&r - f.ram.data());
            pf[std::to_string(r.p)] = fmt_rat(pfaffian_at(f, idx, gens[g].character));
        }
        gj["conductor_exponents"] = std::move(cond);
        gj["pfaffian"] = std::move(pf);
        text += "generator " + gens[g].label + ": eps = " +
                std::to_string(thm510.eps_signs[g]);
        if (thm59) {
            ojson rep = ojson::object();
            for (const auto& [p, v] : thm59->representative.fin[g])
                rep[std::to_string(p)] = fmt_cyclo(v);
            gj["theorem_5_9_fin"] = std::move(rep);
            gj["delta"] = ojson(arch_value_to_json(thm59->delta[g]));
            gj["theta"] = fmt_rat(thm59->theta.values[g]);
            text += ", theta = " + fmt_rat(thm59->theta.values[g]);
        }
        text += "\n";
        report["generators"].push_back(std::move(gj));
    }
    report["theorem_5_10_match"] = thm510.all_match;
    text += std::string("resolvent signs match the archimedean epsilon signs: ") +
            (thm510.all_match ? "yes" : "NO") + "\n";
    emit(opt, report, text);
    return thm510.all_match ? 0 : 1;
}

int cmd_verify(const CliOptions& opt, const std::string& suite, const std::string& corpus) {
    VerifyOptions vo;
    vo.seed = opt.seed;
    vo.tol = opt.tol;
    vo.corpus = corpus;
    std::vector<SuiteResult> results;
    if (suite == "all") {
        results = run_all_suites(vo);
    } else {
        results.push_back(run_suite(suite, vo));
    }
    bool pass = true;
    ojson report;
    report["schema"] = "tamearith/report-v1";
    report["command"] = "verify";
    report["suite"] = suite;
    report["seed"] = opt.seed;
    report["tol"] = opt.tol;
    report["suites"] = ojson::array();
    std::string text;
    double total = 0.0;
    for (const auto& sr : results) {
        ojson sj;
        sj["suite"] = sr.suite;
        sj["checks"] = ojson::array();
        for (const auto& c : sr.checks) {
            pass = pass && c.pass;
            total += c.seconds;
            sj["checks"].push_back(
                ojson{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
            char line[512];
            std::snprintf(line, sizeof(line), "[%s] %s: %s (%s; %.2fs)\n",
                          c.pass ? "pass" : "FAIL", sr.suite.c_str(), c.name.c_str(),
                          c.detail.c_str(), c.seconds);
            text += line;
        }
        sj["pass"] = sr.pass();
        report["suites"].push_back(std::move(sj));
    }
    report["pass"] = pass;
    char tail[128];
    std::snprintf(tail, sizeof(tail), "%s (total %.2fs)\n", pass ? "ALL PASS" : "FAILURES",
                  total);
    text += tail;
    emit(opt, report, text);
    return pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact equivariant Arakelov-Euler characteristics for tame fields"};
    app.require_subcommand(1);

    CliOptions opt;
    app.add_option("--seed", opt.seed, "random seed for verification fixtures");
    app.add_option("--tol", opt.tol, "relative tolerance for certified comparisons")
        ->check(CLI::PositiveNumber);
    app.add_option("--precision-bits", opt.precision_bits,
                   "working precision for generated embeddings (53 or 106)");
    app.add_option("--format", opt.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", opt.out, "write the report to a file");
    app.add_option("--corpus", opt.corpus,
                   "corpus directory (default: TAMEARITH_CORPUS or ./data)");
    app.add_option("--threads", opt.threads, "0 = library default; 1 = serial");

    std::string chars_file, complex_file, field_file, suite = "all";
    auto* chars = app.add_subcommand("chars", "character table, FS indicators, generators");
    chars->add_option("group", chars_file, "group descriptor")->required();
    auto* ccx = app.add_subcommand("class-complex", "arithmetic class of a metrised complex");
    ccx->add_option("complex", complex_file, "complex descriptor")->required();
    auto* fld = app.add_subcommand("field-report", "tame field invariants and theta values");
    fld->add_option("field", field_file, "field descriptor")->required();
    auto* ver = app.add_subcommand("verify", "run the property suites");
    ver->add_option("--suite", suite, "groupchar|cyclo|classrep|metcomplex|tamefield|all");
    for (auto* sub : {chars, ccx, fld, ver}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        precision::set_bits(opt.precision_bits);
        if (opt.threads == 1) parallel::set_enabled(false);
        std::string corpus = opt.corpus.empty() ? corpus_root() : opt.corpus;
        if (chars->parsed()) return cmd_chars(opt, chars_file);
        if (ccx->parsed()) return cmd_class_complex(opt, complex_file, corpus);
        if (fld->parsed()) return cmd_field_report(opt, field_file, corpus);
        if (ver->parsed()) {
            if (suite != "all") {
                auto names = suite_names();
                if (std::find(names.begin(), names.end(), suite) == names.end()) {
                    std::cerr << "unknown suite: " << suite << "\n";
                    return 2;
                }
            }
            return cmd_verify(opt, suite, corpus);
        }
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (e.code() == errc::precision_insufficient)
            std::cerr << "hint: retry with --precision-bits 106\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
