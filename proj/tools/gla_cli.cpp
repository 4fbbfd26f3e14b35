#include "gla/cases.hpp"
#include "gla/serialize.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <iostream>

using namespace gla;

namespace {

struct Options {
    std::string case_name;
    std::string spec_path;
    std::string out_path;
    std::string mode = "full";
    unsigned long long seed = 42;
    int threads = 1;
    std::string format = "text";
};

struct Check {
    std::string name;
    bool ok;
    std::string detail;
};

int emit_report(const Options& opt, const std::vector<Check>& checks)
{
    bool all_ok = true;
    for (const Check& c : checks)
        all_ok = all_ok && c.ok;
    if (opt.format == "json") {
        json j;
        j["schema"] = 1;
        j["ok"] = all_ok;
        json list = json::array();
        for (const Check& c : checks) {
            json e{{"name", c.name}, {"ok", c.ok}};
            if (!c.detail.empty())
                e["detail"] = c.detail;
            list.push_back(std::move(e));
        }
        j["checks"] = std::move(list);
        std::cout << j.dump(2) << '\n';
    } else {
        for (const Check& c : checks) {
            std::cout << c.name << ": " << (c.ok ? "pass" : "FAIL");
            if (!c.detail.empty())
                std::cout << " (" << c.detail << ")";
            std::cout << '\n';
        }
    }
    return all_ok ? 0 : 1;
}

std::string cases_dir()
{
    if (const char* env = std::getenv("GLA_CASES"))
        return env;
    return "cases";
}

CaseSpec resolve(const Options& opt)
{
    if (!opt.spec_path.empty())
        return load_spec_file(opt.spec_path);
    if (opt.case_name.empty())
        throw BadSpec("one of --case or --spec is required");
    const auto& names = case_names();
    if (std::find(names.begin(), names.end(), opt.case_name) == names.end())
        throw BadSpec("unknown case: " + opt.case_name);
    return load_spec_file(cases_dir() + "/" + case_file_name(opt.case_name));
}

DatumSpec datum_spec(const CaseSpec& spec)
{
    if (spec.kind != CaseSpec::Kind::datum)
        throw BadSpec("this command needs a lattice/automorphism spec");
    return spec.datum;
}

std::string vec_str(const Vec& v)
{
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

int cmd_construct(const Options& opt)
{
    DatumSpec ds = datum_spec(resolve(opt));
    ExtensionDatum datum = build_datum(ds);
    GradedLieAlgebra alg = GradedLieAlgebra::construct(datum, ds.epsilon);
    if (!opt.out_path.empty())
        write_json_atomic(opt.out_path, algebra_json(alg));
    std::vector<Check> checks;
    std::string dims;
    for (long n : alg.grading_dims_by_trace())
        dims += (dims.empty() ? "" : " ") + std::to_string(n);
    checks.push_back({"construct", true,
                      "dim " + std::to_string(alg.dim()) + ", grading [" +
                          dims + "]"});
    return emit_report(opt, checks);
}

int cmd_verify(const Options& opt)
{
    DatumSpec ds = datum_spec(resolve(opt));
    ExtensionDatum datum = build_datum(ds);
    std::vector<Check> checks;

    // Exponent agreement of the two pairing formulas on all root pairs.
    bool pairing_eq = true;
    for (const Vec& a : datum.lattice.roots) {
        for (const Vec& b : datum.lattice.roots)
            if (datum.pairing.exponent_w(a, b) !=
                datum.pairing.exponent_lepowsky(a, b)) {
                pairing_eq = false;
                break;
            }
        if (!pairing_eq)
            break;
    }
    checks.push_back({"pairing-eq", pairing_eq, ""});

    ValidationReport val = validate_input_datum(datum, ds.epsilon);
    std::string witness;
    if (!val.counterexamples.empty())
        witness = vec_str(val.counterexamples.front().first) + ", " +
                  vec_str(val.counterexamples.front().second);
    checks.push_back({"datum-valid", val.valid(), witness});
    if (!val.valid())
        return emit_report(opt, checks);

    GradedLieAlgebra alg = GradedLieAlgebra::construct(datum, ds.epsilon,
                                                       false);
    checks.push_back({"antisymmetry", alg.verify_antisymmetry(), ""});

    JacobiReport jac = opt.mode == "full"
                           ? alg.verify_jacobi_full(opt.threads)
                           : alg.verify_jacobi_sampled(100000, opt.seed,
                                                       opt.threads);
    std::string jw;
    if (!jac.ok)
        jw = "triple " + std::to_string(jac.witness[0]) + "," +
             std::to_string(jac.witness[1]) + "," +
             std::to_string(jac.witness[2]);
    checks.push_back({"jacobi", jac.ok, jw});
    if (opt.mode != "full") {
        JacobiReport cj = alg.verify_jacobi_cartan_triples();
        checks.push_back({"cartan-jacobi", cj.ok, ""});
    }

    if (ds.epsilon == EpsKind::eps_w) {
        ZBracketReport zb = opt.mode == "full"
                                ? alg.z_bracket_check()
                                : alg.z_bracket_check(10000, opt.seed);
        checks.push_back({"z-bracket", zb.ok, ""});
    }

    checks.push_back({"killing", alg.killing_nondegenerate(), ""});

    if (!opt.out_path.empty())
        write_json_atomic(opt.out_path, validation_json(val));
    return emit_report(opt, checks);
}

int cmd_fold(const Options& opt)
{
    CaseSpec spec = resolve(opt);
    if (spec.kind != CaseSpec::Kind::fold)
        throw BadSpec("this command needs a fold spec");
    std::vector<Check> checks;
    try {
        FoldResult r = fold(spec.fold);
        if (!opt.out_path.empty())
            write_json_atomic(opt.out_path, fold_json(r));
        checks.push_back({"fold", true,
                          "type " + r.identified_type + ", dim " +
                              std::to_string(r.fixed_basis.size()) +
                              ", ratio " + std::to_string(r.length_ratio)});
    } catch (const UnexpectedType& e) {
        checks.push_back({"fold", false, e.what()});
    }
    return emit_report(opt, checks);
}

int cmd_descend(const Options& opt)
{
    CaseSpec spec = resolve(opt);
    if (spec.kind != CaseSpec::Kind::descend)
        throw BadSpec("this command needs a descend spec");
    if (spec.descend_pipeline != "G2Q")
        throw BadSpec("unknown descent pipeline: " + spec.descend_pipeline);
    std::vector<Check> checks;
    try {
        G2QResult r = descend_g2q();
        if (!opt.out_path.empty())
            write_json_atomic(opt.out_path, descent_json(r));
        checks.push_back({"descent", r.killing_square_match,
                          "ambient " + std::to_string(r.ambient_dim_q) +
                              ", fixed " + std::to_string(r.fixed_dim_q)});
    } catch (const ActionConditionsViolated& e) {
        checks.push_back({"descent", false, e.what()});
    }
    return emit_report(opt, checks);
}

int cmd_rep(const Options& opt)
{
    DatumSpec ds = datum_spec(resolve(opt));
    if (ds.epsilon != EpsKind::eps_w)
        throw BadSpec("rep pipeline requires the product pairing epsilon");
    ExtensionDatum datum = build_datum(ds);
    GradedLieAlgebra alg = GradedLieAlgebra::construct(datum, ds.epsilon,
                                                       false);
    IsotropicSubgroup sub = maximal_isotropic(datum.group, datum.cocycle);
    HeisenbergRep rep = induce(datum, sub);
    GRepresentation grep = extend_to_g(alg, rep);

    std::vector<Check> checks;
    Rat norm = trace_norm_sum(rep);
    bool irred = norm == Rat(datum.d * datum.group.group_order());
    checks.push_back({"irreducible", irred,
                      "dim " + std::to_string(rep.dim())});
    RepHomReport hom = verify_rep_homomorphism(alg, rep, grep);
    std::string hw;
    if (!hom.ok)
        hw = vec_str(hom.witness.first) + ", " + vec_str(hom.witness.second);
    else
        hw = "image dim " + std::to_string(hom.image_dim);
    checks.push_back({"rep-hom", hom.ok, hw});

    if (!opt.out_path.empty())
        write_json_atomic(opt.out_path, rep_json(alg, rep, grep));
    return emit_report(opt, checks);
}

int cmd_prop_check(const Options& opt)
{
    DatumSpec ds = datum_spec(resolve(opt));
    ExtensionDatum datum = build_datum(ds);
    EpsSumReport r = eps_sum_check(datum);
    std::vector<Check> checks;
    std::string w;
    if (!r.ok)
        w = vec_str(r.witness.first) + ", " + vec_str(r.witness.second);
    else
        w = std::to_string(r.checked) + " eligible pairs";
    checks.push_back({"eps-identity", r.ok, w});
    checks.push_back({"poly-identity", r.poly_identity_ok, ""});
    return emit_report(opt, checks);
}

void add_common(CLI::App* cmd, Options& opt)
{
    cmd->add_option("--case", opt.case_name, "bundled case name");
    cmd->add_option("--spec", opt.spec_path, "path to a spec file");
    cmd->add_option("--out", opt.out_path, "artifact output path");
    cmd->add_option("--mode", opt.mode, "full|sampled")
        ->check(CLI::IsMember({"full", "sampled"}));
    cmd->add_option("--seed", opt.seed, "sampling seed");
    cmd->add_option("--threads", opt.threads, "worker thread bound");
    cmd->add_option("--format", opt.format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"graded Lie algebra toolkit"};
    app.require_subcommand(1);
    Options opt;
    int (*run)(const Options&) = nullptr;

    struct Sub {
        const char* name;
        const char* help;
        int (*fn)(const Options&);
    };
    const Sub subs[] = {
        {"construct", "build a structure-constant table", cmd_construct},
        {"verify", "run the verification suite on a datum", cmd_verify},
        {"fold", "compute a fixed subalgebra", cmd_fold},
        {"descend", "compute a rational form", cmd_descend},
        {"rep", "build and check the induced representation", cmd_rep},
        {"prop-check", "check the summed epsilon identity", cmd_prop_check},
    };
    for (const Sub& s : subs) {
        CLI::App* cmd = app.add_subcommand(s.name, s.help);
        add_common(cmd, opt);
        cmd->callback([&run, &s] { run = s.fn; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return run(opt);
    } catch (const BadSpec& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
