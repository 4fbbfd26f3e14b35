#include "gla/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace gla {

json rat_json(const Rat& r)
{
    return rat_to_string(r);
}

json cyc_json(const CycNum& a)
{
    json coeffs = json::array();
    for (const Rat& c : a.coeffs())
        coeffs.push_back(rat_json(c));
    return json{{"order", a.order()}, {"coeffs", coeffs}};
}

namespace {

json vec_json(const Vec& v)
{
    return json(v);
}

json cmat_json(const CMat& m)
{
    json rows = json::array();
    for (const CVec& row : m) {
        json r = json::array();
        for (const CycNum& c : row)
            r.push_back(cyc_json(c));
        rows.push_back(std::move(r));
    }
    return rows;
}

} // namespace

json algebra_json(const GradedLieAlgebra& alg)
{
    json basis = json::array();
    for (int i = 0; i < alg.dim(); ++i)
        basis.push_back(alg.basis_label(i));

    json brackets = json::array();
    for (int i = 0; i < alg.dim(); ++i)
        for (int j = i + 1; j < alg.dim(); ++j) {
            auto terms = alg.bracket_basis(i, j);
            if (terms.empty())
                continue;
            json jt = json::array();
            for (const Term& t : terms)
                jt.push_back(json{{"k", t.k}, {"coeff", cyc_json(t.coeff)}});
            brackets.push_back(
                json{{"i", i}, {"j", j}, {"terms", std::move(jt)}});
        }

    json grading{{"dims", alg.grading_dims_by_trace()}};
    return json{{"schema", 1},
                {"basis", std::move(basis)},
                {"dim", alg.dim()},
                {"field_order", alg.field_order()},
                {"brackets", std::move(brackets)},
                {"grading", std::move(grading)},
                {"aut_order", alg.d()}};
}

json cocycle_json(const Cocycle& c)
{
    return json{{"schema", 1},
                {"d", c.d()},
                {"table", c.generator_table()}};
}

json validation_json(const ValidationReport& r)
{
    json counter = json::array();
    for (const auto& [a, b] : r.counterexamples)
        counter.push_back(json{{"alpha", vec_json(a)}, {"beta", vec_json(b)}});
    return json{{"schema", 1},
                {"property1", r.property1},
                {"property2", r.property2},
                {"counterexamples", std::move(counter)}};
}

json rep_json(const GradedLieAlgebra& alg, const HeisenbergRep& rep,
              const GRepresentation& grep)
{
    json gens = json::object();
    for (size_t i = 0; i < grep.orbit_reps.size(); ++i) {
        int idx = alg.root_basis_index(grep.orbit_reps[i]);
        gens[alg.basis_label(idx)] = cmat_json(grep.matrices[i]);
    }
    return json{{"schema", 1},
                {"dim", rep.dim()},
                {"field_order", rep.field_order()},
                {"generators", std::move(gens)}};
}

json fold_json(const FoldResult& r)
{
    json fixed = json::array();
    for (const CVec& v : r.fixed_basis) {
        json jv = json::array();
        for (const CycNum& c : v)
            jv.push_back(cyc_json(c));
        fixed.push_back(std::move(jv));
    }
    json out = algebra_json(r.alg);
    out["fold"] = json{{"type", r.identified_type},
                       {"rank", r.rank},
                       {"dim", static_cast<long>(r.fixed_basis.size())},
                       {"num_long", r.num_long},
                       {"num_short", r.num_short},
                       {"length_ratio", r.length_ratio},
                       {"fixed_basis", std::move(fixed)}};
    return out;
}

json descent_json(const G2QResult& r)
{
    json brackets = json::array();
    for (size_t i = 0; i < r.fixed_brackets.size(); ++i)
        for (size_t j = 0; j < r.fixed_brackets[i].size(); ++j) {
            json coords = json::array();
            bool nonzero = false;
            for (const Rat& x : r.fixed_brackets[i][j]) {
                if (x != 0)
                    nonzero = true;
                coords.push_back(rat_json(x));
            }
            if (nonzero)
                brackets.push_back(json{{"i", i},
                                        {"j", j},
                                        {"coords", std::move(coords)}});
        }
    return json{{"schema", 1},
                {"ambient_dim_q", r.ambient_dim_q},
                {"fixed_dim_q", r.fixed_dim_q},
                {"killing_square_match", r.killing_square_match},
                {"brackets", std::move(brackets)}};
}

void write_json_atomic(const std::string& path, const json& j)
{
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot open " + tmp);
        out << j.dump(2) << '\n';
        if (!out)
            throw std::runtime_error("write failed: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("rename failed: " + path);
}

} // namespace gla
