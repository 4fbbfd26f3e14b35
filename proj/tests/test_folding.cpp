#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gla/folding.hpp"

using namespace gla;

TEST_CASE("the folding table rows fold to the expected types")
{
    struct Expect {
        const char* name;
        const char* type;
        long dim;
        long ratio;
    };
    const Expect expect[] = {
        {"A3C2", "C2", 10, 2},
        {"D5B4", "B4", 36, 2},
        {"D4G2", "G2", 14, 3},
        {"E6F4", "F4", 52, 2},
    };
    for (const Expect& e : expect) {
        FoldResult r = fold(folding_case(e.name));
        CHECK(r.identified_type == e.type);
        CHECK(static_cast<long>(r.fixed_basis.size()) == e.dim);
        CHECK(r.length_ratio == e.ratio);
        // The fixed vectors are actually fixed and closed under bracket.
        for (const CVec& v : r.fixed_basis)
            CHECK(cmat_apply(r.phi, v) == v);
    }
}

TEST_CASE("fixed Cartan part is self-centralizing")
{
    FoldResult r = fold(folding_case("D4G2"), false);
    // Fixed Cartan vectors: fixed basis elements supported on coroots.
    std::vector<CVec> cartan;
    for (const CVec& v : r.fixed_basis) {
        bool coroot_only = true;
        for (int i = r.alg.rank(); i < r.alg.dim(); ++i)
            if (!v[i].is_zero())
                coroot_only = false;
        if (coroot_only)
            cartan.push_back(v);
    }
    CHECK(static_cast<long>(cartan.size()) == r.rank);
    // Abelian.
    for (const CVec& x : cartan)
        for (const CVec& y : cartan) {
            CVec b = r.alg.bracket(x, y);
            CHECK(std::all_of(b.begin(), b.end(), [](const CycNum& c) {
                return c.is_zero();
            }));
        }
    // Self-centralizing inside the fixed algebra: solve [h, v] = 0 for v in
    // the span of the fixed basis, for all h in the fixed Cartan.
    const int fdim = static_cast<int>(r.fixed_basis.size());
    CMat system;
    for (const CVec& h : cartan) {
        for (int row = 0; row < r.alg.dim(); ++row) {
            CVec eq(fdim, CycNum::zero());
            for (int k = 0; k < fdim; ++k)
                eq[k] = r.alg.bracket(h, r.fixed_basis[k])[row];
            system.push_back(std::move(eq));
        }
    }
    auto centralizer = cmat_kernel(system);
    CHECK(static_cast<long>(centralizer.size()) == r.rank);
}

TEST_CASE("non-commuting pairs are rejected")
{
    FoldingCase bad = folding_case("D4G2");
    bad.word = {1, 2, 3, 4}; // Coxeter word not commuting with the 3-cycle
    CHECK_THROWS_AS(fold(bad), NonCommutingPair);
}

TEST_CASE("trivial Galois action returns the same algebra")
{
    RootLattice a2 = build_lattice("A2");
    LatticeAut c = aut_from_reflection_word(a2, {1, 2});
    GradedLieAlgebra alg = GradedLieAlgebra::construct(make_extension(a2, c),
                                                       EpsKind::eps_w, false);
    GaloisAction trivial{1, aut_from_reflection_word(a2, {}), 1};
    DescentResult r = galois_descend(alg, trivial);
    // Trivial group: the "form" is the whole algebra with scalars
    // restricted to Q, so the rational dimension is dim * phi(field order).
    const int expected = alg.dim() * static_cast<int>(euler_phi(r.field_order));
    CHECK(static_cast<int>(r.q_basis.size()) == expected);
    for (const auto& row : r.brackets)
        for (const auto& entry : row)
            CHECK(static_cast<int>(entry.size()) == expected);
}

TEST_CASE("incompatible actions are rejected")
{
    RootLattice a2 = build_lattice("A2");
    LatticeAut c = aut_from_reflection_word(a2, {1, 2});
    GradedLieAlgebra alg = GradedLieAlgebra::construct(make_extension(a2, c),
                                                       EpsKind::eps_w, false);
    // Complex conjugation on scalars without a compensating lattice twist
    // does not preserve the structure constants.
    GaloisAction bad{2, aut_from_reflection_word(a2, {}), 2};
    CHECK_THROWS_AS(galois_descend(alg, bad), ActionConditionsViolated);
}

TEST_CASE("rational form of the folded algebra")
{
    G2QResult r = descend_g2q();
    CHECK(r.ambient_dim_q == 28);
    CHECK(r.fixed_dim_q == 14);
    CHECK(r.killing_square_match);
    // Nontrivial rational structure constants exist.
    bool any = false;
    for (const auto& row : r.fixed_brackets)
        for (const auto& entry : row)
            for (const Rat& x : entry)
                if (x != 0)
                    any = true;
    CHECK(any);
}
