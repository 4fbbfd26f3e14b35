#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gla/lattice.hpp"

#include <random>

using namespace gla;

namespace {

std::vector<int> iota_word(int n)
{
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i)
        w[i] = i + 1;
    return w;
}

bool preserves_gram(const RootLattice& L, const IMat& m)
{
    const int n = L.rank;
    IMat mt(n, Vec(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            mt[i][j] = m[j][i];
    return imat_mul(mt, imat_mul(L.gram, m)) == L.gram;
}

} // namespace

TEST_CASE("root counts match the classical tables")
{
    CHECK(build_lattice("A1").roots.size() == 2);
    CHECK(build_lattice("A2").roots.size() == 6);
    CHECK(build_lattice("A3").roots.size() == 12);
    CHECK(build_lattice("D4").roots.size() == 24);
    CHECK(build_lattice("D5").roots.size() == 40);
    CHECK(build_lattice("E6").roots.size() == 72);
    CHECK(build_lattice("E7").roots.size() == 126);
    CHECK(build_lattice("E8").roots.size() == 240);
    CHECK(build_lattice("A1+A2").roots.size() == 8);
    CHECK_THROWS_AS(build_lattice("Z9"), UnknownType);
}

TEST_CASE("roots have norm 2, close under negation, sorted")
{
    for (const char* label : {"A2", "D4", "E6"}) {
        RootLattice L = build_lattice(label);
        for (const Vec& r : L.roots) {
            CHECK(L.pair(r, r) == 2);
            Vec neg = r;
            for (long& x : neg)
                x = -x;
            CHECK(L.is_root(neg));
        }
        CHECK(std::is_sorted(L.roots.begin(), L.roots.end()));
    }
}

TEST_CASE("Coxeter elements")
{
    RootLattice a2 = build_lattice("A2");
    LatticeAut c = aut_from_reflection_word(a2, {1, 2});
    CHECK(c.order == 3);
    CHECK(c.elliptic);
    CHECK(imat_det(imat_sub(imat_identity(2), c.matrix)) == 3);

    LatticeAut id = aut_from_reflection_word(a2, {});
    CHECK(id.order == 1);
    CHECK(!id.elliptic);

    RootLattice d4 = build_lattice("D4");
    LatticeAut cd4 = aut_from_reflection_word(d4, {2, 1, 3, 4});
    CHECK(cd4.order == 6);
    CHECK(cd4.elliptic);

    CHECK_THROWS_AS(aut_from_reflection_word(a2, {1, 3}), std::out_of_range);
}

TEST_CASE("special automorphisms of E8")
{
    RootLattice e8 = build_lattice("E8");
    auto word = iota_word(8);
    LatticeAut c = aut_from_reflection_word(e8, word);
    CHECK(c.order == 30);

    LatticeAut w5 = aut_coxeter_power(e8, word, 6);
    CHECK(w5.order == 5);
    CHECK(w5.elliptic);

    LatticeAut w2 = aut_coxeter_power(e8, word, 15);
    CHECK(w2.matrix == aut_minus_identity(e8).matrix);

    LatticeAut w3 = aut_coxeter_power(e8, word, 10);
    CHECK(w3.order == 3);
    CHECK(w3.elliptic);
}

TEST_CASE("diagram automorphisms")
{
    RootLattice d4 = build_lattice("D4");
    LatticeAut rot = aut_diagram(d4, {3, 2, 4, 1});
    CHECK(rot.order == 3);
    CHECK(!rot.elliptic); // fixes alpha_2
    CHECK_THROWS_AS(aut_diagram(d4, {2, 1, 3, 4}), NotDiagramAutomorphism);

    RootLattice a3 = build_lattice("A3");
    LatticeAut flip = aut_diagram(a3, {3, 2, 1});
    CHECK(flip.order == 2);
}

TEST_CASE("gram preservation of constructed automorphisms")
{
    RootLattice e8 = build_lattice("E8");
    auto word = iota_word(8);
    for (long e : {1L, 6L, 10L, 15L}) {
        LatticeAut a = aut_coxeter_power(e8, word, e);
        CHECK(preserves_gram(e8, a.matrix));
    }
}

TEST_CASE("Smith normal form is verified by multiplication")
{
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        IMat a(n, Vec(n));
        for (auto& row : a)
            for (long& x : row)
                x = static_cast<long>(rng() % 11) - 5;
        SmithForm s = smith_normal_form(a);
        CHECK(abs(imat_det(s.u)) == 1);
        CHECK(abs(imat_det(s.v)) == 1);
        IMat prod = imat_mul(s.u, imat_mul(a, s.v));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                CHECK(Int(prod[i][j]) == (i == j ? s.diag[i] : Int(0)));
        for (int i = 0; i + 1 < n; ++i)
            if (s.diag[i] != 0)
                CHECK(s.diag[i + 1] % s.diag[i] == 0);
    }
}

TEST_CASE("coinvariant groups")
{
    RootLattice a2 = build_lattice("A2");
    LatticeAut c = aut_from_reflection_word(a2, {1, 2});
    CoinvariantGroup g = coinvariants(a2, c);
    CHECK(g.invariant_factors() == std::vector<long>{3});
    CHECK(g.group_order() == 3);

    RootLattice e8 = build_lattice("E8");
    auto word = iota_word(8);
    CoinvariantGroup g5 =
        coinvariants(e8, aut_coxeter_power(e8, word, 6));
    CHECK(g5.invariant_factors() == std::vector<long>{5, 5});

    CoinvariantGroup g2 = coinvariants(e8, aut_minus_identity(e8));
    CHECK(g2.invariant_factors() == std::vector<long>(8, 2));

    CoinvariantGroup g3 =
        coinvariants(e8, aut_coxeter_power(e8, word, 10));
    CHECK(g3.invariant_factors() == std::vector<long>(4, 3));

    // project/lift round-trip and well-definedness on (1-w)-shifts.
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        Cls cls(g5.num_generators());
        for (long& x : cls)
            x = static_cast<long>(rng() % 5);
        CHECK(g5.project(g5.lift(cls)) == cls);
    }
    LatticeAut w5 = aut_coxeter_power(e8, word, 6);
    IMat one_minus_w = imat_sub(imat_identity(8), w5.matrix);
    for (int trial = 0; trial < 50; ++trial) {
        Vec v(8), u(8);
        for (int i = 0; i < 8; ++i) {
            v[i] = static_cast<long>(rng() % 9) - 4;
            u[i] = static_cast<long>(rng() % 9) - 4;
        }
        Vec shifted = v;
        Vec s = imat_apply(one_minus_w, u);
        for (int i = 0; i < 8; ++i)
            shifted[i] += s[i];
        CHECK(g5.project(v) == g5.project(shifted));
    }

    CHECK_THROWS_AS(coinvariants(a2, aut_from_reflection_word(a2, {})),
                    NotElliptic);
}

TEST_CASE("minimal polynomials")
{
    RootLattice a2 = build_lattice("A2");
    LatticeAut c = aut_from_reflection_word(a2, {1, 2});
    // Coxeter element of A2 has minimal polynomial t^2 + t + 1.
    CHECK(minimal_polynomial(c.matrix) == std::vector<Int>{1, 1, 1});
    LatticeAut m1 = aut_minus_identity(a2);
    CHECK(minimal_polynomial(m1.matrix) == std::vector<Int>{1, 1});
}

TEST_CASE("pairing_w basics")
{
    RootLattice a2 = build_lattice("A2");
    LatticeAut m1 = aut_minus_identity(a2);
    WPairing p(a2, m1);
    CHECK(p.d() == 2);
    for (const Vec& a : a2.roots)
        for (const Vec& b : a2.roots) {
            long expect = ((a2.pair(a, b) % 2) + 2) % 2;
            CHECK(p.exponent_w(a, b) == expect);
            CHECK(p.exponent_lepowsky(a, b) == expect);
        }

    // Coxeter pairing is trivial (every irreducible ADE type).
    for (const char* label :
         {"A1", "A2", "A3", "D4", "D5", "E6", "E7", "E8"}) {
        RootLattice L = build_lattice(label);
        LatticeAut c = aut_from_reflection_word(L, iota_word(L.rank));
        WPairing pc(L, c);
        CHECK(pc.is_trivial_on_roots());
    }
}

TEST_CASE("pairing_w equals the Lepowsky pairing")
{
    struct Case {
        const char* label;
        std::vector<int> word;
        long power;
    };
    const Case cases[] = {
        {"A2", {1, 2}, 1},
        {"D4", {2, 1, 3, 4}, 1},
        {"E8", {1, 2, 3, 4, 5, 6, 7, 8}, 6},
        {"E8", {1, 2, 3, 4, 5, 6, 7, 8}, 10},
        {"E8", {1, 2, 3, 4, 5, 6, 7, 8}, 15},
    };
    for (const Case& tc : cases) {
        RootLattice L = build_lattice(tc.label);
        LatticeAut w = aut_coxeter_power(L, tc.word, tc.power);
        WPairing p(L, w);
        for (const Vec& a : L.roots)
            for (const Vec& b : L.roots)
                CHECK(p.exponent_w(a, b) == p.exponent_lepowsky(a, b));
    }
}

TEST_CASE("pairing_w is alternating and bilinear on classes")
{
    RootLattice e8 = build_lattice("E8");
    LatticeAut w = aut_coxeter_power(e8, iota_word(8), 10);
    WPairing p(e8, w);
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 200; ++trial) {
        Vec a(8), a2(8), b(8);
        for (int i = 0; i < 8; ++i) {
            a[i] = static_cast<long>(rng() % 7) - 3;
            a2[i] = static_cast<long>(rng() % 7) - 3;
            b[i] = static_cast<long>(rng() % 7) - 3;
        }
        CHECK(p.exponent_w(a, a) == 0);
        Vec sum(8);
        for (int i = 0; i < 8; ++i)
            sum[i] = a[i] + a2[i];
        CHECK(p.exponent_w(sum, b) ==
              (p.exponent_w(a, b) + p.exponent_w(a2, b)) % p.d());
        // Skew symmetry.
        CHECK((p.exponent_w(a, b) + p.exponent_w(b, a)) % p.d() == 0);
    }
}

TEST_CASE("no elliptic automorphism fixes a root")
{
    struct Case {
        const char* label;
        long power;
    };
    RootLattice e8 = build_lattice("E8");
    for (long power : {6L, 10L, 15L}) {
        LatticeAut w = aut_coxeter_power(e8, iota_word(8), power);
        for (const Vec& r : e8.roots)
            CHECK(w.apply(r) != r);
    }
}
