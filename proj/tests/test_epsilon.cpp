#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gla/epsilon.hpp"

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

ExtensionDatum coxeter_datum(const std::string& label)
{
    RootLattice L = build_lattice(label);
    return make_extension(L, aut_from_reflection_word(L, iota_word(L.rank)));
}

ExtensionDatum e8_datum(long power)
{
    RootLattice e8 = build_lattice("E8");
    return make_extension(e8, aut_coxeter_power(e8, iota_word(8), power));
}

ExtensionDatum minus_one_datum(const std::string& label)
{
    RootLattice L = build_lattice(label);
    return make_extension(L, aut_minus_identity(L));
}

} // namespace

TEST_CASE("closed forms on A1 with w = -1")
{
    ExtensionDatum e = minus_one_datum("A1");
    EpsEvaluator eps(e, EpsKind::eps_w);
    Vec alpha = e.lattice.roots[1]; // the positive root
    Vec neg = e.lattice.roots[0];
    // Single factor (1 - zeta_2^{-1})^{(w a, b)} = 2^{-(a, b)}.
    CHECK(eps(alpha, neg) == CycNum::from_rational(Rat(4)));
    CHECK(eps(alpha, alpha) == CycNum::from_rational(Rat(1, 4)));

    EpsEvaluator triv(e, EpsKind::trivial);
    CHECK(triv(alpha, neg) == CycNum::one());
}

TEST_CASE("ratio identity for eps_w")
{
    // eps_w(a,b)/eps_w(b,a) = (-1)^{(a,b)} zeta^{<b,a>_w}, exhaustively on
    // small Coxeter data and on all three elliptic E8 data.
    std::vector<ExtensionDatum> data;
    data.push_back(coxeter_datum("A2"));
    data.push_back(coxeter_datum("A3"));
    data.push_back(coxeter_datum("D4"));
    data.push_back(e8_datum(6));
    data.push_back(e8_datum(10));
    data.push_back(e8_datum(15));
    for (const ExtensionDatum& e : data) {
        EpsEvaluator eps(e, EpsKind::eps_w);
        for (const Vec& a : e.lattice.roots)
            for (const Vec& b : e.lattice.roots) {
                CycNum want = CycNum::root_of_unity(
                    e.d, e.pairing.exponent_w(b, a));
                if (e.lattice.pair(a, b) % 2 != 0)
                    want = -want;
                CHECK(eps(a, b) / eps(b, a) == want);
            }
    }
}

TEST_CASE("bilinearity of every kind")
{
    ExtensionDatum e = e8_datum(10);
    std::mt19937_64 rng(2718);
    for (EpsKind kind : {EpsKind::eps_w, EpsKind::trivial,
                         EpsKind::d3_variant, EpsKind::odd_variant}) {
        EpsEvaluator eps(e, kind);
        for (int trial = 0; trial < 60; ++trial) {
            Vec a(8), a2(8), b(8);
            for (int i = 0; i < 8; ++i) {
                a[i] = static_cast<long>(rng() % 5) - 2;
                a2[i] = static_cast<long>(rng() % 5) - 2;
                b[i] = static_cast<long>(rng() % 5) - 2;
            }
            Vec sum(8);
            for (int i = 0; i < 8; ++i)
                sum[i] = a[i] + a2[i];
            CHECK(eps(sum, b) == eps(a, b) * eps(a2, b));
            CHECK(eps(b, sum) == eps(b, a) * eps(b, a2));
        }
    }
}

TEST_CASE("w-invariance of eps_w")
{
    for (long power : {6L, 10L, 15L}) {
        ExtensionDatum e = e8_datum(power);
        EpsEvaluator eps(e, EpsKind::eps_w);
        std::mt19937_64 rng(500 + power);
        for (int trial = 0; trial < 500; ++trial) {
            const Vec& a = e.lattice.roots[rng() % e.lattice.roots.size()];
            const Vec& b = e.lattice.roots[rng() % e.lattice.roots.size()];
            CHECK(eps(e.w.apply(a), e.w.apply(b)) == eps(a, b));
        }
    }
}

TEST_CASE("input-datum validation accepts the standard data")
{
    for (long power : {6L, 10L, 15L}) {
        ValidationReport r = validate_input_datum(e8_datum(power),
                                                  EpsKind::eps_w);
        CHECK(r.property1);
        CHECK(r.property2);
        CHECK(r.counterexamples.empty());
    }
    CHECK(validate_input_datum(coxeter_datum("A2"), EpsKind::eps_w).valid());
    CHECK(validate_input_datum(coxeter_datum("D4"), EpsKind::eps_w).valid());
}

TEST_CASE("trivial epsilon is valid for w = -1")
{
    for (const char* label : {"A1", "A2", "D4"}) {
        ValidationReport r = validate_input_datum(minus_one_datum(label),
                                                  EpsKind::trivial);
        CHECK(r.valid());
    }
}

TEST_CASE("order-3 variants are valid on E8")
{
    ExtensionDatum e = e8_datum(10);
    CHECK(validate_input_datum(e, EpsKind::d3_variant).valid());
    CHECK(validate_input_datum(e, EpsKind::odd_variant).valid());
    // For d = 3 the two variant formulas agree up to validation, and the
    // constructors reject incompatible orders.
    CHECK_THROWS_AS(EpsEvaluator(e8_datum(6), EpsKind::d3_variant),
                    std::invalid_argument);
    CHECK_THROWS_AS(EpsEvaluator(e8_datum(15), EpsKind::odd_variant),
                    std::invalid_argument);
}

TEST_CASE("corrupted epsilon is rejected with a witness")
{
    ExtensionDatum e = coxeter_datum("A2");
    EpsEvaluator eps(e, EpsKind::eps_w);
    Vec bad_a = e.lattice.roots[0];
    Vec bad_b = e.lattice.roots[1];
    EpsFn corrupted = [&](const Vec& a, const Vec& b) {
        CycNum v = eps(a, b);
        if (a == bad_a && b == bad_b)
            return -v; // one sign flip
        return v;
    };
    ValidationReport r = validate_input_datum(e, corrupted);
    CHECK(!r.valid());
    CHECK(!r.counterexamples.empty());
}
