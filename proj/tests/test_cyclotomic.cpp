#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gla/cyclotomic.hpp"

#include <random>

using namespace gla;

namespace {

// Deterministic random elements with small coefficients.
CycNum random_cyc(std::mt19937_64& rng, long order)
{
    std::vector<Rat> c(euler_phi(order));
    for (Rat& x : c) {
        long num = static_cast<long>(rng() % 11) - 5;
        long den = 1 + static_cast<long>(rng() % 4);
        x = Rat(num, den);
    }
    return CycNum::from_coeffs(order, std::move(c));
}

} // namespace

TEST_CASE("roots of unity in canonical form")
{
    CHECK(CycNum::root_of_unity(1, 0) == CycNum::one());
    CHECK(CycNum::root_of_unity(4, 2) == CycNum::from_rational(Rat(-1)));
    CycNum z3 = CycNum::root_of_unity(3, 1);
    CHECK(z3.pow(3) == CycNum::one());
    CHECK(z3.pow(3).is_rational());

    for (long n = 1; n <= 30; ++n) {
        for (long k = 0; k < 2 * n; ++k) {
            CycNum z = CycNum::root_of_unity(n, k);
            CHECK(z.pow(n) == CycNum::one());
            CHECK(z == CycNum::root_of_unity(n, k % n));
        }
    }
}

TEST_CASE("norm of 1 - zeta_3")
{
    CycNum z = CycNum::root_of_unity(3, 1);
    CycNum one = CycNum::one(3);
    CycNum prod = (one - z) * (one - z.pow(2));
    CHECK(prod.is_rational());
    CHECK(prod.rational_value() == 3);
    // Numeric cross-check before trusting the exact path.
    auto approx = ((one - z).approx()) * ((one - z.pow(2)).approx());
    CHECK(std::abs(approx - std::complex<double>(3.0, 0.0)) < 1e-12);
}

TEST_CASE("cyclotomic relation at order 5")
{
    CycNum z = CycNum::root_of_unity(5, 1);
    CycNum sum = z + z.pow(2) + z.pow(3) + z.pow(4);
    CHECK(sum == CycNum::from_rational(Rat(-1), 5));
}

TEST_CASE("division and field axioms on random operands")
{
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 40; ++trial) {
        long order = 1 + static_cast<long>(rng() % 12);
        CycNum a = random_cyc(rng, order);
        CycNum b = random_cyc(rng, order);
        CycNum c = random_cyc(rng, order);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) {
            CHECK(a / a == CycNum::one(order));
            CHECK(a * a.inverse() == CycNum::one(order));
        }
    }
    CHECK_THROWS_AS(CycNum::one() / CycNum::zero(), DivisionByZero);
}

TEST_CASE("root-of-unity detection")
{
    CHECK(CycNum::from_rational(Rat(-1), 2).as_root_of_unity() == 1);
    CHECK(!CycNum::from_rational(Rat(2)).as_root_of_unity().has_value());
    CHECK(CycNum::root_of_unity(6, 5).as_root_of_unity() == 5);
    CHECK(CycNum::root_of_unity(6, 11).as_root_of_unity() == 5);
    CycNum not_root = CycNum::root_of_unity(6, 1) + CycNum::one(6);
    CHECK(!not_root.as_root_of_unity().has_value());
}

TEST_CASE("Galois action")
{
    CycNum z6 = CycNum::root_of_unity(6, 1);
    CHECK(z6.galois(5) == CycNum::root_of_unity(6, 5));
    CHECK(CycNum::from_rational(Rat(3, 7), 6).galois(5) ==
          CycNum::from_rational(Rat(3, 7), 6));
    CHECK_THROWS_AS(z6.galois(2), NotCoprime);

    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 30; ++trial) {
        CycNum a = random_cyc(rng, 6);
        CycNum b = random_cyc(rng, 6);
        CHECK(a.galois(5).galois(5) == a); // 5^2 = 1 mod 6
        CHECK((a + b).galois(5) == a.galois(5) + b.galois(5));
        CHECK((a * b).galois(5) == a.galois(5) * b.galois(5));
    }
    // Homomorphism property at other orders.
    for (int trial = 0; trial < 20; ++trial) {
        CycNum a = random_cyc(rng, 12);
        CycNum b = random_cyc(rng, 12);
        for (long s : {5L, 7L, 11L}) {
            CHECK((a + b).galois(s) == a.galois(s) + b.galois(s));
            CHECK((a * b).galois(s) == a.galois(s) * b.galois(s));
        }
    }
}

TEST_CASE("order coercion round-trips")
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        CycNum a = random_cyc(rng, 3);
        CycNum embedded = a.at_order(6);
        CHECK(embedded.order() == 6);
        CHECK(embedded.at_order(3) == a);
        CHECK(embedded.at_order(3).coeffs() == a.coeffs());
    }
    // Mixed-order arithmetic lands at the lcm.
    CycNum z3 = CycNum::root_of_unity(3, 1);
    CycNum z4 = CycNum::root_of_unity(4, 1);
    CHECK((z3 * z4).order() == 12);
    CHECK(z3 * z4 == CycNum::root_of_unity(12, 7));
    // zeta_6 = -zeta_3^2 lies in Q(zeta_3) and projects exactly.
    CHECK(CycNum::root_of_unity(6, 1).at_order(3) ==
          -CycNum::root_of_unity(3, 2));
    // zeta_4 does not lie in Q(zeta_3).
    CHECK_THROWS_AS(CycNum::root_of_unity(12, 3).at_order(3),
                    std::domain_error);
}
