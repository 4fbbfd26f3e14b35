#pragma once

#include "gla/rational.hpp"

#include <complex>
#include <optional>
#include <vector>

namespace gla {

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero") {}
};

struct NotCoprime : std::invalid_argument {
    NotCoprime(long s, long n)
        : std::invalid_argument("Galois exponent " + std::to_string(s) +
                                " not coprime to " + std::to_string(n)) {}
};

/// Exact element of the cyclotomic field Q(zeta_n), stored as a rational
/// coefficient vector of length phi(n) in the power basis 1, zeta, ...,
/// zeta^{phi(n)-1} reduced modulo the n-th cyclotomic polynomial. The
/// representation is canonical: two values of the same order are equal iff
/// their coefficient vectors are equal. Values are immutable.
class CycNum {
public:
    CycNum() : order_(1), coeffs_(1, Rat(0)) {}

    static CycNum zero(long n = 1);
    static CycNum one(long n = 1);
    static CycNum from_rational(const Rat& r, long n = 1);
    /// zeta_n^k, canonical form at order n.
    static CycNum root_of_unity(long n, long k);
    /// Raw constructor; coeffs must have length phi(n) (already reduced).
    static CycNum from_coeffs(long n, std::vector<Rat> coeffs);

    long order() const { return order_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    Rat rational_value() const; // throws std::domain_error if not rational

    /// Re-express at order m. Embedding (order | m) always succeeds;
    /// projection (m | order) succeeds iff the value lies in Q(zeta_m),
    /// otherwise throws std::domain_error.
    CycNum at_order(long m) const;

    CycNum operator-() const;
    CycNum pow(long e) const; // negative e inverts
    CycNum inverse() const;

    /// Image under the Galois automorphism zeta -> zeta^s; gcd(s, order) = 1.
    CycNum galois(long s) const;

    /// If this equals zeta_n^k for some k (n = order), returns k in [0, n).
    std::optional<long> as_root_of_unity() const;

    /// Floating-point evaluation at zeta_n = exp(2*pi*i/n); cross-check only.
    std::complex<double> approx() const;

    friend CycNum operator+(const CycNum& a, const CycNum& b);
    friend CycNum operator-(const CycNum& a, const CycNum& b);
    friend CycNum operator*(const CycNum& a, const CycNum& b);
    friend CycNum operator/(const CycNum& a, const CycNum& b);
    friend bool operator==(const CycNum& a, const CycNum& b);
    friend bool operator!=(const CycNum& a, const CycNum& b)
    {
        return !(a == b);
    }

    CycNum& operator+=(const CycNum& b) { return *this = *this + b; }
    CycNum& operator-=(const CycNum& b) { return *this = *this - b; }
    CycNum& operator*=(const CycNum& b) { return *this = *this * b; }

private:
    long order_;
    std::vector<Rat> coeffs_;
};

/// Euler phi.
long euler_phi(long n);

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<Int>& cyclotomic_polynomial(long n);

std::string cyc_to_string(const CycNum& a);

} // namespace gla
