#include "gla/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace gla {

long euler_phi(long n)
{
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0)
                m /= p;
            result -= result / p;
        }
    }
    if (m > 1)
        result -= result / m;
    return result;
}

namespace {

// Exact division remainder: poly mod divisor, divisor monic. Works in place
// on a copy; returns remainder of degree < deg(divisor).
std::vector<Rat> poly_rem(std::vector<Rat> p, const std::vector<Rat>& divisor)
{
    const long dd = static_cast<long>(divisor.size()) - 1;
    for (long k = static_cast<long>(p.size()) - 1; k >= dd; --k) {
        if (p[k] == 0)
            continue;
        Rat c = p[k];
        p[k] = 0;
        for (long i = 0; i < dd; ++i)
            p[k - dd + i] -= c * divisor[i];
    }
    p.resize(dd, Rat(0));
    return p;
}

std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b)
{
    std::vector<Rat> out(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0)
                continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

// Divisors of n in increasing order.
std::vector<long> divisors(long n)
{
    std::vector<long> ds;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            ds.push_back(d);
            if (d != n / d)
                ds.push_back(n / d);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

// Exact polynomial division over Z, both monic, remainder must be zero.
std::vector<Int> poly_div_exact(const std::vector<Int>& num,
                                const std::vector<Int>& den)
{
    std::vector<Int> r = num;
    const long dd = static_cast<long>(den.size()) - 1;
    const long dq = static_cast<long>(num.size()) - 1 - dd;
    std::vector<Int> q(dq + 1, Int(0));
    for (long k = dq; k >= 0; --k) {
        Int c = r[k + dd];
        q[k] = c;
        if (c == 0)
            continue;
        for (long i = 0; i <= dd; ++i)
            r[k + i] -= c * den[i];
    }
    for (const Int& c : r)
        if (c != 0)
            throw std::logic_error("inexact polynomial division");
    return q;
}

std::mutex g_cyclo_mutex;

const std::vector<Int>& cyclotomic_polynomial_locked(long n)
{
    static std::map<long, std::vector<Int>> cache;
    auto it = cache.find(n);
    if (it != cache.end())
        return it->second;
    // x^n - 1 divided by Phi_d for every proper divisor d of n.
    std::vector<Int> poly(n + 1, Int(0));
    poly[0] = -1;
    poly[n] = 1;
    for (long d : divisors(n)) {
        if (d == n)
            continue;
        poly = poly_div_exact(poly, cyclotomic_polynomial_locked(d));
    }
    return cache.emplace(n, std::move(poly)).first->second;
}

// Cyclotomic polynomial as a monic Rat vector (for poly_rem).
const std::vector<Rat>& cyclotomic_rat(long n)
{
    static std::map<long, std::vector<Rat>> cache;
    std::lock_guard<std::mutex> lock(g_cyclo_mutex);
    auto it = cache.find(n);
    if (it != cache.end())
        return it->second;
    const std::vector<Int>& ip = cyclotomic_polynomial_locked(n);
    std::vector<Rat> rp(ip.size());
    for (size_t i = 0; i < ip.size(); ++i)
        rp[i] = Rat(ip[i]);
    return cache.emplace(n, std::move(rp)).first->second;
}

// Reduce an arbitrary-degree polynomial to the canonical power basis mod
// Phi_n, resized to exactly phi(n) coefficients.
std::vector<Rat> reduce_mod_cyclo(std::vector<Rat> p, long n)
{
    const std::vector<Rat>& phi = cyclotomic_rat(n);
    const long deg = static_cast<long>(phi.size()) - 1;
    if (static_cast<long>(p.size()) > deg)
        p = poly_rem(std::move(p), phi);
    p.resize(deg, Rat(0));
    return p;
}

// Extended Euclid: returns u with u*a == gcd (mod m), m monic, scaled so
// gcd is 1. Throws if a shares a factor with m (cannot happen for nonzero
// elements when m is irreducible).
std::vector<Rat> poly_inverse_mod(std::vector<Rat> a, std::vector<Rat> m)
{
    auto trim = [](std::vector<Rat>& v) {
        while (v.size() > 1 && v.back() == 0)
            v.pop_back();
    };
    auto is_zero = [](const std::vector<Rat>& v) {
        return v.size() == 1 && v[0] == 0;
    };
    trim(a);
    trim(m);
    // Invariants: r0 = s0*a (mod original m), r1 = s1*a (mod original m).
    std::vector<Rat> r0 = m, r1 = a;
    std::vector<Rat> s0 = {Rat(0)}, s1 = {Rat(1)};
    while (!is_zero(r1)) {
        // Divide r0 by r1.
        std::vector<Rat> q(std::max<long>(1, static_cast<long>(r0.size()) -
                                                 static_cast<long>(r1.size()) +
                                                 1),
                           Rat(0));
        std::vector<Rat> rem = r0;
        const long d1 = static_cast<long>(r1.size()) - 1;
        const Rat lead = r1.back();
        for (long k = static_cast<long>(rem.size()) - 1; k >= d1; --k) {
            if (rem[k] == 0)
                continue;
            Rat c = rem[k] / lead;
            q[k - d1] = c;
            for (long i = 0; i <= d1; ++i)
                rem[k - d1 + i] -= c * r1[i];
        }
        trim(rem);
        std::vector<Rat> s2 = s0;
        {
            std::vector<Rat> qs = poly_mul(q, s1);
            if (s2.size() < qs.size())
                s2.resize(qs.size(), Rat(0));
            for (size_t i = 0; i < qs.size(); ++i)
                s2[i] -= qs[i];
            trim(s2);
        }
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
    }
    if (r0.size() != 1)
        throw std::logic_error("element not invertible mod cyclotomic polynomial");
    for (Rat& c : s0)
        c /= r0[0];
    return s0;
}

long gcd_long(long a, long b)
{
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

long lcm_long(long a, long b) { return a / gcd_long(a, b) * b; }

long mod_pos(long a, long n)
{
    long r = a % n;
    return r < 0 ? r + n : r;
}

} // namespace

const std::vector<Int>& cyclotomic_polynomial(long n)
{
    std::lock_guard<std::mutex> lock(g_cyclo_mutex);
    return cyclotomic_polynomial_locked(n);
}

CycNum CycNum::zero(long n)
{
    CycNum z;
    z.order_ = n;
    z.coeffs_.assign(euler_phi(n), Rat(0));
    return z;
}

CycNum CycNum::one(long n) { return from_rational(Rat(1), n); }

CycNum CycNum::from_rational(const Rat& r, long n)
{
    CycNum z = zero(n);
    z.coeffs_[0] = r;
    return z;
}

CycNum CycNum::root_of_unity(long n, long k)
{
    if (n < 1)
        throw std::invalid_argument("root_of_unity: order must be positive");
    k = mod_pos(k, n);
    std::vector<Rat> p(k + 1, Rat(0));
    p[k] = 1;
    return from_coeffs(n, reduce_mod_cyclo(std::move(p), n));
}

CycNum CycNum::from_coeffs(long n, std::vector<Rat> coeffs)
{
    if (static_cast<long>(coeffs.size()) != euler_phi(n))
        throw std::invalid_argument("from_coeffs: wrong coefficient count");
    CycNum z;
    z.order_ = n;
    z.coeffs_ = std::move(coeffs);
    return z;
}

bool CycNum::is_zero() const
{
    for (const Rat& c : coeffs_)
        if (c != 0)
            return false;
    return true;
}

bool CycNum::is_rational() const
{
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0)
            return false;
    return true;
}

Rat CycNum::rational_value() const
{
    if (!is_rational())
        throw std::domain_error("CycNum is not rational");
    return coeffs_[0];
}

CycNum CycNum::at_order(long m) const
{
    if (m == order_)
        return *this;
    if (m % order_ == 0) {
        // Embed: zeta_n^i -> zeta_m^{i * m/n}.
        const long stride = m / order_;
        std::vector<Rat> p((coeffs_.size() - 1) * stride + 1, Rat(0));
        for (size_t i = 0; i < coeffs_.size(); ++i)
            p[i * stride] = coeffs_[i];
        return from_coeffs(m, reduce_mod_cyclo(std::move(p), m));
    }
    if (order_ % m != 0)
        throw std::domain_error("at_order: incompatible orders");
    // Project: solve for coefficients in the embedded basis of Q(zeta_m).
    const long phi_m = euler_phi(m);
    const long phi_n = euler_phi(order_);
    std::vector<std::vector<Rat>> cols;
    for (long j = 0; j < phi_m; ++j)
        cols.push_back(root_of_unity(m, j).at_order(order_).coeffs_);
    // Gaussian elimination on the phi_n x (phi_m + 1) augmented system.
    std::vector<std::vector<Rat>> aug(phi_n, std::vector<Rat>(phi_m + 1));
    for (long r = 0; r < phi_n; ++r) {
        for (long j = 0; j < phi_m; ++j)
            aug[r][j] = cols[j][r];
        aug[r][phi_m] = coeffs_[r];
    }
    std::vector<long> pivot_col(phi_n, -1);
    long row = 0;
    for (long col = 0; col < phi_m && row < phi_n; ++col) {
        long pr = -1;
        for (long r = row; r < phi_n; ++r)
            if (aug[r][col] != 0) {
                pr = r;
                break;
            }
        if (pr < 0)
            continue;
        std::swap(aug[row], aug[pr]);
        Rat inv = Rat(1) / aug[row][col];
        for (long j = col; j <= phi_m; ++j)
            aug[row][j] *= inv;
        for (long r = 0; r < phi_n; ++r) {
            if (r == row || aug[r][col] == 0)
                continue;
            Rat f = aug[r][col];
            for (long j = col; j <= phi_m; ++j)
                aug[r][j] -= f * aug[row][j];
        }
        pivot_col[row] = col;
        ++row;
    }
    for (long r = row; r < phi_n; ++r)
        if (aug[r][phi_m] != 0)
            throw std::domain_error("at_order: value not in the subfield");
    std::vector<Rat> sol(phi_m, Rat(0));
    for (long r = 0; r < row; ++r)
        sol[pivot_col[r]] = aug[r][phi_m];
    return from_coeffs(m, std::move(sol));
}

CycNum CycNum::operator-() const
{
    CycNum z = *this;
    for (Rat& c : z.coeffs_)
        c = -c;
    return z;
}

CycNum operator+(const CycNum& a, const CycNum& b)
{
    if (a.order_ != b.order_) {
        long n = lcm_long(a.order_, b.order_);
        return a.at_order(n) + b.at_order(n);
    }
    CycNum z = a;
    for (size_t i = 0; i < z.coeffs_.size(); ++i)
        z.coeffs_[i] += b.coeffs_[i];
    return z;
}

CycNum operator-(const CycNum& a, const CycNum& b)
{
    if (a.order_ != b.order_) {
        long n = lcm_long(a.order_, b.order_);
        return a.at_order(n) - b.at_order(n);
    }
    CycNum z = a;
    for (size_t i = 0; i < z.coeffs_.size(); ++i)
        z.coeffs_[i] -= b.coeffs_[i];
    return z;
}

CycNum operator*(const CycNum& a, const CycNum& b)
{
    if (a.order_ != b.order_) {
        long n = lcm_long(a.order_, b.order_);
        return a.at_order(n) * b.at_order(n);
    }
    if (a.is_zero() || b.is_zero())
        return CycNum::zero(a.order_);
    return CycNum::from_coeffs(
        a.order_,
        reduce_mod_cyclo(poly_mul(a.coeffs_, b.coeffs_), a.order_));
}

CycNum CycNum::inverse() const
{
    if (is_zero())
        throw DivisionByZero();
    if (is_rational())
        return from_rational(Rat(1) / coeffs_[0], order_);
    std::vector<Rat> inv = poly_inverse_mod(coeffs_, cyclotomic_rat(order_));
    return from_coeffs(order_, reduce_mod_cyclo(std::move(inv), order_));
}

CycNum operator/(const CycNum& a, const CycNum& b)
{
    if (a.order_ != b.order_) {
        long n = lcm_long(a.order_, b.order_);
        return a.at_order(n) / b.at_order(n);
    }
    return a * b.inverse();
}

CycNum CycNum::pow(long e) const
{
    if (e < 0)
        return inverse().pow(-e);
    CycNum result = one(order_);
    CycNum base = *this;
    while (e > 0) {
        if (e & 1)
            result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

CycNum CycNum::galois(long s) const
{
    s = mod_pos(s, order_);
    if (gcd_long(s, order_) != 1)
        throw NotCoprime(s, order_);
    std::vector<Rat> p(order_, Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        p[(static_cast<long>(i) * s) % order_] += coeffs_[i];
    return from_coeffs(order_, reduce_mod_cyclo(std::move(p), order_));
}

std::optional<long> CycNum::as_root_of_unity() const
{
    for (long k = 0; k < order_; ++k)
        if (*this == root_of_unity(order_, k))
            return k;
    return std::nullopt;
}

std::complex<double> CycNum::approx() const
{
    std::complex<double> z(0.0, 0.0);
    const double theta = 2.0 * M_PI / static_cast<double>(order_);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        double c = static_cast<double>(coeffs_[i]);
        z += c * std::polar(1.0, theta * static_cast<double>(i));
    }
    return z;
}

bool operator==(const CycNum& a, const CycNum& b)
{
    if (a.order_ == b.order_)
        return a.coeffs_ == b.coeffs_;
    long n = lcm_long(a.order_, b.order_);
    return a.at_order(n).coeffs_ == b.at_order(n).coeffs_;
}

std::string cyc_to_string(const CycNum& a)
{
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i] == 0)
            continue;
        if (!first)
            os << " + ";
        os << rat_to_string(a.coeffs()[i]);
        if (i > 0)
            os << "*z" << a.order() << "^" << i;
        first = false;
    }
    if (first)
        os << "0";
    return os.str();
}

} // namespace gla
