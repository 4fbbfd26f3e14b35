#include "gla/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace gla {

IMat imat_identity(int n)
{
    IMat m(n, Vec(n, 0));
    for (int i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

IMat imat_mul(const IMat& a, const IMat& b)
{
    const int n = static_cast<int>(a.size());
    const int k = static_cast<int>(b.size());
    const int p = static_cast<int>(b[0].size());
    IMat out(n, Vec(p, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < k; ++j) {
            if (a[i][j] == 0)
                continue;
            for (int c = 0; c < p; ++c)
                out[i][c] += a[i][j] * b[j][c];
        }
    return out;
}

Vec imat_apply(const IMat& m, const Vec& v)
{
    const int n = static_cast<int>(m.size());
    Vec out(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < static_cast<int>(v.size()); ++j)
            out[i] += m[i][j] * v[j];
    return out;
}

IMat imat_sub(const IMat& a, const IMat& b)
{
    IMat out = a;
    for (size_t i = 0; i < out.size(); ++i)
        for (size_t j = 0; j < out[i].size(); ++j)
            out[i][j] -= b[i][j];
    return out;
}

IMat imat_pow(const IMat& m, long e)
{
    IMat result = imat_identity(static_cast<int>(m.size()));
    IMat base = m;
    while (e > 0) {
        if (e & 1)
            result = imat_mul(result, base);
        base = imat_mul(base, base);
        e >>= 1;
    }
    return result;
}

Rat imat_det(const IMat& m)
{
    const int n = static_cast<int>(m.size());
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[i][j] = Rat(m[i][j]);
    Rat det(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            return Rat(0);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        Rat inv = Rat(1) / a[col][col];
        for (int r = col + 1; r < n; ++r) {
            if (a[r][col] == 0)
                continue;
            Rat f = a[r][col] * inv;
            for (int j = col; j < n; ++j)
                a[r][j] -= f * a[col][j];
        }
    }
    return det;
}

IMat imat_inverse_unimodular(const IMat& m)
{
    const int n = static_cast<int>(m.size());
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, Rat(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            a[i][j] = Rat(m[i][j]);
        a[i][n + i] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            throw std::invalid_argument("matrix is singular");
        std::swap(a[pivot], a[col]);
        Rat inv = Rat(1) / a[col][col];
        for (int j = 0; j < 2 * n; ++j)
            a[col][j] *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0)
                continue;
            Rat f = a[r][col];
            for (int j = 0; j < 2 * n; ++j)
                a[r][j] -= f * a[col][j];
        }
    }
    IMat out(n, Vec(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Rat& v = a[i][n + j];
            if (denominator(v) != 1)
                throw std::invalid_argument("matrix is not unimodular");
            out[i][j] = static_cast<long>(numerator(v));
        }
    return out;
}

long RootLattice::pair(const Vec& a, const Vec& b) const
{
    long s = 0;
    for (int i = 0; i < rank; ++i) {
        if (a[i] == 0)
            continue;
        for (int j = 0; j < rank; ++j)
            s += a[i] * gram[i][j] * b[j];
    }
    return s;
}

int RootLattice::root_index(const Vec& v) const
{
    auto it = std::lower_bound(roots.begin(), roots.end(), v);
    if (it != roots.end() && *it == v)
        return static_cast<int>(it - roots.begin());
    return -1;
}

namespace {

IMat cartan_matrix(char family, int ell)
{
    auto link = [](IMat& g, int i, int j) {
        g[i][j] = -1;
        g[j][i] = -1;
    };
    IMat g(ell, Vec(ell, 0));
    for (int i = 0; i < ell; ++i)
        g[i][i] = 2;
    switch (family) {
    case 'A':
        for (int i = 0; i + 1 < ell; ++i)
            link(g, i, i + 1);
        break;
    case 'D':
        if (ell < 3)
            throw UnknownType("D" + std::to_string(ell));
        for (int i = 0; i + 1 < ell - 2; ++i)
            link(g, i, i + 1);
        link(g, ell - 3, ell - 2);
        link(g, ell - 3, ell - 1);
        break;
    case 'E':
        if (ell < 6 || ell > 8)
            throw UnknownType("E" + std::to_string(ell));
        // Bourbaki: chain 1-3-4-...-ell, node 2 attached to 4.
        link(g, 0, 2);
        for (int i = 2; i + 1 < ell; ++i)
            link(g, i, i + 1);
        link(g, 1, 3);
        break;
    default:
        throw UnknownType(std::string(1, family));
    }
    return g;
}

std::vector<Vec> enumerate_roots(const IMat& gram)
{
    const int n = static_cast<int>(gram.size());
    std::set<Vec> seen;
    std::vector<Vec> queue;
    for (int i = 0; i < n; ++i) {
        Vec e(n, 0);
        e[i] = 1;
        for (int sign : {1, -1}) {
            Vec v = e;
            v[i] = sign;
            if (seen.insert(v).second)
                queue.push_back(v);
        }
    }
    // Close under the simple reflections s_i(v) = v - (v, alpha_i) alpha_i.
    for (size_t head = 0; head < queue.size(); ++head) {
        Vec v = queue[head];
        for (int i = 0; i < n; ++i) {
            long p = 0;
            for (int j = 0; j < n; ++j)
                p += gram[i][j] * v[j];
            Vec r = v;
            r[i] -= p;
            if (seen.insert(r).second)
                queue.push_back(r);
        }
    }
    return {seen.begin(), seen.end()};
}

} // namespace

RootLattice build_lattice(const std::string& label)
{
    // Split a direct-sum label on '+'.
    std::vector<std::string> parts;
    size_t pos = 0;
    while (pos < label.size()) {
        size_t plus = label.find('+', pos);
        if (plus == std::string::npos)
            plus = label.size();
        parts.push_back(label.substr(pos, plus - pos));
        pos = plus + 1;
    }
    if (parts.empty())
        throw UnknownType(label);

    RootLattice L;
    L.label = label;
    std::vector<IMat> blocks;
    for (const std::string& part : parts) {
        if (part.size() < 2)
            throw UnknownType(part);
        char family = part[0];
        int ell;
        try {
            ell = std::stoi(part.substr(1));
        } catch (const std::exception&) {
            throw UnknownType(part);
        }
        if (ell < 1)
            throw UnknownType(part);
        blocks.push_back(cartan_matrix(family, ell));
        L.rank += ell;
    }
    L.gram.assign(L.rank, Vec(L.rank, 0));
    int offset = 0;
    for (const IMat& b : blocks) {
        const int n = static_cast<int>(b.size());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                L.gram[offset + i][offset + j] = b[i][j];
        offset += n;
    }
    L.roots = enumerate_roots(L.gram);
    return L;
}

LatticeAut make_aut(const RootLattice& L, IMat m)
{
    // Gram preservation: M^T G M = G.
    const int n = L.rank;
    IMat mt(n, Vec(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            mt[i][j] = m[j][i];
    if (imat_mul(mt, imat_mul(L.gram, m)) != L.gram)
        throw std::invalid_argument("matrix does not preserve the Gram form");

    LatticeAut a;
    a.matrix = std::move(m);
    const IMat id = imat_identity(n);
    IMat p = a.matrix;
    a.order = 1;
    while (p != id) {
        p = imat_mul(p, a.matrix);
        ++a.order;
        if (a.order > 100000)
            throw std::invalid_argument("matrix has no finite order");
    }
    a.elliptic = imat_det(imat_sub(id, a.matrix)) != 0;
    return a;
}

LatticeAut aut_from_reflection_word(const RootLattice& L,
                                    const std::vector<int>& word)
{
    IMat m = imat_identity(L.rank);
    for (int idx : word) {
        if (idx < 1 || idx > L.rank)
            throw std::out_of_range("reflection index out of range: " +
                                    std::to_string(idx));
        const int i = idx - 1;
        IMat s = imat_identity(L.rank);
        for (int j = 0; j < L.rank; ++j)
            s[i][j] -= L.gram[i][j];
        m = imat_mul(m, s);
    }
    return make_aut(L, m);
}

LatticeAut aut_minus_identity(const RootLattice& L)
{
    IMat m = imat_identity(L.rank);
    for (int i = 0; i < L.rank; ++i)
        m[i][i] = -1;
    return make_aut(L, m);
}

LatticeAut aut_diagram(const RootLattice& L, const std::vector<int>& perm)
{
    const int n = L.rank;
    if (static_cast<int>(perm.size()) != n)
        throw NotDiagramAutomorphism();
    std::vector<bool> hit(n, false);
    for (int p : perm) {
        if (p < 1 || p > n || hit[p - 1])
            throw NotDiagramAutomorphism();
        hit[p - 1] = true;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (L.gram[perm[i] - 1][perm[j] - 1] != L.gram[i][j])
                throw NotDiagramAutomorphism();
    IMat m(n, Vec(n, 0));
    for (int i = 0; i < n; ++i)
        m[perm[i] - 1][i] = 1;
    return make_aut(L, m);
}

LatticeAut aut_coxeter_power(const RootLattice& L,
                             const std::vector<int>& word, long e)
{
    // The word must use every simple reflection exactly once.
    std::vector<int> sorted = word;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < L.rank; ++i)
        if (i >= static_cast<int>(sorted.size()) || sorted[i] != i + 1)
            throw std::invalid_argument("word is not a Coxeter element");
    LatticeAut c = aut_from_reflection_word(L, word);
    return make_aut(L, imat_pow(c.matrix, ((e % c.order) + c.order) % c.order));
}

std::vector<Int> minimal_polynomial(const IMat& m)
{
    const int n = static_cast<int>(m.size());
    const int nn = n * n;
    auto vectorize = [&](const IMat& p) {
        std::vector<Rat> v(nn);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                v[i * n + j] = Rat(p[i][j]);
        return v;
    };
    std::vector<std::vector<Rat>> powers;
    IMat p = imat_identity(n);
    for (int k = 0; k <= nn; ++k) {
        if (k > 0)
            p = imat_mul(p, m);
        std::vector<Rat> target = vectorize(k == 0 ? imat_identity(n) : p);
        if (k == 0) {
            powers.push_back(std::move(target));
            continue;
        }
        // Solve powers * x = target by elimination on the augmented system.
        const int cols = static_cast<int>(powers.size());
        std::vector<std::vector<Rat>> aug(nn, std::vector<Rat>(cols + 1));
        for (int r = 0; r < nn; ++r) {
            for (int c = 0; c < cols; ++c)
                aug[r][c] = powers[c][r];
            aug[r][cols] = target[r];
        }
        std::vector<int> pivot_col(nn, -1);
        int row = 0;
        for (int col = 0; col < cols && row < nn; ++col) {
            int pr = -1;
            for (int r = row; r < nn; ++r)
                if (aug[r][col] != 0) {
                    pr = r;
                    break;
                }
            if (pr < 0)
                continue;
            std::swap(aug[row], aug[pr]);
            Rat inv = Rat(1) / aug[row][col];
            for (int j = col; j <= cols; ++j)
                aug[row][j] *= inv;
            for (int r = 0; r < nn; ++r) {
                if (r == row || aug[r][col] == 0)
                    continue;
                Rat f = aug[r][col];
                for (int j = col; j <= cols; ++j)
                    aug[r][j] -= f * aug[row][j];
            }
            pivot_col[row] = col;
            ++row;
        }
        bool consistent = true;
        for (int r = row; r < nn; ++r)
            if (aug[r][cols] != 0) {
                consistent = false;
                break;
            }
        if (consistent) {
            std::vector<Rat> x(cols, Rat(0));
            for (int r = 0; r < row; ++r)
                x[pivot_col[r]] = aug[r][cols];
            std::vector<Int> out(k + 1);
            for (int c = 0; c < cols; ++c) {
                if (denominator(x[c]) != 1)
                    throw std::logic_error(
                        "minimal polynomial is not integral");
                out[c] = -numerator(x[c]);
            }
            out[k] = 1;
            return out;
        }
        powers.push_back(vectorize(p));
    }
    throw std::logic_error("minimal polynomial not found");
}

SmithForm smith_normal_form(const IMat& a_in)
{
    const int n = static_cast<int>(a_in.size());
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[i][j] = Int(a_in[i][j]);
    std::vector<std::vector<Int>> u(n, std::vector<Int>(n, Int(0)));
    std::vector<std::vector<Int>> v(n, std::vector<Int>(n, Int(0)));
    for (int i = 0; i < n; ++i)
        u[i][i] = v[i][i] = 1;

    auto swap_rows = [&](int r1, int r2) {
        std::swap(a[r1], a[r2]);
        std::swap(u[r1], u[r2]);
    };
    auto swap_cols = [&](int c1, int c2) {
        for (int i = 0; i < n; ++i) {
            std::swap(a[i][c1], a[i][c2]);
            std::swap(v[i][c1], v[i][c2]);
        }
    };
    auto add_row = [&](int dst, int src, const Int& f) {
        for (int j = 0; j < n; ++j) {
            a[dst][j] += f * a[src][j];
            u[dst][j] += f * u[src][j];
        }
    };
    auto add_col = [&](int dst, int src, const Int& f) {
        for (int i = 0; i < n; ++i) {
            a[i][dst] += f * a[i][src];
            v[i][dst] += f * v[i][src];
        }
    };

    for (int t = 0; t < n; ++t) {
        for (;;) {
            // Smallest nonzero |entry| in the trailing submatrix.
            int pi = -1, pj = -1;
            Int best(0);
            for (int i = t; i < n; ++i)
                for (int j = t; j < n; ++j) {
                    if (a[i][j] == 0)
                        continue;
                    Int mag = abs(a[i][j]);
                    if (pi < 0 || mag < best) {
                        best = mag;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0)
                goto done;
            if (pi != t)
                swap_rows(t, pi);
            if (pj != t)
                swap_cols(t, pj);

            bool clean = true;
            for (int i = t + 1; i < n; ++i)
                if (a[i][t] != 0) {
                    add_row(i, t, -(a[i][t] / a[t][t]));
                    if (a[i][t] != 0)
                        clean = false;
                }
            for (int j = t + 1; j < n; ++j)
                if (a[t][j] != 0) {
                    add_col(j, t, -(a[t][j] / a[t][t]));
                    if (a[t][j] != 0)
                        clean = false;
                }
            if (!clean)
                continue;
            // Enforce divisibility of the trailing submatrix by the pivot.
            bool divisible = true;
            for (int i = t + 1; i < n && divisible; ++i)
                for (int j = t + 1; j < n; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        add_row(t, i, Int(1));
                        divisible = false;
                        break;
                    }
            if (divisible)
                break;
        }
        if (a[t][t] < 0) {
            for (int j = 0; j < n; ++j) {
                a[t][j] = -a[t][j];
                u[t][j] = -u[t][j];
            }
        }
    }
done:
    SmithForm out;
    out.diag.resize(n);
    out.u.assign(n, Vec(n, 0));
    out.v.assign(n, Vec(n, 0));
    for (int i = 0; i < n; ++i) {
        out.diag[i] = a[i][i] < 0 ? -a[i][i] : a[i][i];
        for (int j = 0; j < n; ++j) {
            out.u[i][j] = static_cast<long>(u[i][j]);
            out.v[i][j] = static_cast<long>(v[i][j]);
        }
    }
    return out;
}

CoinvariantGroup::CoinvariantGroup(int rank, SmithForm snf) : rank_(rank)
{
    u_ = snf.u;
    u_inv_ = imat_inverse_unimodular(u_);
    for (int i = 0; i < rank; ++i) {
        if (snf.diag[i] == 0)
            throw NotElliptic();
        if (snf.diag[i] > 1) {
            factors_.push_back(static_cast<long>(snf.diag[i]));
            factor_rows_.push_back(i);
        }
    }
}

long CoinvariantGroup::group_order() const
{
    long o = 1;
    for (long f : factors_)
        o *= f;
    return o;
}

Cls CoinvariantGroup::project(const Vec& v) const
{
    Vec uv = imat_apply(u_, v);
    Cls c(factors_.size());
    for (size_t i = 0; i < factors_.size(); ++i) {
        long r = uv[factor_rows_[i]] % factors_[i];
        c[i] = r < 0 ? r + factors_[i] : r;
    }
    return c;
}

Vec CoinvariantGroup::lift(const Cls& c) const
{
    Vec full(rank_, 0);
    for (size_t i = 0; i < factors_.size(); ++i)
        full[factor_rows_[i]] = c[i];
    return imat_apply(u_inv_, full);
}

Vec CoinvariantGroup::generator(size_t i) const
{
    Cls c = zero();
    c[i] = 1;
    return lift(c);
}

Cls CoinvariantGroup::add(const Cls& a, const Cls& b) const
{
    Cls c(factors_.size());
    for (size_t i = 0; i < factors_.size(); ++i)
        c[i] = (a[i] + b[i]) % factors_[i];
    return c;
}

Cls CoinvariantGroup::neg(const Cls& a) const
{
    Cls c(factors_.size());
    for (size_t i = 0; i < factors_.size(); ++i)
        c[i] = (factors_[i] - a[i]) % factors_[i];
    return c;
}

Cls CoinvariantGroup::scale(const Cls& a, long k) const
{
    Cls c(factors_.size());
    for (size_t i = 0; i < factors_.size(); ++i) {
        long r = (a[i] * (k % factors_[i])) % factors_[i];
        c[i] = r < 0 ? r + factors_[i] : r;
    }
    return c;
}

bool CoinvariantGroup::is_zero_class(const Cls& a) const
{
    for (long x : a)
        if (x != 0)
            return false;
    return true;
}

long CoinvariantGroup::class_order(const Cls& a) const
{
    long o = 1;
    for (size_t i = 0; i < factors_.size(); ++i) {
        long g = std::gcd(a[i], factors_[i]);
        o = std::lcm(o, factors_[i] / g);
    }
    return o;
}

std::vector<Cls> CoinvariantGroup::all_classes() const
{
    std::vector<Cls> out;
    out.reserve(group_order());
    Cls c = zero();
    for (;;) {
        out.push_back(c);
        size_t i = 0;
        while (i < factors_.size()) {
            if (++c[i] < factors_[i])
                break;
            c[i] = 0;
            ++i;
        }
        if (i == factors_.size())
            break;
    }
    return out;
}

CoinvariantGroup coinvariants(const RootLattice& L, const LatticeAut& w)
{
    if (!w.elliptic)
        throw NotElliptic();
    IMat one_minus_w = imat_sub(imat_identity(L.rank), w.matrix);
    return CoinvariantGroup(L.rank, smith_normal_form(one_minus_w));
}

WPairing::WPairing(const RootLattice& L, const LatticeAut& w) : lattice_(L)
{
    if (!w.elliptic)
        throw NotElliptic();
    d_ = w.order;
    std::vector<Int> M = minimal_polynomial(w.matrix);
    Int m_val(0);
    for (const Int& c : M)
        m_val += c;
    if (m_val <= 0 || Int(d_) % m_val != 0)
        throw std::logic_error("M(1) does not divide the order of w");
    m_ = static_cast<long>(m_val);
    d0_ = d_ / m_;
    // M0(t) = (M(t) - M(1)) / (t - 1), exact division over Z.
    std::vector<Int> num = M;
    num[0] -= m_val;
    std::vector<Int> m0(num.size() - 1, Int(0));
    // Divide by (t - 1) via synthetic division.
    Int carry(0);
    for (long k = static_cast<long>(num.size()) - 1; k >= 1; --k) {
        m0[k - 1] = num[k] + carry;
        carry = m0[k - 1];
    }
    if (num[0] + carry != 0)
        throw std::logic_error("M0 division is inexact");
    // Evaluate M0 at w.
    IMat acc(L.rank, Vec(L.rank, 0));
    for (long k = static_cast<long>(m0.size()) - 1; k >= 0; --k) {
        acc = imat_mul(acc, w.matrix);
        long c = static_cast<long>(m0[k]);
        for (int i = 0; i < L.rank; ++i)
            acc[i][i] += c;
    }
    m0w_ = std::move(acc);
    powers_.resize(d_);
    powers_[0] = imat_identity(L.rank);
    for (long j = 1; j < d_; ++j)
        powers_[j] = imat_mul(powers_[j - 1], w.matrix);
}

long WPairing::exponent_w(const Vec& a, const Vec& b) const
{
    long e = d0_ * lattice_.pair(a, imat_apply(m0w_, b));
    e %= d_;
    return e < 0 ? e + d_ : e;
}

long WPairing::exponent_lepowsky(const Vec& a, const Vec& b) const
{
    long e = 0;
    for (long j = 1; j < d_; ++j)
        e += j * lattice_.pair(imat_apply(powers_[j], a), b) % d_;
    e %= d_;
    return e < 0 ? e + d_ : e;
}

bool WPairing::is_trivial_on_roots() const
{
    for (const Vec& a : lattice_.roots)
        for (const Vec& b : lattice_.roots)
            if (exponent_w(a, b) != 0)
                return false;
    return true;
}

} // namespace gla
