#include "gla/linalg.hpp"

namespace gla {

CMat cmat_identity(int n)
{
    CMat m(n, CVec(n, CycNum::zero()));
    for (int i = 0; i < n; ++i)
        m[i][i] = CycNum::one();
    return m;
}

CMat cmat_mul(const CMat& a, const CMat& b)
{
    const size_t n = a.size(), p = b.size(), q = b.empty() ? 0 : b[0].size();
    CMat r(n, CVec(q, CycNum::zero()));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < p; ++k) {
            if (a[i][k].is_zero())
                continue;
            for (size_t j = 0; j < q; ++j) {
                if (b[k][j].is_zero())
                    continue;
                r[i][j] = r[i][j] + a[i][k] * b[k][j];
            }
        }
    return r;
}

CVec cmat_apply(const CMat& m, const CVec& v)
{
    CVec r(m.size(), CycNum::zero());
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) {
            if (m[i][j].is_zero() || v[j].is_zero())
                continue;
            r[i] = r[i] + m[i][j] * v[j];
        }
    return r;
}

CMat cmat_pow(const CMat& m, long e)
{
    CMat r = cmat_identity(static_cast<int>(m.size()));
    CMat base = m;
    while (e > 0) {
        if (e & 1)
            r = cmat_mul(r, base);
        base = cmat_mul(base, base);
        e >>= 1;
    }
    return r;
}

bool cmat_is_identity(const CMat& m)
{
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m.size(); ++j) {
            if (i == j ? m[i][j] != CycNum::one()
                       : !m[i][j].is_zero())
                return false;
        }
    return true;
}

namespace {

/// Row-echelon reduction in place; returns pivot columns.
std::vector<int> echelonize(CMat& m)
{
    std::vector<int> pivots;
    const size_t rows = m.size();
    const size_t cols = rows ? m[0].size() : 0;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c].is_zero())
            ++p;
        if (p == rows)
            continue;
        std::swap(m[p], m[r]);
        CycNum inv = m[r][c].inverse();
        for (size_t j = c; j < cols; ++j)
            if (!m[r][j].is_zero())
                m[r][j] = m[r][j] * inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero())
                continue;
            CycNum f = m[i][c];
            for (size_t j = c; j < cols; ++j)
                if (!m[r][j].is_zero())
                    m[i][j] = m[i][j] - f * m[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

} // namespace

int cmat_rank(CMat m) { return static_cast<int>(echelonize(m).size()); }

std::vector<CVec> cmat_kernel(const CMat& m)
{
    CMat red = m;
    std::vector<int> pivots = echelonize(red);
    const size_t cols = m.empty() ? 0 : m[0].size();
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots)
        is_pivot[c] = true;
    std::vector<CVec> basis;
    for (size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c])
            continue;
        CVec v(cols, CycNum::zero());
        v[free_c] = CycNum::one();
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -red[r][free_c];
        basis.push_back(std::move(v));
    }
    return basis;
}

CycNum cmat_det(CMat m)
{
    const size_t n = m.size();
    CycNum det = CycNum::one();
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && m[p][c].is_zero())
            ++p;
        if (p == n)
            return CycNum::zero();
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det = det * m[c][c];
        CycNum inv = m[c][c].inverse();
        for (size_t i = c + 1; i < n; ++i) {
            if (m[i][c].is_zero())
                continue;
            CycNum f = m[i][c] * inv;
            for (size_t j = c; j < n; ++j)
                if (!m[c][j].is_zero())
                    m[i][j] = m[i][j] - f * m[c][j];
        }
    }
    return det;
}

CycNum cmat_trace(const CMat& m)
{
    CycNum t = CycNum::zero();
    for (size_t i = 0; i < m.size(); ++i)
        t = t + m[i][i];
    return t;
}

RMat rmat_identity(int n)
{
    RMat m(n, RVec(n, Rat(0)));
    for (int i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

RMat rmat_mul(const RMat& a, const RMat& b)
{
    const size_t n = a.size(), p = b.size(), q = b.empty() ? 0 : b[0].size();
    RMat r(n, RVec(q, Rat(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < p; ++k) {
            if (a[i][k] == 0)
                continue;
            for (size_t j = 0; j < q; ++j)
                if (b[k][j] != 0)
                    r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

RVec rmat_apply(const RMat& m, const RVec& v)
{
    RVec r(m.size(), Rat(0));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j)
            if (m[i][j] != 0 && v[j] != 0)
                r[i] += m[i][j] * v[j];
    return r;
}

namespace {

std::vector<int> r_echelonize(RMat& m)
{
    std::vector<int> pivots;
    const size_t rows = m.size();
    const size_t cols = rows ? m[0].size() : 0;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(m[p], m[r]);
        Rat inv = Rat(1) / m[r][c];
        for (size_t j = c; j < cols; ++j)
            if (m[r][j] != 0)
                m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0)
                continue;
            Rat f = m[i][c];
            for (size_t j = c; j < cols; ++j)
                if (m[r][j] != 0)
                    m[i][j] -= f * m[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

} // namespace

int rmat_rank(RMat m) { return static_cast<int>(r_echelonize(m).size()); }

std::vector<RVec> rmat_kernel(const RMat& m)
{
    RMat red = m;
    std::vector<int> pivots = r_echelonize(red);
    const size_t cols = m.empty() ? 0 : m[0].size();
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots)
        is_pivot[c] = true;
    std::vector<RVec> basis;
    for (size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c])
            continue;
        RVec v(cols, Rat(0));
        v[free_c] = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -red[r][free_c];
        basis.push_back(std::move(v));
    }
    return basis;
}

Rat rmat_det(RMat m)
{
    const size_t n = m.size();
    Rat det = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && m[p][c] == 0)
            ++p;
        if (p == n)
            return Rat(0);
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        Rat inv = Rat(1) / m[c][c];
        for (size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0)
                continue;
            Rat f = m[i][c] * inv;
            for (size_t j = c; j < n; ++j)
                if (m[c][j] != 0)
                    m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

std::optional<RVec> rmat_solve(RMat m, RVec b)
{
    const size_t rows = m.size();
    const size_t cols = rows ? m[0].size() : 0;
    for (size_t i = 0; i < rows; ++i)
        m[i].push_back(b[i]);
    std::vector<int> pivots = r_echelonize(m);
    RVec x(cols, Rat(0));
    for (size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == static_cast<int>(cols))
            return std::nullopt; // pivot in the constant column
        x[pivots[r]] = m[r][cols];
    }
    // Consistency: rows below the pivots must be fully zero.
    for (size_t r = pivots.size(); r < rows; ++r)
        if (m[r][cols] != 0)
            return std::nullopt;
    return x;
}

} // namespace gla
