#include "gla/lie_algebra.hpp"

#include <numeric>
#include <random>
#include <sstream>
#include <thread>

namespace gla {

namespace {

std::string vec_key(const Vec& v)
{
    std::ostringstream os;
    for (long x : v)
        os << x << ',';
    return os.str();
}

bool is_zero_vec(const Vec& v)
{
    return std::all_of(v.begin(), v.end(), [](long x) { return x == 0; });
}

void add_term(CVec& acc, int k, const CycNum& c)
{
    acc[k] = acc[k] + c;
}

int thread_count(int requested)
{
    if (requested > 0)
        return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

} // namespace

GradedLieAlgebra GradedLieAlgebra::construct(const ExtensionDatum& datum,
                                             EpsKind kind, bool validate)
{
    if (validate && !validate_input_datum(datum, kind).valid())
        throw InvalidDatum();

    GradedLieAlgebra alg;
    alg.datum_ = datum;
    alg.kind_ = kind;
    alg.rank_ = datum.lattice.rank;
    const auto& roots = alg.datum_.lattice.roots;
    alg.dim_ = alg.rank_ + static_cast<int>(roots.size());
    for (size_t a = 0; a < roots.size(); ++a)
        alg.root_index_[vec_key(roots[a])] = static_cast<int>(a);

    EpsEvaluator eps(alg.datum_, kind);
    const long d = alg.datum_.d;
    const int rank = alg.rank_;

    // [h_i, X_beta] = (alpha_i, beta) X_beta.
    for (int i = 0; i < rank; ++i)
        for (size_t b = 0; b < roots.size(); ++b) {
            long p = 0;
            for (int j = 0; j < rank; ++j)
                p += alg.datum_.lattice.gram[i][j] * roots[b][j];
            if (p == 0)
                continue;
            alg.table_[alg.key(i, rank + static_cast<int>(b))] = {
                Term{rank + static_cast<int>(b),
                     CycNum::from_rational(Rat(p))}};
        }

    // [X_{s(alpha)}, X_{s(beta)}] through the section phases.
    for (size_t a = 0; a < roots.size(); ++a)
        for (size_t b = a + 1; b < roots.size(); ++b) {
            const Vec& alpha = roots[a];
            const Vec& beta = roots[b];
            TildeProduct prod = tilde_mul(alg.datum_, tilde_lift(alpha),
                                          tilde_lift(beta));
            CycNum phase = CycNum::root_of_unity(d, prod.zeta_exp);
            std::vector<Term> terms;
            if (is_zero_vec(prod.sum)) {
                CycNum c = eps(alpha, beta) * phase;
                for (int i = 0; i < rank; ++i)
                    if (alpha[i] != 0)
                        terms.push_back(
                            Term{i, c * CycNum::from_rational(Rat(alpha[i]))});
            } else {
                int s = alg.datum_.lattice.root_index(prod.sum);
                if (s < 0)
                    continue;
                terms.push_back(Term{rank + s, eps(alpha, beta) * phase});
            }
            if (!terms.empty())
                alg.table_[alg.key(rank + static_cast<int>(a),
                                   rank + static_cast<int>(b))] =
                    std::move(terms);
        }
    return alg;
}

long GradedLieAlgebra::field_order() const
{
    long n = 1;
    for (const auto& [k, terms] : table_)
        for (const Term& t : terms)
            n = std::lcm(n, t.coeff.order());
    return n;
}

std::string GradedLieAlgebra::basis_label(int i) const
{
    if (i < rank_)
        return "h" + std::to_string(i + 1);
    std::ostringstream os;
    os << "x";
    const Vec& r = datum_.lattice.roots[i - rank_];
    for (size_t j = 0; j < r.size(); ++j)
        os << (j ? "," : "") << r[j];
    return os.str();
}

int GradedLieAlgebra::root_basis_index(const Vec& alpha) const
{
    auto it = root_index_.find(vec_key(alpha));
    if (it == root_index_.end())
        throw std::out_of_range("not a root");
    return rank_ + it->second;
}

const std::vector<Term>* GradedLieAlgebra::lookup(int i, int j) const
{
    auto it = table_.find(key(i, j));
    return it == table_.end() ? nullptr : &it->second;
}

std::vector<Term> GradedLieAlgebra::bracket_basis(int i, int j) const
{
    if (i == j)
        return {};
    if (i < j) {
        const auto* t = lookup(i, j);
        return t ? *t : std::vector<Term>{};
    }
    const auto* t = lookup(j, i);
    if (!t)
        return {};
    std::vector<Term> neg = *t;
    for (Term& term : neg)
        term.coeff = -term.coeff;
    return neg;
}

CVec GradedLieAlgebra::bracket(const CVec& x, const CVec& y) const
{
    CVec acc(dim_, CycNum::zero());
    for (int i = 0; i < dim_; ++i) {
        if (x[i].is_zero())
            continue;
        for (int j = 0; j < dim_; ++j) {
            if (y[j].is_zero())
                continue;
            for (const Term& t : bracket_basis(i, j))
                add_term(acc, t.k, x[i] * y[j] * t.coeff);
        }
    }
    return acc;
}

void GradedLieAlgebra::override_bracket(int i, int j, std::vector<Term> terms)
{
    if (i >= j)
        throw std::invalid_argument("override requires i < j");
    table_[key(i, j)] = std::move(terms);
}

bool GradedLieAlgebra::jacobi_holds(int i, int j, int k) const
{
    // Small sparse accumulator; triples touch a handful of basis lines.
    std::vector<std::pair<int, CycNum>> acc;
    acc.reserve(32);
    auto accumulate = [&](int a, int b, int c) {
        for (const Term& t : bracket_basis(b, c))
            for (const Term& u : bracket_basis(a, t.k))
                acc.emplace_back(u.k, t.coeff * u.coeff);
    };
    accumulate(i, j, k);
    accumulate(j, k, i);
    accumulate(k, i, j);
    std::sort(acc.begin(), acc.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (size_t s = 0; s < acc.size();) {
        CycNum sum = acc[s].second;
        size_t t = s + 1;
        while (t < acc.size() && acc[t].first == acc[s].first)
            sum = sum + acc[t++].second;
        if (!sum.is_zero())
            return false;
        s = t;
    }
    return true;
}

namespace {

struct TripleWitness {
    bool ok = true;
    std::array<int, 3> witness{-1, -1, -1};
};

} // namespace

JacobiReport GradedLieAlgebra::verify_jacobi_full(int threads) const
{
    const int n = dim_;
    const int nt = thread_count(threads);
    std::vector<TripleWitness> results(nt);
    auto work = [&](int t) {
        for (int i = t; i < n; i += nt) {
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k)
                    if (!jacobi_holds(i, j, k)) {
                        results[t] = {false, {i, j, k}};
                        return;
                    }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < nt; ++t)
        pool.emplace_back(work, t);
    for (auto& th : pool)
        th.join();

    JacobiReport report;
    report.checked = (long long)n * (n - 1) * (n - 2) / 6;
    for (const TripleWitness& r : results)
        if (!r.ok && (report.ok || r.witness < report.witness)) {
            report.ok = false;
            report.witness = r.witness;
        }
    return report;
}

JacobiReport GradedLieAlgebra::verify_jacobi_sampled(long long count,
                                                     unsigned long long seed,
                                                     int threads) const
{
    std::mt19937_64 rng(seed);
    std::vector<int> triples(static_cast<size_t>(count) * 3);
    for (auto& x : triples)
        x = static_cast<int>(rng() % dim_);

    const int nt = thread_count(threads);
    std::vector<TripleWitness> results(nt);
    auto work = [&](int t) {
        for (long long s = t; s < count; s += nt) {
            int i = triples[3 * s], j = triples[3 * s + 1],
                k = triples[3 * s + 2];
            if (!jacobi_holds(i, j, k)) {
                results[t] = {false, {i, j, k}};
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < nt; ++t)
        pool.emplace_back(work, t);
    for (auto& th : pool)
        th.join();

    JacobiReport report;
    report.checked = count;
    for (const TripleWitness& r : results)
        if (!r.ok && (report.ok || r.witness < report.witness)) {
            report.ok = false;
            report.witness = r.witness;
        }
    return report;
}

JacobiReport GradedLieAlgebra::verify_jacobi_cartan_triples() const
{
    JacobiReport report;
    for (int i = 0; i < rank_; ++i)
        for (int j = i + 1; j < dim_; ++j)
            for (int k = j + 1; k < dim_; ++k) {
                ++report.checked;
                if (!jacobi_holds(i, j, k)) {
                    report.ok = false;
                    report.witness = {i, j, k};
                    return report;
                }
            }
    return report;
}

bool GradedLieAlgebra::verify_antisymmetry() const
{
    for (const auto& [k, terms] : table_) {
        int i = static_cast<int>(k / dim_);
        int j = static_cast<int>(k % dim_);
        if (i >= j)
            return false;
        std::vector<Term> ij = bracket_basis(i, j);
        std::vector<Term> ji = bracket_basis(j, i);
        if (ij.size() != ji.size())
            return false;
        for (size_t t = 0; t < ij.size(); ++t)
            if (ij[t].k != ji[t].k || ij[t].coeff != -ji[t].coeff)
                return false;
    }
    return true;
}

CMat GradedLieAlgebra::killing_form() const
{
    // ad columns: ad_i maps b_k to bracket_basis(i, k).
    CMat kf(dim_, CVec(dim_, CycNum::zero()));
    for (int i = 0; i < dim_; ++i)
        for (int j = i; j < dim_; ++j) {
            CycNum tr = CycNum::zero();
            for (int k = 0; k < dim_; ++k)
                for (const Term& t : bracket_basis(j, k))
                    for (const Term& u : bracket_basis(i, t.k))
                        if (u.k == k)
                            tr = tr + t.coeff * u.coeff;
            kf[i][j] = tr;
            kf[j][i] = tr;
        }
    return kf;
}

CycNum GradedLieAlgebra::killing_det() const { return cmat_det(killing_form()); }

bool GradedLieAlgebra::killing_nondegenerate() const
{
    return !killing_det().is_zero();
}

CMat GradedLieAlgebra::aut_matrix() const
{
    CMat m(dim_, CVec(dim_, CycNum::zero()));
    for (int j = 0; j < rank_; ++j)
        for (int i = 0; i < rank_; ++i)
            if (datum_.w.matrix[i][j] != 0)
                m[i][j] = CycNum::from_rational(Rat(datum_.w.matrix[i][j]));
    for (size_t a = 0; a < datum_.lattice.roots.size(); ++a) {
        Vec img = datum_.w.apply(datum_.lattice.roots[a]);
        m[root_basis_index(img)][rank_ + a] = CycNum::one();
    }
    return m;
}

std::vector<std::vector<CVec>> GradedLieAlgebra::grading() const
{
    const long d = datum_.d;
    CMat a = aut_matrix();
    std::vector<std::vector<CVec>> spaces;
    for (long j = 0; j < d; ++j) {
        CMat shifted = a;
        CycNum z = CycNum::root_of_unity(d, j);
        for (int i = 0; i < dim_; ++i)
            shifted[i][i] = shifted[i][i] - z;
        spaces.push_back(cmat_kernel(shifted));
    }
    return spaces;
}

std::vector<long> GradedLieAlgebra::grading_dims_by_trace() const
{
    const long d = datum_.d;
    CMat a = aut_matrix();
    std::vector<CycNum> traces;
    CMat p = cmat_identity(dim_);
    for (long i = 0; i < d; ++i) {
        traces.push_back(cmat_trace(p));
        p = cmat_mul(a, p);
    }
    std::vector<long> dims;
    for (long j = 0; j < d; ++j) {
        CycNum sum = CycNum::zero();
        for (long i = 0; i < d; ++i)
            sum = sum +
                  CycNum::root_of_unity(d, -i * j % d + d) * traces[i];
        CycNum dim = sum / CycNum::from_rational(Rat(d));
        if (!dim.is_rational())
            throw std::logic_error("projector trace is not rational");
        Rat r = dim.rational_value();
        dims.push_back(static_cast<long>(numerator(r)));
    }
    return dims;
}

std::vector<CVec> GradedLieAlgebra::z_generators() const
{
    std::vector<CVec> zs;
    for (const Vec& alpha : datum_.lattice.roots) {
        CVec z(dim_, CycNum::zero());
        Vec cur = alpha;
        for (long j = 0; j < datum_.d; ++j) {
            int idx = root_basis_index(cur);
            z[idx] = z[idx] + CycNum::one();
            cur = datum_.w.apply(cur);
        }
        zs.push_back(std::move(z));
    }
    return zs;
}

ZBracketReport GradedLieAlgebra::z_bracket_check(long sample_count,
                                                 unsigned long long seed) const
{
    if (kind_ != EpsKind::eps_w)
        throw std::invalid_argument("closed form requires the product pairing");
    EpsEvaluator eps(datum_, EpsKind::eps_w);
    const auto& roots = datum_.lattice.roots;
    const long d = datum_.d;

    auto z_of = [&](const Vec& alpha) {
        CVec z(dim_, CycNum::zero());
        Vec cur = alpha;
        for (long j = 0; j < d; ++j) {
            int idx = root_basis_index(cur);
            z[idx] = z[idx] + CycNum::one();
            cur = datum_.w.apply(cur);
        }
        return z;
    };

    auto check_pair = [&](const Vec& alpha, const Vec& beta) {
        CVec lhs = bracket(z_of(alpha), z_of(beta));
        CVec rhs(dim_, CycNum::zero());
        Vec wa = alpha;
        for (long j = 0; j < d; ++j) {
            if (datum_.lattice.pair(wa, beta) == -1) {
                long e = datum_.cocycle.eval(datum_.project(wa),
                                             datum_.project(beta));
                CycNum c = eps(wa, beta) * CycNum::root_of_unity(d, e);
                Vec sum(wa.size());
                for (size_t i = 0; i < sum.size(); ++i)
                    sum[i] = wa[i] + beta[i];
                CVec z = z_of(sum);
                for (int i = 0; i < dim_; ++i)
                    if (!z[i].is_zero())
                        rhs[i] = rhs[i] + c * z[i];
            }
            wa = datum_.w.apply(wa);
        }
        return lhs == rhs;
    };

    ZBracketReport report;
    if (sample_count <= 0) {
        for (const Vec& a : roots)
            for (const Vec& b : roots) {
                ++report.checked;
                if (!check_pair(a, b)) {
                    report.ok = false;
                    report.witness = {a, b};
                    return report;
                }
            }
    } else {
        std::mt19937_64 rng(seed);
        for (long t = 0; t < sample_count; ++t) {
            const Vec& a = roots[rng() % roots.size()];
            const Vec& b = roots[rng() % roots.size()];
            ++report.checked;
            if (!check_pair(a, b)) {
                report.ok = false;
                report.witness = {a, b};
                return report;
            }
        }
    }
    return report;
}

CMat GradedLieAlgebra::inner_automorphism(const Cls& lambda) const
{
    CMat m = cmat_identity(dim_);
    for (size_t a = 0; a < datum_.lattice.roots.size(); ++a) {
        long e = datum_.cocycle.commutator(
            lambda, datum_.project(datum_.lattice.roots[a]));
        m[rank_ + a][rank_ + a] = CycNum::root_of_unity(datum_.d, e);
    }
    return m;
}

namespace {

long class_index(const CoinvariantGroup& g, const Cls& c)
{
    long idx = 0;
    const auto& f = g.invariant_factors();
    for (size_t i = 0; i < f.size(); ++i)
        idx = idx * f[i] + c[i];
    return idx;
}

} // namespace

std::optional<std::vector<long>> find_extension_iso(const ExtensionDatum& src,
                                                    const ExtensionDatum& dst,
                                                    const IMat& psi)
{
    if (src.d != dst.d)
        return std::nullopt;
    const long d = src.d;
    // psi must intertwine the automorphisms and map roots to roots.
    if (imat_mul(psi, src.w.matrix) != imat_mul(dst.w.matrix, psi))
        return std::nullopt;
    for (const Vec& r : src.lattice.roots)
        if (!dst.lattice.is_root(imat_apply(psi, r)))
            return std::nullopt;

    auto classes = src.group.all_classes();
    const size_t n_gen = src.group.num_generators();
    const auto& f = src.group.invariant_factors();

    auto psi_bar = [&](const Cls& c) {
        return dst.project(imat_apply(psi, src.group.lift(c)));
    };

    // A phase table eta must satisfy, for all x, y:
    //   eta(x+y) = eta(x) + eta(y) + c'(psi x, psi y) - c(x, y)  (mod d).
    // Values on the cyclic generators determine it; search those.
    std::vector<long> gen_vals(n_gen, 0);
    while (true) {
        std::vector<long> eta(classes.size(), 0);
        bool consistent = true;
        for (size_t ci = 1; ci < classes.size() && consistent; ++ci) {
            const Cls& x = classes[ci];
            // Peel the last nonzero coordinate.
            size_t i = n_gen;
            while (i > 0 && x[i - 1] == 0)
                --i;
            --i;
            Cls prev = x;
            prev[i] -= 1;
            Cls gen = src.group.zero();
            gen[i] = 1;
            long v = eta[class_index(src.group, prev)] + gen_vals[i] +
                     dst.cocycle.eval(psi_bar(prev), psi_bar(gen)) -
                     src.cocycle.eval(prev, gen);
            eta[ci] = ((v % d) + d) % d;
        }
        if (consistent) {
            bool ok = true;
            for (const Cls& x : classes) {
                for (const Cls& y : classes) {
                    Cls sum = src.group.add(x, y);
                    long want = eta[class_index(src.group, x)] +
                                eta[class_index(src.group, y)] +
                                dst.cocycle.eval(psi_bar(x), psi_bar(y)) -
                                src.cocycle.eval(x, y);
                    if (eta[class_index(src.group, sum)] !=
                        ((want % d) + d) % d) {
                        ok = false;
                        break;
                    }
                }
                if (!ok)
                    break;
            }
            if (ok)
                return eta;
        }
        // Next candidate assignment on the generators.
        size_t i = 0;
        while (i < n_gen) {
            if (++gen_vals[i] < d)
                break;
            gen_vals[i] = 0;
            ++i;
        }
        if (i == n_gen)
            return std::nullopt;
    }
}

CMat apply_datum_isomorphism(const GradedLieAlgebra& a,
                             const GradedLieAlgebra& b, const IMat& psi,
                             const std::vector<long>& eta)
{
    if (a.dim() != b.dim() || a.d() != b.d())
        throw NotDatumIsomorphism();
    const int rank = a.rank();
    const long d = a.d();
    const ExtensionDatum& src = a.datum();
    CMat m(a.dim(), CVec(a.dim(), CycNum::zero()));
    for (int j = 0; j < rank; ++j)
        for (int i = 0; i < rank; ++i)
            if (psi[i][j] != 0)
                m[i][j] = CycNum::from_rational(Rat(psi[i][j]));
    for (size_t r = 0; r < src.lattice.roots.size(); ++r) {
        const Vec& alpha = src.lattice.roots[r];
        Vec img = imat_apply(psi, alpha);
        long e = eta[class_index(src.group, src.project(alpha))];
        m[b.root_basis_index(img)][rank + r] = CycNum::root_of_unity(d, e);
    }

    // Must intertwine the lifted automorphisms and preserve the bracket.
    if (cmat_mul(m, a.aut_matrix()) != cmat_mul(b.aut_matrix(), m))
        throw NotDatumIsomorphism();
    for (int i = 0; i < a.dim(); ++i)
        for (int j = i + 1; j < a.dim(); ++j) {
            CVec lhs(a.dim(), CycNum::zero());
            for (const Term& t : a.bracket_basis(i, j)) {
                for (int k = 0; k < a.dim(); ++k)
                    if (!m[k][t.k].is_zero())
                        lhs[k] = lhs[k] + m[k][t.k] * t.coeff;
            }
            CVec mi(a.dim(), CycNum::zero()), mj(a.dim(), CycNum::zero());
            for (int k = 0; k < a.dim(); ++k) {
                mi[k] = m[k][i];
                mj[k] = m[k][j];
            }
            if (b.bracket(mi, mj) != lhs)
                throw NotDatumIsomorphism();
        }
    return m;
}

} // namespace gla
