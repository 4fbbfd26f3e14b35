#include "gla/folding.hpp"

#include <map>
#include <numeric>

namespace gla {

namespace {

std::vector<long> no_phases(const ExtensionDatum& d)
{
    return std::vector<long>(d.group.group_order(), 0);
}

/// Expands a cyclotomic vector into rational coordinates at a fixed order.
RVec cvec_to_rvec(const CVec& v, long n)
{
    const long phi = euler_phi(n);
    RVec out;
    out.reserve(v.size() * phi);
    for (const CycNum& c : v) {
        std::vector<Rat> coords = c.at_order(n).coeffs();
        for (long t = 0; t < phi; ++t)
            out.push_back(coords[t]);
    }
    return out;
}

CVec rvec_to_cvec(const RVec& v, long n, size_t dim)
{
    const long phi = euler_phi(n);
    CVec out;
    out.reserve(dim);
    for (size_t j = 0; j < dim; ++j) {
        std::vector<Rat> coords(v.begin() + j * phi,
                                v.begin() + (j + 1) * phi);
        out.push_back(CycNum::from_coeffs(n, std::move(coords)));
    }
    return out;
}

CVec apply_galois(const CVec& v, long n, long s)
{
    CVec out;
    out.reserve(v.size());
    for (const CycNum& c : v)
        out.push_back(c.at_order(n).galois(s));
    return out;
}

} // namespace

const std::vector<FoldingCase>& folding_table()
{
    static const std::vector<FoldingCase> table = {
        {"A3C2", "A3", {1, 3, 2}, {3, 2, 1}, 2, "C2", 10},
        {"D5B4", "D5", {1, 2, 3, 4, 5}, {1, 2, 3, 5, 4}, 2, "B4", 36},
        {"D4G2", "D4", {2, 1, 3, 4}, {3, 2, 4, 1}, 3, "G2", 14},
        {"E6F4", "E6", {2, 4, 1, 6, 3, 5}, {6, 2, 5, 4, 3, 1}, 2, "F4", 52},
    };
    return table;
}

const FoldingCase& folding_case(const std::string& name)
{
    for (const FoldingCase& fc : folding_table())
        if (fc.name == name)
            return fc;
    throw std::invalid_argument("unknown folding case: " + name);
}

FoldResult fold(const FoldingCase& fc, bool validate_datum)
{
    RootLattice L = build_lattice(fc.source);
    LatticeAut c = aut_from_reflection_word(L, fc.word);
    LatticeAut theta = aut_diagram(L, fc.perm);
    if (imat_mul(theta.matrix, c.matrix) != imat_mul(c.matrix, theta.matrix))
        throw NonCommutingPair();
    if (theta.order != fc.theta_order)
        throw UnexpectedType(fc.name + ": diagram automorphism order " +
                             std::to_string(theta.order));

    ExtensionDatum datum = make_extension(L, c);
    if (!datum.pairing.is_trivial_on_roots())
        throw UnexpectedType(fc.name + ": Coxeter pairing not trivial");

    FoldResult out{GradedLieAlgebra::construct(datum, EpsKind::eps_w,
                                               validate_datum)};
    out.phi = apply_datum_isomorphism(out.alg, out.alg, theta.matrix,
                                      no_phases(datum));

    // Order of the pinned automorphism is the diagram order.
    CMat p = out.phi;
    for (int e = 1; e < theta.order; ++e) {
        if (cmat_is_identity(p))
            throw UnexpectedType(fc.name + ": pinned automorphism too short");
        p = cmat_mul(out.phi, p);
    }
    if (!cmat_is_identity(p))
        throw UnexpectedType(fc.name + ": pinned automorphism order wrong");

    CMat shifted = out.phi;
    for (int i = 0; i < out.alg.dim(); ++i)
        shifted[i][i] = shifted[i][i] - CycNum::one();
    out.fixed_basis = cmat_kernel(shifted);

    // Fixed Cartan rank from the rational fixed space of theta.
    RMat tm(L.rank, RVec(L.rank, Rat(0)));
    for (int i = 0; i < L.rank; ++i)
        for (int j = 0; j < L.rank; ++j)
            tm[i][j] = Rat(theta.matrix[i][j]) - Rat(i == j ? 1 : 0);
    out.rank = static_cast<long>(rmat_kernel(tm).size());

    // Orbit-averaged root projections and their lengths.
    std::map<Vec, bool> seen;
    std::map<Rat, long> by_norm;
    long orbits = 0;
    for (const Vec& r : L.roots) {
        if (seen[r])
            continue;
        std::vector<Vec> orbit;
        Vec cur = r;
        do {
            seen[cur] = true;
            orbit.push_back(cur);
            cur = theta.apply(cur);
        } while (cur != r);
        ++orbits;
        RVec avg(L.rank, Rat(0));
        for (const Vec& o : orbit)
            for (int i = 0; i < L.rank; ++i)
                avg[i] += Rat(o[i], static_cast<long>(orbit.size()));
        Rat norm = 0;
        for (int i = 0; i < L.rank; ++i)
            for (int j = 0; j < L.rank; ++j)
                norm += avg[i] * Rat(L.gram[i][j]) * avg[j];
        ++by_norm[norm];
    }

    if (by_norm.size() != 2)
        throw UnexpectedType(fc.name + ": expected two root lengths");
    Rat nmin = by_norm.begin()->first;
    Rat nmax = by_norm.rbegin()->first;
    out.num_short = by_norm.begin()->second;
    out.num_long = by_norm.rbegin()->second;
    Rat ratio = nmax / nmin;
    out.length_ratio = static_cast<long>(numerator(ratio));
    if (denominator(ratio) != 1 ||
        (out.length_ratio != 2 && out.length_ratio != 3))
        throw UnexpectedType(fc.name + ": unrecognized length ratio");

    if (out.length_ratio == 3 && out.rank == 2 && orbits == 12)
        out.identified_type = "G2";
    else if (out.rank == 4 && out.num_long == 24 && out.num_short == 24)
        out.identified_type = "F4";
    else if (out.num_long == 2 * out.rank)
        out.identified_type = "C" + std::to_string(out.rank);
    else if (out.num_short == 2 * out.rank)
        out.identified_type = "B" + std::to_string(out.rank);
    else
        throw UnexpectedType(fc.name + ": unrecognized root counts");

    if (out.identified_type != fc.expected_type)
        throw UnexpectedType(fc.name + ": identified " + out.identified_type);
    if (static_cast<long>(out.fixed_basis.size()) != fc.expected_dim ||
        out.rank + orbits != fc.expected_dim)
        throw UnexpectedType(fc.name + ": fixed dimension mismatch");
    return out;
}

CMat semilinear_matrix(const GradedLieAlgebra& alg, const GaloisAction& action)
{
    const ExtensionDatum& d = alg.datum();
    CMat m(alg.dim(), CVec(alg.dim(), CycNum::zero()));
    for (int j = 0; j < alg.rank(); ++j)
        for (int i = 0; i < alg.rank(); ++i)
            if (action.sigma.matrix[i][j] != 0)
                m[i][j] =
                    CycNum::from_rational(Rat(action.sigma.matrix[i][j]));
    for (size_t a = 0; a < d.lattice.roots.size(); ++a) {
        Vec img = action.sigma.apply(d.lattice.roots[a]);
        m[alg.root_basis_index(img)][alg.rank() + a] = CycNum::one();
    }
    return m;
}

DescentResult galois_descend(const GradedLieAlgebra& alg,
                             const GaloisAction& action)
{
    const ExtensionDatum& d = alg.datum();
    const long n = std::lcm(alg.field_order(), d.d);
    const long s = ((action.zeta_exp % n) + n) % n;
    if (std::gcd(s, n) != 1)
        throw ActionConditionsViolated("zeta exponent not coprime to order");
    // s^e = 1 mod n so the cyclic relation holds on scalars.
    long se = 1;
    for (long i = 0; i < action.e; ++i)
        se = se * s % n;
    if (se != 1)
        throw ActionConditionsViolated("scalar action order does not divide e");
    if (imat_pow(action.sigma.matrix, action.e) !=
        imat_identity(d.lattice.rank))
        throw ActionConditionsViolated("lattice action order does not divide e");

    // Pairing and epsilon equivariance on all root pairs.
    EpsEvaluator eps(d, alg.eps_kind());
    for (const Vec& a : d.lattice.roots)
        for (const Vec& b : d.lattice.roots) {
            Vec sa = action.sigma.apply(a);
            Vec sb = action.sigma.apply(b);
            long lhs = s % d.d * d.pairing.exponent_w(a, b) % d.d;
            if (lhs != d.pairing.exponent_w(sa, sb))
                throw ActionConditionsViolated("pairing not equivariant");
            if (eps(a, b).at_order(n).galois(s) != eps(sa, sb))
                throw ActionConditionsViolated("epsilon not equivariant");
        }
    // Cocycle compatibility on all class pairs.
    auto sigma_bar = [&](const Cls& c) {
        return d.project(action.sigma.apply(d.group.lift(c)));
    };
    for (const Cls& x : d.group.all_classes())
        for (const Cls& y : d.group.all_classes()) {
            long lhs = s % d.d * d.cocycle.eval(x, y) % d.d;
            if (lhs != d.cocycle.eval(sigma_bar(x), sigma_bar(y)))
                throw ActionConditionsViolated("cocycle not equivariant");
        }

    CMat ms = semilinear_matrix(alg, action);

    // The semilinear map generates a group of order dividing e.
    for (int i = 0; i < alg.dim(); ++i) {
        CVec v(alg.dim(), CycNum::zero());
        v[i] = CycNum::one();
        for (long t = 0; t < action.e; ++t)
            v = cmat_apply(ms, apply_galois(v, n, s));
        for (int k = 0; k < alg.dim(); ++k)
            if (v[k] != (k == i ? CycNum::one() : CycNum::zero()))
                throw ActionConditionsViolated("semilinear order violated");
    }

    // Semilinear bracket automorphism on all basis pairs.
    for (int i = 0; i < alg.dim(); ++i)
        for (int j = i + 1; j < alg.dim(); ++j) {
            CVec br(alg.dim(), CycNum::zero());
            for (const Term& t : alg.bracket_basis(i, j))
                br[t.k] = br[t.k] + t.coeff;
            CVec lhs = cmat_apply(ms, apply_galois(br, n, s));
            CVec mi(alg.dim(), CycNum::zero()), mj(alg.dim(), CycNum::zero());
            for (int k = 0; k < alg.dim(); ++k) {
                mi[k] = ms[k][i];
                mj[k] = ms[k][j];
            }
            if (alg.bracket(mi, mj) != lhs)
                throw ActionConditionsViolated("bracket not equivariant");
        }

    // Rational fixed space of v -> ms . galois(v).
    const long phi = euler_phi(n);
    const long big = alg.dim() * phi;
    RMat r(big, RVec(big, Rat(0)));
    for (int j = 0; j < alg.dim(); ++j)
        for (long t = 0; t < phi; ++t) {
            CycNum g = CycNum::root_of_unity(n, t * s);
            for (int i = 0; i < alg.dim(); ++i) {
                if (ms[i][j].is_zero())
                    continue;
                std::vector<Rat> coords =
                    (ms[i][j].at_order(n) * g).coeffs();
                for (long u = 0; u < phi; ++u)
                    r[i * phi + u][j * phi + t] = coords[u];
            }
        }
    for (long i = 0; i < big; ++i)
        r[i][i] -= 1;
    std::vector<RVec> fixed = rmat_kernel(r);
    // The fixed space is a form over the fixed field k0 of zeta -> zeta^s;
    // as a rational space its dimension is dim * [k0 : Q].
    long ord_s = 1;
    if (n > 1)
        for (long t = s % n; t != 1; t = t * s % n)
            ++ord_s;
    if (static_cast<long>(fixed.size()) != alg.dim() * phi / ord_s)
        throw ActionConditionsViolated("fixed space has wrong dimension");

    DescentResult out;
    out.field_order = n;
    for (const RVec& v : fixed)
        out.q_basis.push_back(rvec_to_cvec(v, n, alg.dim()));

    // Structure constants in the rational basis.
    const int nq = static_cast<int>(fixed.size());
    RMat bmat(big, RVec(nq, Rat(0)));
    for (int k = 0; k < nq; ++k)
        for (long i = 0; i < big; ++i)
            bmat[i][k] = fixed[k][i];
    out.brackets.assign(nq, std::vector<RVec>(nq, RVec(nq, Rat(0))));
    for (int i = 0; i < nq; ++i)
        for (int j = i + 1; j < nq; ++j) {
            CVec br = alg.bracket(out.q_basis[i], out.q_basis[j]);
            auto sol = rmat_solve(bmat, cvec_to_rvec(br, n));
            if (!sol)
                throw ActionConditionsViolated(
                    "rational form not closed under bracket");
            out.brackets[i][j] = *sol;
            for (int k = 0; k < nq; ++k)
                out.brackets[j][i][k] = -(*sol)[k];
        }
    return out;
}

G2QResult descend_g2q()
{
    const FoldingCase& fc = folding_case("D4G2");
    RootLattice d4 = build_lattice("D4");
    LatticeAut c = aut_from_reflection_word(d4, fc.word);
    LatticeAut sigma = aut_from_reflection_word(d4, {2});

    // sigma conjugates the Coxeter element to its inverse.
    IMat c_inv = imat_pow(c.matrix, c.order - 1);
    if (imat_mul(sigma.matrix, c.matrix) != imat_mul(c_inv, sigma.matrix))
        throw ActionConditionsViolated("conjugation sanity check failed");

    ExtensionDatum datum = make_extension(d4, c);
    GradedLieAlgebra alg =
        GradedLieAlgebra::construct(datum, EpsKind::eps_w, true);
    GaloisAction action{2, sigma, 5};
    DescentResult descent = galois_descend(alg, action);

    G2QResult out;
    out.ambient_dim_q = static_cast<long>(descent.q_basis.size());

    // The pinned automorphism commutes with the semilinear action.
    LatticeAut theta = aut_diagram(d4, fc.perm);
    CMat phi = apply_datum_isomorphism(alg, alg, theta.matrix,
                                       no_phases(datum));
    CMat ms = semilinear_matrix(alg, action);
    if (cmat_mul(phi, ms) != cmat_mul(ms, phi))
        throw ActionConditionsViolated("fold not Galois-equivariant");

    // phi restricted to the rational form, in q-basis coordinates.
    const long n = descent.field_order;
    const long phi_n = euler_phi(n);
    const long big = alg.dim() * phi_n;
    RMat bmat(big, RVec(alg.dim(), Rat(0)));
    for (int k = 0; k < alg.dim(); ++k) {
        RVec col = cvec_to_rvec(descent.q_basis[k], n);
        for (long i = 0; i < big; ++i)
            bmat[i][k] = col[i];
    }
    RMat restricted(alg.dim(), RVec(alg.dim(), Rat(0)));
    for (int k = 0; k < alg.dim(); ++k) {
        auto sol = rmat_solve(
            bmat, cvec_to_rvec(cmat_apply(phi, descent.q_basis[k]), n));
        if (!sol)
            throw ActionConditionsViolated("fold does not preserve the form");
        for (int i = 0; i < alg.dim(); ++i)
            restricted[i][k] = (*sol)[i];
    }
    RMat shifted = restricted;
    for (int i = 0; i < alg.dim(); ++i)
        shifted[i][i] -= 1;
    std::vector<RVec> fixed = rmat_kernel(shifted);
    out.fixed_dim_q = static_cast<long>(fixed.size());

    // Brackets of the fixed part, in its own basis.
    std::vector<CVec> fixed_vecs;
    for (const RVec& f : fixed) {
        CVec v(alg.dim(), CycNum::zero());
        for (int k = 0; k < alg.dim(); ++k)
            if (f[k] != 0)
                for (int i = 0; i < alg.dim(); ++i)
                    v[i] = v[i] + CycNum::from_rational(f[k]) *
                                      descent.q_basis[k][i];
        fixed_vecs.push_back(std::move(v));
    }
    RMat fmat(big, RVec(fixed_vecs.size(), Rat(0)));
    for (size_t k = 0; k < fixed_vecs.size(); ++k) {
        RVec col = cvec_to_rvec(fixed_vecs[k], n);
        for (long i = 0; i < big; ++i)
            fmat[i][k] = col[i];
    }
    out.fixed_brackets.assign(
        fixed_vecs.size(),
        std::vector<RVec>(fixed_vecs.size(),
                          RVec(fixed_vecs.size(), Rat(0))));
    for (size_t i = 0; i < fixed_vecs.size(); ++i)
        for (size_t j = i + 1; j < fixed_vecs.size(); ++j) {
            CVec br = alg.bracket(fixed_vecs[i], fixed_vecs[j]);
            auto sol = rmat_solve(fmat, cvec_to_rvec(br, n));
            if (!sol)
                throw ActionConditionsViolated(
                    "fixed part not closed under bracket");
            out.fixed_brackets[i][j] = *sol;
            for (size_t k = 0; k < fixed_vecs.size(); ++k)
                out.fixed_brackets[j][i][k] = -(*sol)[k];
        }

    // Killing determinant comparison: base change by the q-basis must
    // change the determinant by an exact square.
    CMat kh = alg.killing_form();
    CMat p(alg.dim(), CVec(alg.dim(), CycNum::zero()));
    for (int k = 0; k < alg.dim(); ++k)
        for (int i = 0; i < alg.dim(); ++i)
            p[i][k] = descent.q_basis[k][i];
    CMat pt(alg.dim(), CVec(alg.dim(), CycNum::zero()));
    for (int i = 0; i < alg.dim(); ++i)
        for (int j = 0; j < alg.dim(); ++j)
            pt[i][j] = p[j][i];
    CycNum det_q = cmat_det(cmat_mul(pt, cmat_mul(kh, p)));
    CycNum det_p = cmat_det(p);
    out.killing_square_match = det_q == cmat_det(kh) * det_p * det_p;
    return out;
}

} // namespace gla
