#include "gla/reps.hpp"

#include <map>
#include <numeric>
#include <random>
#include <set>

namespace gla {

namespace {

long mod_pos(long x, long d) { return ((x % d) + d) % d; }

std::set<Cls> close_under_addition(const CoinvariantGroup& g,
                                   std::set<Cls> s)
{
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Cls> cur(s.begin(), s.end());
        for (const Cls& a : cur)
            for (const Cls& b : cur)
                if (s.insert(g.add(a, b)).second)
                    grew = true;
    }
    return s;
}

} // namespace

IsotropicSubgroup maximal_isotropic(const CoinvariantGroup& g,
                                    const Cocycle& c)
{
    auto classes = g.all_classes();
    std::set<Cls> sub{g.zero()};
    for (const Cls& x : classes) {
        bool isotropic = true;
        for (const Cls& a : sub)
            if (c.commutator(x, a) != 0) {
                isotropic = false;
                break;
            }
        if (isotropic) {
            sub.insert(x);
            sub = close_under_addition(g, sub);
        }
    }

    // Maximality: every outside class pairs nontrivially with something.
    for (const Cls& x : classes) {
        if (sub.count(x))
            continue;
        bool clears = true;
        for (const Cls& a : sub)
            if (c.commutator(x, a) != 0) {
                clears = false;
                break;
            }
        if (clears)
            throw std::logic_error("greedy subgroup not maximal");
    }

    IsotropicSubgroup out;
    out.elements.assign(sub.begin(), sub.end());

    // Independent generators, largest order first.
    std::set<Cls> span{g.zero()};
    while (span.size() < sub.size()) {
        const Cls* best = nullptr;
        long best_order = 0;
        for (const Cls& x : out.elements) {
            if (span.count(x))
                continue;
            long o = g.class_order(x);
            // Direct factor: the cyclic group of x meets the span trivially.
            bool clean = true;
            Cls p = x;
            for (long k = 1; k < o; ++k) {
                if (k > 1 && span.count(p)) {
                    clean = false;
                    break;
                }
                p = g.add(p, x);
            }
            if (clean && o > best_order) {
                best = &x;
                best_order = o;
            }
        }
        if (!best)
            throw std::logic_error("no independent generator found");
        out.generators.push_back(*best);
        out.orders.push_back(best_order);
        std::set<Cls> with = span;
        with.insert(*best);
        span = close_under_addition(g, with);
    }
    return out;
}

long HeisenbergRep::subgroup_index(const Cls& c) const
{
    for (size_t i = 0; i < sub_.elements.size(); ++i)
        if (sub_.elements[i] == c)
            return static_cast<long>(i);
    throw std::out_of_range("class not in the subgroup");
}

CycNum HeisenbergRep::character(const ExtElement& a) const
{
    long i = subgroup_index(a.cls);
    return CycNum::root_of_unity(field_order_,
                                 field_order_ / ext_.d *
                                     mod_pos(central_exp_ * a.zeta_exp,
                                             ext_.d)) *
           chi_[i];
}

CMat HeisenbergRep::rho(const ExtElement& h) const
{
    const long m = dim();
    CMat out(m, CVec(m, CycNum::zero()));
    for (long i = 0; i < m; ++i) {
        ExtElement he = ext_mul(ext_.cocycle, ext_.group, h,
                                ExtElement{0, coset_reps_[i]});
        long j = -1;
        for (long t = 0; t < m; ++t) {
            Cls diff = ext_.group.add(he.cls, ext_.group.neg(coset_reps_[t]));
            if (std::find(sub_.elements.begin(), sub_.elements.end(), diff) !=
                sub_.elements.end()) {
                j = t;
                break;
            }
        }
        ExtElement a = ext_mul(ext_.cocycle, ext_.group,
                               ext_inv(ext_.cocycle, ext_.group,
                                       ExtElement{0, coset_reps_[j]}),
                               he);
        out[j][i] = character(a);
    }
    return out;
}

HeisenbergRep induce(const ExtensionDatum& e, const IsotropicSubgroup& sub,
                     long central_exp)
{
    if (std::gcd(central_exp, e.d) != 1)
        throw std::invalid_argument("central exponent not coprime to order");
    HeisenbergRep rep;
    rep.ext_ = e;
    rep.sub_ = sub;
    rep.central_exp_ = central_exp;

    // Coset representatives in deterministic class order.
    std::set<Cls> covered;
    for (const Cls& x : e.group.all_classes()) {
        if (covered.count(x))
            continue;
        rep.coset_reps_.push_back(x);
        for (const Cls& a : sub.elements)
            covered.insert(e.group.add(x, a));
    }

    // Field order: lcm of d and the subgroup exponent, enlarged if the
    // character needs deeper roots.
    long exp_a = 1;
    for (long o : sub.orders)
        exp_a = std::lcm(exp_a, o);
    long n = std::lcm(e.d, exp_a);

    for (int attempt = 0; attempt < 2; ++attempt) {
        // chi on each generator: a root eta with eta^order = central value
        // of the generator's full power.
        std::vector<long> eta_exp(sub.generators.size(), 0);
        bool solvable = true;
        for (size_t gi = 0; gi < sub.generators.size(); ++gi) {
            ExtElement p{0, e.group.zero()};
            ExtElement gen{0, sub.generators[gi]};
            for (long k = 0; k < sub.orders[gi]; ++k)
                p = ext_mul(e.cocycle, e.group, p, gen);
            if (!e.group.is_zero_class(p.cls))
                throw std::logic_error("generator order wrong");
            long target = n / e.d * mod_pos(central_exp * p.zeta_exp, e.d);
            bool found = false;
            for (long t = 0; t < n; ++t)
                if (mod_pos(t * sub.orders[gi], n) == target) {
                    eta_exp[gi] = t;
                    found = true;
                    break;
                }
            if (!found) {
                solvable = false;
                break;
            }
        }
        if (solvable) {
            // Character on every subgroup element through the canonical
            // factorization over the generators.
            rep.field_order_ = n;
            rep.chi_.assign(sub.elements.size(), CycNum::zero());
            std::vector<bool> done(sub.elements.size(), false);
            std::vector<long> counters(sub.generators.size(), 0);
            while (true) {
                ExtElement prod{0, e.group.zero()};
                long chi_e = 0;
                for (size_t gi = 0; gi < sub.generators.size(); ++gi) {
                    ExtElement gen{0, sub.generators[gi]};
                    for (long k = 0; k < counters[gi]; ++k)
                        prod = ext_mul(e.cocycle, e.group, prod, gen);
                    chi_e = mod_pos(chi_e + counters[gi] * eta_exp[gi], n);
                }
                // chi(0, cls) = chi(factorized product) / chi(zeta part).
                long idx = rep.subgroup_index(prod.cls);
                if (!done[idx]) {
                    long central = n / e.d *
                                   mod_pos(central_exp * prod.zeta_exp, e.d);
                    rep.chi_[idx] = CycNum::root_of_unity(
                        n, mod_pos(chi_e - central, n));
                    done[idx] = true;
                }
                size_t gi = 0;
                while (gi < counters.size()) {
                    if (++counters[gi] < sub.orders[gi])
                        break;
                    counters[gi] = 0;
                    ++gi;
                }
                if (gi == counters.size())
                    break;
            }
            if (!std::all_of(done.begin(), done.end(),
                             [](bool b) { return b; }))
                throw std::logic_error("generator span incomplete");

            // The extension must be a homomorphism on the whole preimage.
            bool hom = true;
            for (const Cls& x : sub.elements)
                for (const Cls& y : sub.elements) {
                    ExtElement a{0, x}, b{0, y};
                    ExtElement ab = ext_mul(e.cocycle, e.group, a, b);
                    if (rep.character(a) * rep.character(b) !=
                        rep.character(ab)) {
                        hom = false;
                        break;
                    }
                }
            if (hom)
                return rep;
        }
        n = e.d * exp_a; // retry in the larger field
    }
    throw CharacterDoesNotExtend();
}

long commutant_dimension(const HeisenbergRep& rep)
{
    const long m = rep.dim();
    const CoinvariantGroup& g0 = rep.ext().group;
    // The central element acts by a scalar, so commuting with the images of
    // the cyclic group generators is enough.
    std::vector<CMat> gens;
    for (size_t i = 0; i < g0.num_generators(); ++i) {
        Cls c = g0.zero();
        c[i] = 1;
        gens.push_back(rep.rho(ExtElement{0, c}));
    }

    // Unknown M (m x m) with M rho(g) = rho(g) M for all generators.
    CMat system;
    for (const CMat& g : gens) {
        for (long r = 0; r < m; ++r)
            for (long c = 0; c < m; ++c) {
                CVec eq(m * m, CycNum::zero());
                // (M g - g M)[r][c] = sum_k M[r][k] g[k][c] - g[r][k] M[k][c]
                for (long k = 0; k < m; ++k) {
                    eq[r * m + k] = eq[r * m + k] + g[k][c];
                    eq[k * m + c] = eq[k * m + c] - g[r][k];
                }
                system.push_back(std::move(eq));
            }
    }
    return static_cast<long>(cmat_kernel(system).size());
}

Rat trace_norm_sum(const HeisenbergRep& rep)
{
    const ExtensionDatum& e = rep.ext();
    Rat total = 0;
    for (const Cls& a : e.group.all_classes()) {
        CMat m = rep.rho(ExtElement{0, a});
        CycNum tr = cmat_trace(m);
        CycNum conj = tr.order() == 1 ? tr : tr.galois(tr.order() - 1);
        total += (tr * conj).rational_value();
    }
    // Central zeta-powers scale traces by roots of unity of modulus one.
    return total * Rat(e.d);
}

GRepresentation extend_to_g(const GradedLieAlgebra& alg,
                            const HeisenbergRep& rep)
{
    if (alg.eps_kind() != EpsKind::eps_w)
        throw EpsilonNotEpsW();
    const ExtensionDatum& d = alg.datum();
    GRepresentation out;
    std::set<Vec> seen;
    for (const Vec& r : d.lattice.roots) {
        if (seen.count(r))
            continue;
        Vec cur = r;
        do {
            seen.insert(cur);
            cur = d.w.apply(cur);
        } while (cur != r);
        out.orbit_reps.push_back(r);
        // Well-definedness across the orbit: the projection is constant.
        Cls cls = d.project(r);
        Vec probe = d.w.apply(r);
        while (probe != r) {
            if (d.project(probe) != cls)
                throw std::logic_error("orbit projection not constant");
            probe = d.w.apply(probe);
        }
        out.matrices.push_back(rep.rho(ExtElement{0, cls}));
    }
    return out;
}

RepHomReport verify_rep_homomorphism(const GradedLieAlgebra& alg,
                                     const HeisenbergRep& rep,
                                     const GRepresentation& grep)
{
    const ExtensionDatum& d = alg.datum();
    EpsEvaluator eps(d, EpsKind::eps_w);
    const long dd = d.d;

    // Matrix of rho(pi) for an arbitrary root, cached by class.
    std::map<Cls, CMat> cache;
    auto mat_of = [&](const Vec& root) -> const CMat& {
        Cls cls = d.project(root);
        auto it = cache.find(cls);
        if (it == cache.end())
            it = cache.emplace(cls, rep.rho(ExtElement{0, cls})).first;
        return it->second;
    };

    RepHomReport report;
    for (size_t a = 0; a < grep.orbit_reps.size(); ++a)
        for (size_t b = a + 1; b < grep.orbit_reps.size(); ++b) {
            const Vec& alpha = grep.orbit_reps[a];
            const Vec& beta = grep.orbit_reps[b];
            const CMat& ma = grep.matrices[a];
            const CMat& mb = grep.matrices[b];
            const long m = rep.dim();
            // Left side: image of the closed-form bracket of averaged
            // generators.
            CMat lhs(m, CVec(m, CycNum::zero()));
            Vec wa = alpha;
            for (long j = 0; j < dd; ++j) {
                if (d.lattice.pair(wa, beta) == -1) {
                    long e = d.cocycle.eval(d.project(wa), d.project(beta));
                    CycNum c = eps(wa, beta) * CycNum::root_of_unity(dd, e);
                    Vec sum(wa.size());
                    for (size_t i = 0; i < sum.size(); ++i)
                        sum[i] = wa[i] + beta[i];
                    const CMat& ms = mat_of(sum);
                    for (long r = 0; r < m; ++r)
                        for (long t = 0; t < m; ++t)
                            if (!ms[r][t].is_zero())
                                lhs[r][t] = lhs[r][t] + c * ms[r][t];
                }
                wa = d.w.apply(wa);
            }
            CMat rhs = cmat_mul(ma, mb);
            CMat ba = cmat_mul(mb, ma);
            for (long r = 0; r < m; ++r)
                for (long t = 0; t < m; ++t)
                    rhs[r][t] = rhs[r][t] - ba[r][t];
            ++report.checked;
            if (lhs != rhs) {
                report.ok = false;
                report.witness = {alpha, beta};
                return report;
            }
        }

    // Image dimension: rank of the flattened matrices.
    CMat flat;
    for (const CMat& m : grep.matrices) {
        CVec v;
        for (const CVec& row : m)
            for (const CycNum& c : row)
                v.push_back(c);
        flat.push_back(std::move(v));
    }
    report.image_dim = cmat_rank(flat);
    return report;
}

EpsSumReport eps_sum_check(const ExtensionDatum& datum)
{
    EpsEvaluator eps(datum, EpsKind::eps_w);
    const long d = datum.d;
    EpsSumReport report;
    for (const Vec& alpha : datum.lattice.roots)
        for (const Vec& beta : datum.lattice.roots) {
            bool eligible = true;
            Vec wa = alpha;
            std::vector<Vec> powers;
            for (long j = 0; j < d; ++j) {
                long p = datum.lattice.pair(wa, beta);
                if (p < -1 || p > 1) {
                    eligible = false;
                    break;
                }
                powers.push_back(wa);
                wa = datum.w.apply(wa);
            }
            if (!eligible)
                continue;
            CycNum lhs =
                CycNum::one() -
                CycNum::root_of_unity(d, datum.pairing.exponent_w(beta,
                                                                  alpha));
            CycNum rhs = CycNum::zero();
            for (const Vec& w : powers)
                if (datum.lattice.pair(w, beta) == -1)
                    rhs = rhs + eps(w, beta);
            ++report.checked;
            if (lhs != rhs) {
                report.ok = false;
                report.witness = {alpha, beta};
                return report;
            }
        }

    // Polynomial identity: summing P over all d-th roots of unity picks out
    // d times the coefficients of exponents divisible by d.
    std::mt19937_64 rng(271828);
    for (int trial = 0; trial < 30 && report.poly_identity_ok; ++trial) {
        const int deg = static_cast<int>(rng() % (3 * d + 1));
        std::vector<long> coeff(deg + 1);
        for (long& c : coeff)
            c = static_cast<long>(rng() % 21) - 10;
        CycNum lhs = CycNum::zero();
        for (long j = 0; j < d; ++j) {
            CycNum x = CycNum::root_of_unity(d, j);
            CycNum val = CycNum::zero();
            for (int e = deg; e >= 0; --e)
                val = val * x + CycNum::from_rational(Rat(coeff[e]));
            lhs = lhs + val;
        }
        long rhs = 0;
        for (int e = 0; e <= deg; e += d)
            rhs += coeff[e];
        if (lhs != CycNum::from_rational(Rat(d * rhs)))
            report.poly_identity_ok = false;
    }
    return report;
}

} // namespace gla
