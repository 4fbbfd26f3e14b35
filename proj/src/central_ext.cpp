#include "gla/central_ext.hpp"

#include <random>

namespace gla {

namespace {

long mod_pos(long x, long d) { return ((x % d) + d) % d; }

} // namespace

Cocycle::Cocycle(long d, IMat gen_table) : d_(d), table_(std::move(gen_table))
{
}

long Cocycle::eval(const Cls& a, const Cls& b) const
{
    long e = 0;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            e = mod_pos(e + a[i] * b[j] % d_ * table_[i][j], d_);
    return e;
}

long Cocycle::commutator(const Cls& a, const Cls& b) const
{
    return mod_pos(eval(a, b) - eval(b, a), d_);
}

Cocycle build_cocycle(const CoinvariantGroup& g, const IMat& gen_pairing,
                      long d)
{
    const size_t n = g.num_generators();
    const auto& factors = g.invariant_factors();
    for (size_t i = 0; i < n; ++i) {
        if (mod_pos(gen_pairing[i][i], d) != 0)
            throw PairingNotAlternating();
        for (size_t j = 0; j < n; ++j) {
            if (mod_pos(gen_pairing[i][j] + gen_pairing[j][i], d) != 0)
                throw PairingNotAlternating();
            // Bilinearity on the group requires the pairing to kill the
            // generator orders.
            if (mod_pos(factors[i] * gen_pairing[i][j], d) != 0)
                throw PairingNotAlternating();
        }
    }

    IMat table(n, Vec(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            table[i][j] = mod_pos(gen_pairing[i][j], d);
    Cocycle c(d, std::move(table));

    auto pairing_of = [&](const Cls& a, const Cls& b) {
        long e = 0;
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j)
                e = mod_pos(e + a[i] * b[j] % d * gen_pairing[i][j], d);
        return e;
    };

    if (g.group_order() <= 625) {
        auto classes = g.all_classes();
        for (const Cls& a : classes)
            for (const Cls& b : classes)
                if (c.commutator(a, b) != pairing_of(a, b))
                    throw PairingNotAlternating();
    } else {
        std::mt19937_64 rng(20240501);
        for (int trial = 0; trial < 10000; ++trial) {
            Cls a(n), b(n);
            for (size_t i = 0; i < n; ++i) {
                a[i] = static_cast<long>(rng() % factors[i]);
                b[i] = static_cast<long>(rng() % factors[i]);
            }
            if (c.commutator(a, b) != pairing_of(a, b))
                throw PairingNotAlternating();
        }
    }
    return c;
}

ExtElement ext_identity(const CoinvariantGroup& g)
{
    return ExtElement{0, g.zero()};
}

ExtElement ext_mul(const Cocycle& c, const CoinvariantGroup& g,
                   const ExtElement& a, const ExtElement& b)
{
    long e = mod_pos(a.zeta_exp + b.zeta_exp + c.eval(a.cls, b.cls), c.d());
    return ExtElement{e, g.add(a.cls, b.cls)};
}

ExtElement ext_inv(const Cocycle& c, const CoinvariantGroup& g,
                   const ExtElement& a)
{
    Cls neg = g.neg(a.cls);
    // (zeta^i, x)^{-1} = (zeta^{-i} c(-x, x)^{-1} c(0, 0)^{-1}, -x); for a
    // bilinear cocycle c(0, 0) = 0 in the exponent.
    long e = mod_pos(-a.zeta_exp - c.eval(neg, a.cls) -
                         c.eval(g.zero(), g.zero()),
                     c.d());
    return ExtElement{e, neg};
}

ExtensionDatum make_extension(const RootLattice& L, const LatticeAut& w)
{
    ExtensionDatum e;
    e.lattice = L;
    e.w = w;
    e.group = coinvariants(L, w);
    e.pairing = WPairing(L, w);
    e.d = e.pairing.d();

    const size_t n = e.group.num_generators();
    IMat gen_pairing(n, Vec(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            gen_pairing[i][j] =
                e.pairing.exponent_w(e.group.generator(i),
                                     e.group.generator(j));
    e.cocycle = build_cocycle(e.group, gen_pairing, e.d);
    return e;
}

ExtendedRoot tilde_lift(const Vec& alpha) { return ExtendedRoot{0, alpha}; }

TildeProduct tilde_mul(const ExtensionDatum& e, const ExtendedRoot& a,
                       const ExtendedRoot& b)
{
    long exp = mod_pos(a.zeta_exp + b.zeta_exp +
                           e.cocycle.eval(e.project(a.root),
                                          e.project(b.root)),
                       e.d);
    Vec sum(a.root.size());
    for (size_t i = 0; i < sum.size(); ++i)
        sum[i] = a.root[i] + b.root[i];
    return TildeProduct{exp, std::move(sum)};
}

ExtendedRoot tilde_mul_root(const ExtensionDatum& e, const ExtendedRoot& a,
                            const ExtendedRoot& b)
{
    TildeProduct p = tilde_mul(e, a, b);
    bool zero = std::all_of(p.sum.begin(), p.sum.end(),
                            [](long x) { return x == 0; });
    if (!zero && !e.lattice.is_root(p.sum))
        throw SumNotRootOrZero();
    return ExtendedRoot{p.zeta_exp, std::move(p.sum)};
}

ExtendedRoot w_act(const ExtensionDatum& e, const ExtendedRoot& a)
{
    return ExtendedRoot{a.zeta_exp, e.w.apply(a.root)};
}

} // namespace gla
