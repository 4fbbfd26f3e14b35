#pragma once

#include "gla/cyclotomic.hpp"
#include "gla/lattice.hpp"

namespace gla {

struct PairingNotAlternating : std::invalid_argument {
    PairingNotAlternating()
        : std::invalid_argument(
              "commutator pairing is not alternating/bilinear on the group") {}
};

struct SumNotRootOrZero : std::invalid_argument {
    SumNotRootOrZero()
        : std::invalid_argument("sum of roots is neither a root nor zero") {}
};

/// Bilinear 2-cocycle on a finite abelian group with values in Z/d,
/// stored as an upper-triangular table on the cyclic generators.
class Cocycle {
public:
    Cocycle() = default;
    Cocycle(long d, IMat gen_table);

    long d() const { return d_; }
    const IMat& generator_table() const { return table_; }

    /// Exponent of zeta_d; bilinear in the residue tuples.
    long eval(const Cls& a, const Cls& b) const;
    /// eval(a, b) - eval(b, a) mod d.
    long commutator(const Cls& a, const Cls& b) const;

private:
    long d_ = 1;
    IMat table_;
};

/// Builds the upper-triangular cocycle c(x_i, x_j) = pairing(x_i, x_j) for
/// i < j and 0 otherwise, then verifies that its commutator reproduces the
/// pairing (exhaustively for groups of order <= 625, sampled above that).
/// gen_pairing[i][j] is the pairing exponent on the i-th and j-th generators.
Cocycle build_cocycle(const CoinvariantGroup& g, const IMat& gen_pairing,
                      long d);

/// Element (zeta^i, class) of the extension H.
struct ExtElement {
    long zeta_exp = 0;
    Cls cls;

    bool operator==(const ExtElement&) const = default;
};

ExtElement ext_identity(const CoinvariantGroup& g);
ExtElement ext_mul(const Cocycle& c, const CoinvariantGroup& g,
                   const ExtElement& a, const ExtElement& b);
ExtElement ext_inv(const Cocycle& c, const CoinvariantGroup& g,
                   const ExtElement& a);

/// Element (zeta^e, alpha) of the d-fold root cover.
struct ExtendedRoot {
    long zeta_exp = 0;
    Vec root;

    bool operator==(const ExtendedRoot&) const = default;
};

/// Everything needed to work in one extension: the lattice, the elliptic
/// automorphism, the coinvariant group, the pairing, and the cocycle.
struct ExtensionDatum {
    RootLattice lattice;
    LatticeAut w;
    CoinvariantGroup group;
    WPairing pairing;
    Cocycle cocycle;
    long d = 1;

    Cls project(const Vec& v) const { return group.project(v); }
};

/// Assembles the standard datum for (L, w): pairing exponents from the
/// minimal-polynomial pairing, cocycle from the Smith-form generators.
ExtensionDatum make_extension(const RootLattice& L, const LatticeAut& w);

/// Canonical section of the root cover.
ExtendedRoot tilde_lift(const Vec& alpha);

/// Raw product in the pulled-back extension: zeta-exponent plus lattice sum.
struct TildeProduct {
    long zeta_exp = 0;
    Vec sum;

    bool operator==(const TildeProduct&) const = default;
};

TildeProduct tilde_mul(const ExtensionDatum& e, const ExtendedRoot& a,
                       const ExtendedRoot& b);

/// Typed variant: requires alpha + beta to be a root (returns the covering
/// element) or zero (returns a central zeta-power as an ExtElement).
/// Throws SumNotRootOrZero otherwise.
ExtendedRoot tilde_mul_root(const ExtensionDatum& e, const ExtendedRoot& a,
                            const ExtendedRoot& b);

/// The w-action on the root cover, (e, alpha) -> (e, w alpha).
ExtendedRoot w_act(const ExtensionDatum& e, const ExtendedRoot& a);

} // namespace gla
