#pragma once

#include "gla/rational.hpp"

#include <string>
#include <vector>

namespace gla {

using Vec = std::vector<long>;
using IMat = std::vector<std::vector<long>>;

struct UnknownType : std::invalid_argument {
    explicit UnknownType(const std::string& label)
        : std::invalid_argument("unknown lattice type: " + label) {}
};

struct NotElliptic : std::invalid_argument {
    NotElliptic() : std::invalid_argument("automorphism is not elliptic") {}
};

struct NotDiagramAutomorphism : std::invalid_argument {
    NotDiagramAutomorphism()
        : std::invalid_argument(
              "permutation is not a Dynkin diagram automorphism") {}
};

// Small integer-matrix helpers (column-vector convention).
IMat imat_identity(int n);
IMat imat_mul(const IMat& a, const IMat& b);
Vec imat_apply(const IMat& m, const Vec& v);
IMat imat_sub(const IMat& a, const IMat& b);
IMat imat_pow(const IMat& m, long e);
Rat imat_det(const IMat& m);
IMat imat_inverse_unimodular(const IMat& m); // requires det = +-1

/// Simply laced (ADE) root lattice: Cartan matrix as Gram matrix and the
/// full set of roots in simple-root coordinates, sorted lexicographically.
struct RootLattice {
    std::string label;
    int rank = 0;
    IMat gram;
    std::vector<Vec> roots;

    long pair(const Vec& a, const Vec& b) const;
    /// Index into roots, or -1.
    int root_index(const Vec& v) const;
    bool is_root(const Vec& v) const { return root_index(v) >= 0; }
};

/// Builds an ADE lattice from a label like "A2", "D4", "E8", or a direct
/// sum "A1+A1". Roots are enumerated by reflection-orbit closure.
RootLattice build_lattice(const std::string& label);

/// Gram-preserving lattice automorphism in the simple-root basis.
struct LatticeAut {
    IMat matrix;
    long order = 1;
    bool elliptic = false;

    Vec apply(const Vec& v) const { return imat_apply(matrix, v); }
};

LatticeAut make_aut(const RootLattice& L, IMat m);

/// Product of simple reflections; word entries are 1-based simple-root
/// indices, leftmost factor applied last (composition order).
LatticeAut aut_from_reflection_word(const RootLattice& L,
                                    const std::vector<int>& word);
LatticeAut aut_minus_identity(const RootLattice& L);
/// perm is 1-based: alpha_i -> alpha_{perm[i-1]}.
LatticeAut aut_diagram(const RootLattice& L, const std::vector<int>& perm);
LatticeAut aut_coxeter_power(const RootLattice& L,
                             const std::vector<int>& word, long e);

/// Monic minimal polynomial of an integer matrix, constant term first.
std::vector<Int> minimal_polynomial(const IMat& m);

/// Smith normal form: U * A * V = diag(d1, ..., dn) with U, V unimodular
/// and d1 | d2 | ... | dn, all di >= 0.
struct SmithForm {
    std::vector<Int> diag;
    IMat u, v;
};
SmithForm smith_normal_form(const IMat& a);

/// Residue tuple representing a class in the coinvariant group; one entry
/// per nontrivial invariant factor.
using Cls = std::vector<long>;

/// The finite group Lambda/(1-w)Lambda for elliptic w, with a projection
/// and a fixed set-theoretic lift derived from the Smith normal form of
/// (1 - w).
class CoinvariantGroup {
public:
    CoinvariantGroup() = default;
    CoinvariantGroup(int rank, SmithForm snf);

    const std::vector<long>& invariant_factors() const { return factors_; }
    long group_order() const;
    size_t num_generators() const { return factors_.size(); }

    Cls project(const Vec& v) const;
    Vec lift(const Cls& c) const;
    /// Lattice vector projecting to the i-th cyclic generator.
    Vec generator(size_t i) const;

    Cls zero() const { return Cls(factors_.size(), 0); }
    Cls add(const Cls& a, const Cls& b) const;
    Cls neg(const Cls& a) const;
    Cls scale(const Cls& a, long k) const;
    bool is_zero_class(const Cls& a) const;
    /// Multiplicative order of a class.
    long class_order(const Cls& a) const;

    /// All classes in deterministic mixed-radix order.
    std::vector<Cls> all_classes() const;

private:
    int rank_ = 0;
    std::vector<long> factors_;      // nontrivial invariant factors
    std::vector<int> factor_rows_;   // their row indices in the SNF diagonal
    IMat u_, u_inv_;
};

CoinvariantGroup coinvariants(const RootLattice& L, const LatticeAut& w);

/// The two pairings on the coinvariants: Reeder's zeta_m^{(alpha, M0(w)beta)}
/// and Lepowsky's zeta^{sum j (w^j alpha, beta)}, both returned as integer
/// exponents of zeta_d.
class WPairing {
public:
    WPairing() = default;
    WPairing(const RootLattice& L, const LatticeAut& w);

    long d() const { return d_; }
    long m() const { return m_; }

    long exponent_w(const Vec& a, const Vec& b) const;
    long exponent_lepowsky(const Vec& a, const Vec& b) const;
    bool is_trivial_on_roots() const;

private:
    RootLattice lattice_;
    long d_ = 1, m_ = 1, d0_ = 1;
    IMat m0w_;                  // M0(w)
    std::vector<IMat> powers_;  // w^0 .. w^{d-1}
};

} // namespace gla
