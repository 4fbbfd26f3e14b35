#pragma once

#include "gla/epsilon.hpp"
#include "gla/linalg.hpp"

#include <array>
#include <optional>
#include <unordered_map>

namespace gla {

struct InvalidDatum : std::invalid_argument {
    InvalidDatum() : std::invalid_argument("quadruple is not an input datum")
    {
    }
};

struct NotDatumIsomorphism : std::invalid_argument {
    NotDatumIsomorphism()
        : std::invalid_argument("maps do not define a datum isomorphism") {}
};

/// One summand of a bracket value: coefficient times the k-th basis element.
struct Term {
    int k = 0;
    CycNum coeff;
};

struct JacobiReport {
    bool ok = true;
    long long checked = 0;
    std::array<int, 3> witness{-1, -1, -1};
};

struct ZBracketReport {
    bool ok = true;
    long checked = 0;
    std::pair<Vec, Vec> witness;
};

/// The graded Lie algebra of a validated input datum. Basis: the simple
/// coroots h_1..h_l followed by one generator X_{s(alpha)} per root alpha
/// in lattice order, with the canonical section s(alpha) = (0, alpha).
class GradedLieAlgebra {
public:
    /// Builds the structure table; validates the datum first unless told
    /// the caller already has.
    static GradedLieAlgebra construct(const ExtensionDatum& datum,
                                      EpsKind kind, bool validate = true);

    int dim() const { return dim_; }
    int rank() const { return rank_; }
    int num_roots() const { return dim_ - rank_; }
    long d() const { return datum_.d; }
    const ExtensionDatum& datum() const { return datum_; }
    EpsKind eps_kind() const { return kind_; }
    /// Smallest cyclotomic order containing every structure constant.
    long field_order() const;

    std::string basis_label(int i) const;
    /// Basis index of X_{s(alpha)}.
    int root_basis_index(const Vec& alpha) const;

    /// [b_i, b_j] as a sparse term list (any order of i, j).
    std::vector<Term> bracket_basis(int i, int j) const;
    /// Bracket of dense coefficient vectors.
    CVec bracket(const CVec& x, const CVec& y) const;

    /// Test hook: replaces one stored table entry.
    void override_bracket(int i, int j, std::vector<Term> terms);

    JacobiReport verify_jacobi_full(int threads = 1) const;
    JacobiReport verify_jacobi_sampled(long long count,
                                       unsigned long long seed,
                                       int threads = 1) const;
    /// Full Jacobi over the triples containing at least one coroot element.
    JacobiReport verify_jacobi_cartan_triples() const;
    bool verify_antisymmetry() const;

    CMat killing_form() const;
    CycNum killing_det() const;
    bool killing_nondegenerate() const;

    /// Matrix of the lifted automorphism in this basis.
    CMat aut_matrix() const;
    /// Eigenspace basis for each character j mod d.
    std::vector<std::vector<CVec>> grading() const;
    /// Independent dimension oracle from traces of aut-matrix powers.
    std::vector<long> grading_dims_by_trace() const;

    /// The averaged generators Z_{s(alpha)} = sum_j aut^j X_{s(alpha)},
    /// one per root, as dense vectors.
    std::vector<CVec> z_generators() const;
    /// Checks the closed-form bracket of averaged generators; exhaustive
    /// when sample_count == 0, otherwise that many sampled pairs.
    ZBracketReport z_bracket_check(long sample_count = 0,
                                   unsigned long long seed = 0) const;

    /// Diagonal automorphism attached to a coinvariant class.
    CMat inner_automorphism(const Cls& lambda) const;

    /// Jacobi identity on one basis triple.
    bool jacobi_holds(int i, int j, int k) const;

private:
    ExtensionDatum datum_;
    EpsKind kind_;
    int rank_ = 0, dim_ = 0;
    std::unordered_map<long long, std::vector<Term>> table_; // key i*dim+j, i<j
    std::unordered_map<std::string, int> root_index_;

    long long key(int i, int j) const { return (long long)i * dim_ + j; }
    const std::vector<Term>* lookup(int i, int j) const;
};

/// Searches for the zeta-phase table eta making
/// (zeta^i, x) -> (zeta^{i + eta(x)}, psi x) an isomorphism of extensions
/// over the lattice map psi. eta is indexed by the source group's class
/// enumeration. Returns nothing when no such iso exists.
std::optional<std::vector<long>> find_extension_iso(const ExtensionDatum& src,
                                                    const ExtensionDatum& dst,
                                                    const IMat& psi);

/// The induced Lie isomorphism: h_i -> psi-image coroot, X_{s(alpha)} ->
/// zeta^{eta(class of alpha)} X'_{s(psi alpha)}. Verifies intertwining with
/// the lattice automorphisms and the bracket on all basis pairs; throws
/// NotDatumIsomorphism on failure.
CMat apply_datum_isomorphism(const GradedLieAlgebra& a,
                             const GradedLieAlgebra& b, const IMat& psi,
                             const std::vector<long>& eta);

} // namespace gla
