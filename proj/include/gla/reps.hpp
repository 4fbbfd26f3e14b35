#pragma once

#include "gla/lie_algebra.hpp"

namespace gla {

struct CharacterDoesNotExtend : std::runtime_error {
    CharacterDoesNotExtend()
        : std::runtime_error("character does not extend to the subgroup") {}
};

struct EpsilonNotEpsW : std::invalid_argument {
    EpsilonNotEpsW()
        : std::invalid_argument("operation requires the product pairing") {}
};

/// A maximal isotropic subgroup of the coinvariant group with respect to
/// the commutator pairing, with an independent generator decomposition.
struct IsotropicSubgroup {
    std::vector<Cls> elements;   // all elements, deterministic order
    std::vector<Cls> generators; // independent generators
    std::vector<long> orders;    // their orders; the products enumerate A
};

/// Greedy-and-verified maximal isotropic subgroup for the cocycle's
/// commutator pairing.
IsotropicSubgroup maximal_isotropic(const CoinvariantGroup& g,
                                    const Cocycle& c);

/// Induced representation of the finite Heisenberg group H on the coset
/// space of the abelian preimage of an isotropic subgroup.
class HeisenbergRep {
public:
    long dim() const { return static_cast<long>(coset_reps_.size()); }
    long field_order() const { return field_order_; }
    const IsotropicSubgroup& subgroup() const { return sub_; }
    const std::vector<Cls>& coset_reps() const { return coset_reps_; }
    long central_exp() const { return central_exp_; }
    const ExtensionDatum& ext() const { return ext_; }

    /// Character value on an element of the abelian preimage; throws
    /// std::out_of_range off the subgroup.
    CycNum character(const ExtElement& a) const;
    /// Representing matrix of an arbitrary element of H.
    CMat rho(const ExtElement& h) const;

private:
    friend HeisenbergRep induce(const ExtensionDatum& e,
                                const IsotropicSubgroup& sub,
                                long central_exp);
    ExtensionDatum ext_;
    IsotropicSubgroup sub_;
    std::vector<Cls> coset_reps_;
    long field_order_ = 1;
    long central_exp_ = 1;
    // Character values indexed by class index within the subgroup order.
    std::vector<CycNum> chi_;
    long subgroup_index(const Cls& c) const;
};

/// Builds the induced representation with central character
/// zeta -> zeta^central_exp; verifies the extended character is a
/// homomorphism, the rep is a homomorphism, and irreducibility via the
/// exact trace-norm sum.
HeisenbergRep induce(const ExtensionDatum& e, const IsotropicSubgroup& sub,
                     long central_exp = 1);

/// Commutant dimension of the representation (1 means irreducible).
long commutant_dimension(const HeisenbergRep& rep);
/// Exact sum of |trace|^2 over the group; equals |H| iff irreducible.
Rat trace_norm_sum(const HeisenbergRep& rep);

/// The induced action of the fixed subalgebra: one matrix per orbit of
/// roots, assigned through the projection to the Heisenberg group.
struct GRepresentation {
    std::vector<Vec> orbit_reps;
    std::vector<CMat> matrices; // aligned with orbit_reps
};

GRepresentation extend_to_g(const GradedLieAlgebra& alg,
                            const HeisenbergRep& rep);

struct RepHomReport {
    bool ok = true;
    long checked = 0;
    std::pair<Vec, Vec> witness;
    long image_dim = 0;
};

/// Checks the bracket equation on all unordered orbit pairs, expanding the
/// left side by the closed form for brackets of averaged generators.
RepHomReport verify_rep_homomorphism(const GradedLieAlgebra& alg,
                                     const HeisenbergRep& rep,
                                     const GRepresentation& grep);

struct EpsSumReport {
    bool ok = true;
    long checked = 0;
    std::pair<Vec, Vec> witness;
    bool poly_identity_ok = true;
};

/// For every eligible root pair, compares 1 - <beta, alpha> with the sum
/// of epsilon values over the index set of product -1; also verifies the
/// root-of-unity polynomial-sum identity on random integer polynomials.
EpsSumReport eps_sum_check(const ExtensionDatum& datum);

} // namespace gla
