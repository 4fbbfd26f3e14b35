#pragma once

#include "gla/lie_algebra.hpp"

namespace gla {

struct NonCommutingPair : std::invalid_argument {
    NonCommutingPair()
        : std::invalid_argument(
              "diagram automorphism does not commute with the Coxeter word")
    {
    }
};

struct UnexpectedType : std::runtime_error {
    explicit UnexpectedType(const std::string& what) : std::runtime_error(what)
    {
    }
};

struct ActionConditionsViolated : std::invalid_argument {
    explicit ActionConditionsViolated(const std::string& what)
        : std::invalid_argument(what)
    {
    }
};

/// One row of the folding table: a simply laced source, a Coxeter word, and
/// a commuting diagram automorphism whose fixed algebra has the stated type.
struct FoldingCase {
    std::string name;          // e.g. "D4G2"
    std::string source;        // source lattice label
    std::vector<int> word;     // Coxeter word (1-based reflection indices)
    std::vector<int> perm;     // diagram automorphism, 1-based
    int theta_order;
    std::string expected_type; // "C2", "B4", "G2", "F4"
    long expected_dim;
};

const std::vector<FoldingCase>& folding_table();
const FoldingCase& folding_case(const std::string& name);

struct FoldResult {
    GradedLieAlgebra alg;            // the ambient graded algebra
    CMat phi;                        // the pinned automorphism
    std::vector<CVec> fixed_basis;   // basis of the fixed subalgebra
    long rank = 0;                   // dimension of the fixed Cartan part
    long num_long = 0, num_short = 0;
    long length_ratio = 1;
    std::string identified_type;
};

/// Builds the algebra for (source, Coxeter word), lifts the diagram
/// automorphism to a pinned automorphism, computes its fixed subalgebra,
/// and identifies the fixed root system from projected root lengths.
/// Throws UnexpectedType when the identification disagrees with the table.
FoldResult fold(const FoldingCase& fc, bool validate_datum = true);

/// Cyclic Galois action: sigma of order e acting on the lattice by the
/// given automorphism and on roots of unity by zeta -> zeta^zeta_exp.
struct GaloisAction {
    long e = 1;
    LatticeAut sigma;
    long zeta_exp = 1;
};

struct DescentResult {
    long field_order = 1;
    /// Fixed vectors of the semilinear action; a Q-basis of the form,
    /// expressed over the cyclotomic field.
    std::vector<CVec> q_basis;
    /// brackets[i][j] = coordinates of [q_i, q_j] in the q-basis; all exact
    /// rationals.
    std::vector<std::vector<RVec>> brackets;
};

/// Verifies the compatibility conditions of the action (semilinear order,
/// pairing and epsilon equivariance) and computes the rational form.
/// Throws ActionConditionsViolated with a description on failure.
DescentResult galois_descend(const GradedLieAlgebra& alg,
                             const GaloisAction& action);

/// Linear part of the semilinear action: coroots by sigma, root lines
/// permuted by sigma through the canonical section.
CMat semilinear_matrix(const GradedLieAlgebra& alg,
                       const GaloisAction& action);

struct G2QResult {
    long ambient_dim_q = 0; // Q-dimension of the descended D4 algebra
    long fixed_dim_q = 0;   // Q-dimension of its folded fixed part
    std::vector<std::vector<RVec>> fixed_brackets;
    bool killing_square_match = false;
};

/// The full rational-form pipeline: descend the D4/Coxeter algebra along
/// complex conjugation twisted by a reflection, then intersect with the
/// fixed algebra of the order-3 pinned automorphism.
G2QResult descend_g2q();

} // namespace gla
