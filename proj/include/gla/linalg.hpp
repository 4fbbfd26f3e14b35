#pragma once

#include "gla/cyclotomic.hpp"

#include <optional>

namespace gla {

using CVec = std::vector<CycNum>;
using CMat = std::vector<CVec>;

CMat cmat_identity(int n);
CMat cmat_mul(const CMat& a, const CMat& b);
CVec cmat_apply(const CMat& m, const CVec& v);
CMat cmat_pow(const CMat& m, long e);
bool cmat_is_identity(const CMat& m);

/// Exact rank via Gaussian elimination; rows with no entry in the pivot
/// column are skipped, so sparse inputs stay cheap.
int cmat_rank(CMat m);
/// Basis of the right kernel.
std::vector<CVec> cmat_kernel(const CMat& m);
CycNum cmat_det(CMat m);
/// Trace of a square matrix.
CycNum cmat_trace(const CMat& m);

using RVec = std::vector<Rat>;
using RMat = std::vector<RVec>;

RMat rmat_identity(int n);
RMat rmat_mul(const RMat& a, const RMat& b);
RVec rmat_apply(const RMat& m, const RVec& v);
int rmat_rank(RMat m);
std::vector<RVec> rmat_kernel(const RMat& m);
Rat rmat_det(RMat m);
/// Solves m x = b exactly; empty result when inconsistent.
std::optional<RVec> rmat_solve(RMat m, RVec b);

} // namespace gla
