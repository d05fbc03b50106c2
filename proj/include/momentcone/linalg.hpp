#pragma once

#include <optional>

#include "momentcone/rational.hpp"

namespace momentcone {

// Exact Gaussian elimination kernels on rational Eigen matrices.

// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> rref_in_place(RatMat& m);

int rank(RatMat m);

// Unique solution of A x = b; nullopt when A is singular or the system is
// inconsistent or underdetermined.
std::optional<RatVec> solve_unique(const RatMat& a, const RatVec& b);

// Any solution of A x = b; nullopt when inconsistent.
std::optional<RatVec> solve_any(const RatMat& a, const RatVec& b);

// Columns form a basis of the kernel of A.
RatMat nullspace(const RatMat& a);

// Left inverse of a full-column-rank map, induced by orthogonal projection
// onto its image: (E^T E)^{-1} E^T.
RatMat projection_left_inverse(const RatMat& e);

}  // namespace momentcone
