#pragma once

// Small dense complex linear algebra used throughout the toolkit:
// Hermitian eigendecompositions, the partial transpose on 9x9 blocks,
// Kronecker products of C^3 vectors, quadratic forms and numerical rank.
// Dimensions are 3 and 9 only; everything is exact-tolerance checked.

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace choiwit {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

struct EigSystem {
    Eigen::VectorXd values;  // ascending
    CMat vectors;            // orthonormal columns, vectors.col(k) <-> values[k]
};

/// Largest absolute deviation |M(i,j) - conj(M(j,i))|.
double hermiticity_defect(const CMat& m);

/// Throws std::invalid_argument (reporting the defect) if m is not
/// Hermitian within tol.
void require_hermitian(const CMat& m, double tol = 1e-12);

EigSystem hermitian_eigs(const CMat& h);
double min_eigenvalue(const CMat& h);

/// Transpose of the second tensor factor of a 9x9 block matrix:
/// out[(i,j),(k,l)] = in[(i,l),(k,j)] with row index 3i+j.
CMat partial_transpose(const CMat& w);

/// Tensor product of two C^3 vectors, entry 3i+j = xi_i * eta_j.
CVec kron3(const CVec& xi, const CVec& eta);

/// <v|W|v> for Hermitian W; the imaginary residual of the raw sum must
/// stay below 1e-10 * ||W||_F * ||v||^2.
double quad_form(const CMat& w, const CVec& v);

/// Count of singular values of the stacked column matrix above
/// tol * sigma_max. Empty or all-zero input gives 0.
int numerical_rank(const std::vector<CVec>& vectors, double tol = 1e-7);

}  // namespace choiwit
