#pragma once

#include <vector>

#include "boxtrace/complex_matrix.hpp"

namespace boxtrace {

/// Default absolute tolerance for the Hermiticity precondition.
inline constexpr double kHermitianTol = 1e-10;

struct HermitianEigen {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column k pairs with values[k]
};

/// Eigenvalues of a Hermitian matrix, ascending. The input must satisfy
/// max |a(i,j) - conj(a(j,i))| <= herm_tol (throws NotHermitianError
/// otherwise); it is then symmetrized as (a + a^dagger)/2 before solving.
///
/// Accuracy contract: for every returned lambda there is a unit vector v
/// with ||a v - lambda v|| <= 1e-10 * (1 + max_abs(a) * dim). The solver is
/// a cyclic Jacobi iteration with complex rotations, which lands far inside
/// that bound; eigh_hermitian exposes the witness vectors.
std::vector<double> eigvals_hermitian(const ComplexMatrix& a, double herm_tol = kHermitianTol);

/// Eigenvalues and an orthonormal set of eigenvectors.
HermitianEigen eigh_hermitian(const ComplexMatrix& a, double herm_tol = kHermitianTol);

}  // namespace boxtrace
