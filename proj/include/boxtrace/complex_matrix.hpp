#pragma once

#include <complex>
#include <vector>

#include "boxtrace/errors.hpp"

namespace boxtrace {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major. The raw numeric carrier for
/// everything else in the library. Construction from external data rejects
/// non-finite entries; building a matrix entry by entry through operator()
/// is unchecked.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  /// dim x dim matrix of zeros.
  explicit ComplexMatrix(int dim);

  static ComplexMatrix identity(int dim);

  /// Validating constructor: entries.size() must equal dim*dim and every
  /// component must be finite.
  static ComplexMatrix from_entries(int dim, std::vector<Complex> entries);

  int dim() const { return dim_; }

  Complex& operator()(int i, int j) { return entries_[static_cast<size_t>(i) * dim_ + j]; }
  const Complex& operator()(int i, int j) const {
    return entries_[static_cast<size_t>(i) * dim_ + j];
  }

  const std::vector<Complex>& entries() const { return entries_; }

  bool all_finite() const;

 private:
  int dim_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a);
ComplexMatrix operator*(double s, const ComplexMatrix& a);

/// Kronecker product; block (i,j) of the result is a(i,j) * b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Entry (i,j) of the result is conj(a(j,i)).
ComplexMatrix conj_transpose(const ComplexMatrix& a);

Complex trace(const ComplexMatrix& a);
double max_abs(const ComplexMatrix& a);
double frobenius_norm(const ComplexMatrix& a);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// max over (i,j) of |a(i,j) - conj(a(j,i))|.
double hermiticity_defect(const ComplexMatrix& a);

/// (a + a^dagger) / 2.
ComplexMatrix hermitize(const ComplexMatrix& a);

}  // namespace boxtrace
