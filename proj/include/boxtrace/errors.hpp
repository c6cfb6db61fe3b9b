#pragma once

#include <stdexcept>
#include <string>

namespace boxtrace {

/// Split or target dimension is incompatible with the matrix.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input file is not a well-formed matrix document.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix fails the Hermiticity check a(i,j) = conj(a(j,i)).
class NotHermitianError : public std::runtime_error {
 public:
  NotHermitianError(double defect, double tol)
      : std::runtime_error("matrix is not Hermitian: max |a(i,j) - conj(a(j,i))| = " +
                           std::to_string(defect) + " exceeds tolerance " + std::to_string(tol)),
        defect_(defect),
        tol_(tol) {}

  double defect() const { return defect_; }
  double tolerance() const { return tol_; }

 private:
  double defect_;
  double tol_;
};

/// Spectrum contains an eigenvalue below -clip_tol; entropy is undefined.
class NegativeSpectrumError : public std::runtime_error {
 public:
  NegativeSpectrumError(double min_eig, double clip_tol)
      : std::runtime_error("negative eigenvalue " + std::to_string(min_eig) +
                           " below -" + std::to_string(clip_tol)),
        min_eig_(min_eig),
        clip_tol_(clip_tol) {}

  double min_eig() const { return min_eig_; }
  double clip_tol() const { return clip_tol_; }

 private:
  double min_eig_;
  double clip_tol_;
};

/// Matrix was rejected by density-matrix validation.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace boxtrace
