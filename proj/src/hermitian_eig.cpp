#include "boxtrace/hermitian_eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace boxtrace {

namespace {

double offdiag_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (int p = 0; p < a.dim(); ++p)
    for (int q = p + 1; q < a.dim(); ++q) s += std::norm(a(p, q));
  return std::sqrt(2.0 * s);
}

// Cyclic Jacobi for a Hermitian matrix. Each rotation annihilates one
// off-diagonal pair (p,q) with the unitary
//
//   U = [ c            s e^{i phi} ]        phi = arg a(p,q),
//       [ -s e^{-i phi} c          ]        cot(2 theta) = (a_qq - a_pp)/(2|a_pq|),
//
// applied as U^dagger A U. Off-diagonal mass is strictly decreasing and the
// iteration converges quadratically; the residual of every eigenpair is
// bounded by the final off-diagonal norm.
void jacobi(ComplexMatrix& a, std::vector<double>& d, ComplexMatrix* v) {
  const int n = a.dim();
  d.resize(n);
  for (int i = 0; i < n; ++i) d[i] = a(i, i).real();
  if (v) *v = ComplexMatrix::identity(n);
  if (n < 2) return;

  const double scale = std::max(1.0, frobenius_norm(a));
  const double target = 1e-15 * scale;
  const int max_sweeps = 80;

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (offdiag_norm(a) <= target) return;

    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double abs_apq = std::abs(apq);
        if (abs_apq == 0.0) continue;

        const Complex phase = apq / abs_apq;
        const double tau = (d[q] - d[p]) / (2.0 * abs_apq);
        const double t =
            (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        d[p] -= t * abs_apq;
        d[q] += t * abs_apq;
        a(p, p) = d[p];
        a(q, q) = d[q];
        a(p, q) = 0.0;
        a(q, p) = 0.0;

        const Complex conj_phase = std::conj(phase);
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const Complex arp = a(r, p);
          const Complex arq = a(r, q);
          const Complex new_rp = c * arp - s * conj_phase * arq;
          const Complex new_rq = s * phase * arp + c * arq;
          a(r, p) = new_rp;
          a(p, r) = std::conj(new_rp);
          a(r, q) = new_rq;
          a(q, r) = std::conj(new_rq);
        }

        if (v) {
          for (int r = 0; r < n; ++r) {
            const Complex vrp = (*v)(r, p);
            const Complex vrq = (*v)(r, q);
            (*v)(r, p) = c * vrp - s * conj_phase * vrq;
            (*v)(r, q) = s * phase * vrp + c * vrq;
          }
        }
      }
    }
  }

  if (offdiag_norm(a) > 1e-11 * scale) {
    throw std::runtime_error("hermitian eigensolver failed to converge");
  }
}

HermitianEigen solve(const ComplexMatrix& a, double herm_tol, bool want_vectors) {
  const double defect = hermiticity_defect(a);
  if (defect > herm_tol) throw NotHermitianError(defect, herm_tol);

  ComplexMatrix w = hermitize(a);
  std::vector<double> d;
  ComplexMatrix v;
  jacobi(w, d, want_vectors ? &v : nullptr);

  std::vector<int> order(d.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return d[x] < d[y]; });

  HermitianEigen out;
  out.values.reserve(d.size());
  for (int k : order) out.values.push_back(d[k]);
  if (want_vectors) {
    out.vectors = ComplexMatrix(a.dim());
    for (int col = 0; col < a.dim(); ++col)
      for (int r = 0; r < a.dim(); ++r) out.vectors(r, col) = v(r, order[col]);
  }
  return out;
}

}  // namespace

std::vector<double> eigvals_hermitian(const ComplexMatrix& a, double herm_tol) {
  return solve(a, herm_tol, false).values;
}

HermitianEigen eigh_hermitian(const ComplexMatrix& a, double herm_tol) {
  return solve(a, herm_tol, true);
}

}  // namespace boxtrace
