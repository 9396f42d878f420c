#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "wavechan/green_oracle.hpp"

extern "C" {
void zherk_(const char* uplo, const char* trans, const int* n, const int* k,
            const double* alpha, const wavechan::complexd* a, const int* lda,
            const double* beta, wavechan::complexd* c, const int* ldc);
void zheevd_(const char* jobz, const char* uplo, const int* n,
             wavechan::complexd* a, const int* lda, double* w,
             wavechan::complexd* work, const int* lwork, double* rwork,
             const int* lrwork, int* iwork, const int* liwork, int* info);
void zgesdd_(const char* jobz, const int* m, const int* n,
             wavechan::complexd* a, const int* lda, double* s,
             wavechan::complexd* u, const int* ldu, wavechan::complexd* vt,
             const int* ldvt, wavechan::complexd* work, const int* lwork,
             double* rwork, int* iwork, int* info);
}

namespace wavechan {

double ComplexMatrix::frobenius_sq() const {
  double t = 0;
  for (const auto& v : a) t += std::norm(v);
  return t;
}

namespace linalg {

// C += B^H B for a row-block B (m x n, column-major).
void herk_accumulate(ComplexMatrix& gram, const ComplexMatrix& block) {
  const int n = gram.rows;
  const int m = block.rows;
  if (block.cols != n || gram.cols != n)
    throw std::invalid_argument("herk_accumulate: shape mismatch");
  const double one = 1.0;
  zherk_("L", "C", &n, &m, &one, block.a.data(), &m, &one, gram.a.data(), &n);
}

// Eigenvalues of a Hermitian matrix (lower triangle filled), ascending.
std::vector<double> hermitian_eigenvalues(ComplexMatrix& a) {
  const int n = a.rows;
  if (a.cols != n) throw std::invalid_argument("hermitian_eigenvalues: not square");
  std::vector<double> w(n);
  int info = 0;
  int lwork = -1, lrwork = -1, liwork = -1;
  complexd wk_query;
  double rw_query;
  int iw_query;
  zheevd_("N", "L", &n, a.a.data(), &n, w.data(), &wk_query, &lwork, &rw_query,
          &lrwork, &iw_query, &liwork, &info);
  if (info != 0)
    throw std::runtime_error("zheevd workspace query failed, info=" +
                             std::to_string(info));
  lwork = static_cast<int>(wk_query.real());
  lrwork = static_cast<int>(rw_query);
  liwork = iw_query;
  std::vector<complexd> work(lwork);
  std::vector<double> rwork(lrwork);
  std::vector<int> iwork(liwork);
  zheevd_("N", "L", &n, a.a.data(), &n, w.data(), work.data(), &lwork,
          rwork.data(), &lrwork, iwork.data(), &liwork, &info);
  if (info != 0)
    throw std::runtime_error(
        "hermitian eigensolver did not converge, zheevd info=" +
        std::to_string(info));
  return w;
}

// Descending singular values from Gram eigenvalues.
std::vector<double> sigmas_from_gram(ComplexMatrix& gram) {
  auto w = hermitian_eigenvalues(gram);
  std::vector<double> s(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    s[w.size() - 1 - i] = std::sqrt(std::max(0.0, w[i]));
  return s;
}

// Backward-stable SVD of the explicit matrix (LAPACK divide-and-conquer
// bidiagonalization). Every singular value carries an absolute error of
// order eps * sigma_1, unlike the Gram route whose error on small values is
// ~eps * sigma_1^2 / sigma_q. The monotonicity verifier depends on this.
std::vector<double> svd_values_direct(ComplexMatrix a) {
  const int m = a.rows, n = a.cols;
  if (m == 0 || n == 0)
    throw std::invalid_argument("svd_values_direct: empty matrix");
  const int mn = std::min(m, n);
  std::vector<double> s(mn);
  int info = 0;
  int lwork = -1;
  complexd wquery;
  std::vector<double> rwork(std::size_t(7) * mn > 1 ? std::size_t(7) * mn : 1);
  std::vector<int> iwork(std::size_t(8) * mn);
  complexd udummy, vdummy;
  const int one = 1;
  zgesdd_("N", &m, &n, a.a.data(), &m, s.data(), &udummy, &one, &vdummy, &one,
          &wquery, &lwork, rwork.data(), iwork.data(), &info);
  if (info != 0)
    throw std::runtime_error("zgesdd workspace query failed, info=" +
                             std::to_string(info));
  lwork = static_cast<int>(wquery.real());
  std::vector<complexd> work(lwork);
  zgesdd_("N", &m, &n, a.a.data(), &m, s.data(), &udummy, &one, &vdummy, &one,
          work.data(), &lwork, rwork.data(), iwork.data(), &info);
  if (info != 0)
    throw std::runtime_error("direct SVD did not converge, zgesdd info=" +
                             std::to_string(info));
  return s;
}

}  // namespace linalg

}  // namespace wavechan
