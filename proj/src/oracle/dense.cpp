#include <algorithm>
#include <limits>
#include <string>

#include "bitblas/error.hpp"
#include "bitblas/oracle.hpp"

namespace bitblas::oracle {

DenseMatrix DenseMatrix::from_csr(const CsrMatrix& csr) {
  DenseMatrix m(csr.n());
  for (std::uint32_t i = 0; i < csr.n(); ++i)
    for (std::uint32_t c : csr.row(i)) m.at(i, c) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::transposed() const {
  DenseMatrix t(n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) t.at(j, i) = at(i, j);
  return t;
}

DenseVector dense_semiring_mxv(const DenseMatrix& a, const DenseVector& x, const Semiring& s,
                               std::span<const double> scale) {
  if (x.size() != a.n) throw ParameterError("dense mxv dimension mismatch");
  if (!scale.empty() && scale.size() != a.n) throw ParameterError("dense mxv scale dimension mismatch");
  DenseVector out(a.n, s.identity());
  for (std::uint32_t i = 0; i < a.n; ++i) {
    double acc = s.identity();
    for (std::uint32_t j = 0; j < a.n; ++j) {
      const double aij = a.at(i, j);
      if (aij == 0.0) continue;
      switch (s.kind) {
        case Semiring::Kind::Boolean:
          if (x[j] != 0.0) acc = 1.0;
          break;
        case Semiring::Kind::Arithmetic:
          acc = acc + aij * (scale.empty() ? x[j] : x[j] / scale[j]);
          break;
        case Semiring::Kind::MinPlus:
          acc = std::min(acc, x[j] + s.edge_increment);
          break;
        case Semiring::Kind::MaxTimes:
          acc = std::max(acc, aij * x[j]);
          break;
      }
    }
    out[i] = acc;
  }
  return out;
}

std::uint64_t dense_mxm_masked_sum(const DenseMatrix& a, const DenseMatrix& b, const DenseMatrix* mask) {
  if (a.n != b.n || (mask != nullptr && mask->n != a.n)) throw ParameterError("dense mxm dimension mismatch");
  const std::uint32_t n = a.n;
  std::uint64_t total = 0;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      if (mask != nullptr && mask->at(i, j) == 0.0) continue;
      std::uint64_t cij = 0;
      for (std::uint32_t k = 0; k < n; ++k)
        if (a.at(i, k) != 0.0 && b.at(k, j) != 0.0) ++cij;
      total += cij;
    }
  }
  return total;
}

}  // namespace bitblas::oracle
