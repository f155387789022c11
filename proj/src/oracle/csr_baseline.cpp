#include <cmath>
#include <vector>

#include "bitblas/error.hpp"
#include "bitblas/oracle.hpp"

namespace bitblas::oracle {

DenseVector csr_spmv_f32(const CsrMatrix& csr, const DenseVector& x) {
  if (x.size() != csr.n()) throw ParameterError("spmv dimension mismatch");
  const auto& values = csr.values();
  DenseVector out(csr.n(), 0.0);
  for (std::uint32_t i = 0; i < csr.n(); ++i) {
    float acc = 0.0f;
    for (std::uint32_t k = csr.row_ptr()[i]; k < csr.row_ptr()[i + 1]; ++k) {
      const float v = values ? (*values)[k] : 1.0f;
      acc += v * static_cast<float>(x[csr.col_ind()[k]]);
    }
    out[i] = acc;
  }
  return out;
}

std::uint64_t csr_spgemm_sum_f32(const CsrMatrix& a, const CsrMatrix& b) {
  if (a.n() != b.n()) throw ParameterError("spgemm dimension mismatch");
  const std::uint32_t n = a.n();
  const auto& av = a.values();
  const auto& bv = b.values();
  std::vector<float> row(n, 0.0f);
  std::vector<std::uint32_t> touched;
  std::vector<char> seen(n, 0);
  std::uint64_t total = 0;
  for (std::uint32_t i = 0; i < n; ++i) {
    touched.clear();
    for (std::uint32_t p = a.row_ptr()[i]; p < a.row_ptr()[i + 1]; ++p) {
      const std::uint32_t k = a.col_ind()[p];
      const float aik = av ? (*av)[p] : 1.0f;
      for (std::uint32_t q = b.row_ptr()[k]; q < b.row_ptr()[k + 1]; ++q) {
        const std::uint32_t j = b.col_ind()[q];
        if (!seen[j]) {
          seen[j] = 1;
          touched.push_back(j);
        }
        row[j] += aik * (bv ? (*bv)[q] : 1.0f);
      }
    }
    for (std::uint32_t j : touched) {
      total += static_cast<std::uint64_t>(std::llround(row[j]));
      row[j] = 0.0f;
      seen[j] = 0;
    }
  }
  return total;
}

}  // namespace bitblas::oracle
