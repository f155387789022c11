#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <random>

#include "bitblas/b2sr_matrix.hpp"
#include "bitblas/cli.hpp"
#include "bitblas/error.hpp"
#include "bitblas/kernels.hpp"
#include "bitblas/oracle.hpp"

namespace bitblas::cli {

namespace {

using Clock = std::chrono::steady_clock;

template <class F>
double time_ns(F&& f) {
  const auto start = Clock::now();
  f();
  return static_cast<double>(std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count());
}

double mean(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0) / v.size(); }

// Relative agreement for the float32 baseline against the double kernel.
bool close(const DenseVector& a, const DenseVector& b, double rel) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > rel * std::max(1.0, std::abs(b[i]))) return false;
  return true;
}

}  // namespace

std::string to_string(BenchKernel kernel) {
  switch (kernel) {
    case BenchKernel::BmvBinBinBin:
      return "bmv-bbb";
    case BenchKernel::BmvBinBinFull:
      return "bmv-bbf";
    case BenchKernel::BmvBinFullFull:
      return "bmv-bff";
    case BenchKernel::BmmSum:
      return "bmm-sum";
  }
  return "unknown";
}

BenchKernel bench_kernel_from_string(const std::string& name) {
  for (auto k : {BenchKernel::BmvBinBinBin, BenchKernel::BmvBinBinFull, BenchKernel::BmvBinFullFull,
                 BenchKernel::BmmSum})
    if (to_string(k) == name) return k;
  throw ParameterError("unknown kernel '" + name + "' (expected bmv-bbb, bmv-bbf, bmv-bff or bmm-sum)");
}

BenchResult run_bench(const CsrMatrix& csr, BenchKernel kernel, TileDim tile_dim, std::uint32_t reps,
                      std::uint64_t seed, const Exec& exec, bool inject_fault) {
  if (reps < 1) throw ParameterError("reps must be at least 1");
  const std::uint32_t n = csr.n();
  const B2srMatrix a = csr_to_b2sr(csr, tile_dim, exec);
  const CsrMatrix pattern = csr.pattern();

  std::mt19937_64 rng(seed);
  BitVector xb(n);
  DenseVector xb_dense(n, 0.0);
  DenseVector xf(n, 0.0);
  for (std::uint32_t i = 0; i < n; ++i) {
    const std::uint64_t r = rng();
    if (r & 1u) {
      xb.set(i);
      xb_dense[i] = 1.0;
    }
    // Multiples of 1/64 keep the float products exact.
    xf[i] = static_cast<double>((r >> 8) % 65) / 64.0;
  }

  BenchResult result;
  result.kernel = to_string(kernel);
  result.tile_dim = tile_dim;
  result.reps = reps;

  switch (kernel) {
    case BenchKernel::BmvBinBinBin: {
      BitVector got;
      DenseVector ref;
      for (std::uint32_t k = 0; k < reps; ++k) {
        result.times_ns_b2sr.push_back(time_ns([&] { got = bmv_bin_bin_bin(a, xb, exec); }));
        result.times_ns_csr.push_back(time_ns([&] { ref = oracle::csr_spmv_f32(pattern, xb_dense); }));
      }
      if (inject_fault && n > 0) got.set(0, !got.test(0));
      bool match = got.n() == n;
      for (std::uint32_t i = 0; match && i < n; ++i) match = got.test(i) == (ref[i] != 0.0);
      result.outputs_match = match;
      break;
    }
    case BenchKernel::BmvBinBinFull: {
      DenseVector got, ref;
      for (std::uint32_t k = 0; k < reps; ++k) {
        result.times_ns_b2sr.push_back(time_ns([&] { got = bmv_bin_bin_full(a, xb, exec); }));
        result.times_ns_csr.push_back(time_ns([&] { ref = oracle::csr_spmv_f32(pattern, xb_dense); }));
      }
      if (inject_fault && n > 0) got[0] += 1.0;
      result.outputs_match = got == ref;
      break;
    }
    case BenchKernel::BmvBinFullFull: {
      DenseVector got, ref;
      const Semiring arith = Semiring::arithmetic();
      for (std::uint32_t k = 0; k < reps; ++k) {
        result.times_ns_b2sr.push_back(time_ns([&] { got = bmv_bin_full_full(a, xf, arith, {}, exec); }));
        result.times_ns_csr.push_back(time_ns([&] { ref = oracle::csr_spmv_f32(pattern, xf); }));
      }
      if (inject_fault && n > 0) got[0] += 1.0;
      result.outputs_match = close(got, ref, 1e-5);
      break;
    }
    case BenchKernel::BmmSum: {
      std::uint64_t got = 0, ref = 0;
      for (std::uint32_t k = 0; k < reps; ++k) {
        result.times_ns_b2sr.push_back(time_ns([&] { got = bmm_bin_bin_sum(a, a, exec); }));
        result.times_ns_csr.push_back(time_ns([&] { ref = oracle::csr_spgemm_sum_f32(pattern, pattern); }));
      }
      if (inject_fault) got += 1;
      result.outputs_match = got == ref;
      break;
    }
  }
  result.mean_ns_b2sr = mean(result.times_ns_b2sr);
  result.mean_ns_csr = mean(result.times_ns_csr);
  result.ratio = std::max(result.mean_ns_csr, 1.0) / std::max(result.mean_ns_b2sr, 1.0);
  return result;
}

}  // namespace bitblas::cli
