#pragma once

#include <cstdint>
#include <span>

#include "bitblas/b2sr_matrix.hpp"
#include "bitblas/parallel.hpp"
#include "bitblas/semiring.hpp"
#include "bitblas/vectors.hpp"

namespace bitblas {

// Binarized matrix-vector (BMV) and matrix-matrix (BMM) kernels over B2SR.
//
// Scheme names give the operand precisions: bin_bin_full takes a 1-bit matrix
// and a 1-bit vector and produces a full-precision vector. Every kernel works
// tile-row by tile-row; one worker owns the output slice of each tile-row.
//
// The masked variants take a KEEP mask (set bit = output allowed). The mask is
// applied when the result is stored; positions with a cleared keep bit hold the
// additive identity. Callers wanting "not visited" pass ~visited.

/// out[i] = OR_j A[i,j] & x[j].
BitVector bmv_bin_bin_bin(const B2srMatrix& a, const BitVector& x, const Exec& exec = {});

/// out[i] = |{j : A[i,j] = 1 and x[j] = 1}|, by popcount(rowWord & xWord).
DenseVector bmv_bin_bin_full(const B2srMatrix& a, const BitVector& x, const Exec& exec = {});

/// out[i] = add-reduce over {j : A[i,j] = 1} of term(j), starting from the
/// semiring identity, in ascending j. term(j) is s.edge_term(x[j]), or
/// x[j] / scale[j] for Arithmetic with a scale vector. An empty span means no
/// scale. Boolean is rejected (use the bin-bin schemes); a zero scale entry on
/// a column that holds an edge raises DivisionByZeroError.
DenseVector bmv_bin_full_full(const B2srMatrix& a, const DenseVector& x, const Semiring& s,
                              std::span<const double> scale = {}, const Exec& exec = {});

BitVector bmv_bin_bin_bin_masked(const B2srMatrix& a, const BitVector& x, const BitVector& keep,
                                 const Exec& exec = {});
DenseVector bmv_bin_bin_full_masked(const B2srMatrix& a, const BitVector& x, const BitVector& keep,
                                    const Exec& exec = {});
DenseVector bmv_bin_full_full_masked(const B2srMatrix& a, const DenseVector& x, const Semiring& s,
                                     const BitVector& keep, std::span<const double> scale = {},
                                     const Exec& exec = {});

/// Sum of all entries of the integer product A * B of two 0/1 matrices.
/// B is consumed in the orientation given: pass b2sr_transpose(X) for A * X^T.
std::uint64_t bmm_bin_bin_sum(const B2srMatrix& a, const B2srMatrix& b, const Exec& exec = {});

/// Sum of (A * B)[i,j] over the set bits (i,j) of `mask`.
std::uint64_t bmm_bin_bin_sum_masked(const B2srMatrix& a, const B2srMatrix& b,
                                     const B2srMatrix& mask, const Exec& exec = {});

}  // namespace bitblas
