#pragma once

#include <cstddef>

#include "unimat/int_mat.hpp"
#include "unimat/rng.hpp"

namespace unimat {

/// Output of complete_unimodular: |det U| = 1, the first k rows of U equal
/// the input, and max_norm(U) <= n^8 * max(max_norm(A), 1).
struct CompletionResult {
    IntMat U;
    unsigned long restarts = 0;  // outer-loop repeats beyond the first attempt
    Int lambda_used = 0;
};

/// Replaces the last column of a nonsingular A (n >= 2) so that the last
/// diagonal entry of HNF(B) becomes 1; all other columns are untouched,
/// max_norm(B) <= n^2 * max(max_norm(A), 1) and
/// |det B| = |det A| / (last HNF pivot of A).
IntMat determinant_reduce(const IntMat& a);

/// d rounds of determinant_reduce, each followed by a cyclic column shift,
/// then shifted back: the result equals A outside its last d columns and the
/// last d HNF pivots are 1. With d = n the result is unimodular.
IntMat iterated_determinant_reduce(const IntMat& a, std::size_t d);

/// Completes a primitive (n-1) x n matrix to an n x n matrix of determinant
/// +-1 by appending one row.
IntMat complete_one_row(const IntMat& a, const RngSpec& rng);

/// Las Vegas unimodular completion of a primitive k x n matrix (k < n;
/// EmptyMat for k = 0): append uniformly random rows, rectify the trailing
/// columns of the transpose by determinant reduction, retry until the
/// determinant is +-1.
CompletionResult complete_unimodular(const IntMat& a, const RngSpec& rng);

/// First k rows copied from A (or none for EmptyMat), remaining entries
/// i.i.d. uniform on {0, ..., lambda-1}.
IntMat random_extension(const IntMat& a, std::size_t m, const Int& lambda, const RngSpec& rng);
IntMat random_extension(const IntMat& a, std::size_t m, const Int& lambda, Rng& rng);

/// Outer restarts allowed before giving up: 64 * ceil(log2(n+1)).
unsigned long restart_cap(std::size_t n);

}  // namespace unimat
