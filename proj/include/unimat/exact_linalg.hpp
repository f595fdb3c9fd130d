#pragma once

#include <cstddef>
#include <vector>

#include "unimat/int_mat.hpp"

namespace unimat {

/// Row Hermite normal form of an m x n matrix of rank r:
/// pivot columns i_1 < ... < i_r, H[j, i_j] > 0, zeros left of and below each
/// pivot, entries above a pivot reduced into [0, pivot), zero rows at the
/// bottom. H is the canonical representative of the row lattice.
struct HnfResult {
    IntMat H;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
};

/// HnfResult plus a unimodular U with H = U * A.
struct HnfTransformResult {
    IntMat H;
    IntMat U;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
};

HnfResult hnf(const IntMat& a);
HnfTransformResult hnf_with_transform(const IntMat& a);

/// Exact determinant (fraction-free Bareiss elimination).
Int det(const IntMat& a);

/// Deterministic primality: trial division below 2^20, Miller-Rabin with the
/// fixed witness set {2,...,37} above (exact for all inputs < 3.3e24).
bool is_prime(const Int& n);

/// Rank over Z_p by Gaussian elimination mod p.
std::size_t rank_mod_p(const IntMat& a, const Int& p);

/// Exact rational solution of A x = b for square nonsingular A.
RatVec solve_nonsingular(const IntMat& a, const IntVec& b);

/// The primitive generator u of { x : x C = 0 } for C with n rows, n-1
/// columns and full column rank; sign fixed so the first nonzero entry is
/// positive.
IntVec left_kernel_primitive(const IntMat& c);

/// Some b with dot(u, b) = 1, for u with entry gcd 1. Folds two-term
/// extended Euclid left to right, keeping each fold's cofactor at the
/// minimal absolute representative.
IntVec extended_gcd_vector(const IntVec& u);

/// Test oracle: do A and B generate the same row lattice?
bool lattices_equal(const IntMat& a, const IntMat& b);

}  // namespace unimat
