#pragma once

#include "unimat/int_mat.hpp"

namespace unimat {

/// True iff the k x n matrix (k <= n) is primitive, i.e. its rows extend to
/// a basis of Z^n; decided through HNF(A^T) == [I_k; 0].
bool is_primitive(const IntMat& a);

/// Independent small-instance oracle (n <= 10): full rational rank and
/// gcd of all k x k minors equal to 1. Enumerates column subsets
/// lexicographically with early exit once the running gcd hits 1.
bool is_primitive_minor_oracle(const IntMat& a);

struct WitnessResult {
    enum class Kind { none, prime, rank_deficient_over_q };
    Kind kind = Kind::none;
    Int p;  // set when kind == prime
};

/// Small-instance oracle: for a non-primitive full-rank matrix, a prime p
/// dividing every maximal minor (so rank drops over Z_p).
WitnessResult unprimitive_witness(const IntMat& a);

}  // namespace unimat
