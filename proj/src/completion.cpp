#include "unimat/completion.hpp"

#include <cassert>
#include <cmath>
#include <utility>

#include "unimat/exact_linalg.hpp"
#include "unimat/primitivity.hpp"

namespace unimat {

namespace {

// Entry-wise rounding of an exact rational, half away from zero.
Int round_half_away(const Rat& x) {
    const Int &num = x.get_num(), &den = x.get_den();  // den > 0
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    Int twice = 2 * r;
    if (twice > den || (twice == den && num >= 0)) q += 1;
    return q;
}

void swap_rows(IntMat& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < m.cols(); ++c)
        mpz_swap(m(a, c).get_mpz_t(), m(b, c).get_mpz_t());
}

// Columns shifted right by one: (b_1, ..., b_n) -> (b_n, b_1, ..., b_{n-1}).
// Equals B * P for the cyclic permutation P used by the completion loop.
IntMat rotate_cols_right(const IntMat& m) {
    IntMat out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out(i, 0) = m(i, m.cols() - 1);
        for (std::size_t j = 1; j < m.cols(); ++j) out(i, j) = m(i, j - 1);
    }
    return out;
}

IntMat rotate_cols_left(const IntMat& m, std::size_t shift) {
    IntMat out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = m(i, (j + shift) % m.cols());
    return out;
}

// Core of Algorithm 1 on a matrix already known nonsingular. When the last
// entry of the kernel vector is zero the principal submatrix is singular and
// the rounding step is undefined; in that case the row carrying the largest
// kernel entry is swapped into the last position first and the swap is
// undone afterwards (all postconditions are invariant under row swaps).
IntMat determinant_reduce_nonsingular(const IntMat& a) {
    const std::size_t n = a.rows();

    IntMat c(n, n - 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j + 1 < n; ++j) c(i, j) = a(i, j);
    IntVec u = left_kernel_primitive(c);
    IntVec b = extended_gcd_vector(u);

    std::size_t swapped = n - 1;
    if (u[n - 1] == 0) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < n; ++i)
            if (mpz_cmpabs(u[i].get_mpz_t(), u[best].get_mpz_t()) > 0) best = i;
        swapped = best;
    }
    IntMat w = a;
    if (swapped != n - 1) {
        swap_rows(w, swapped, n - 1);
        std::swap(u[swapped], u[n - 1]);
        std::swap(b[swapped], b[n - 1]);
    }

    IntMat principal(n - 1, n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = 0; j + 1 < n; ++j) principal(i, j) = w(i, j);
    IntVec b_top(b.begin(), b.end() - 1);
    RatVec qr = solve_nonsingular(principal, b_top);

    IntVec q(n, 0);
    for (std::size_t i = 0; i + 1 < n; ++i) q[i] = round_half_away(qr[i]);

    // new last column: b - A q
    IntVec col(n);
    for (std::size_t i = 0; i < n; ++i) {
        Int acc = b[i];
        for (std::size_t j = 0; j + 1 < n; ++j)
            mpz_submul(acc.get_mpz_t(), w(i, j).get_mpz_t(), q[j].get_mpz_t());
        col[i] = acc;
    }
    assert(dot(u, col) == 1);

    for (std::size_t i = 0; i < n; ++i) w(i, n - 1) = col[i];
    if (swapped != n - 1) swap_rows(w, swapped, n - 1);
    return w;
}

Int norm_or_zero(const IntMat& a) { return a.is_empty() ? Int(0) : max_norm(a); }

// ceil(3 (n-3)^{2/5}) for n >= 5, computed exactly: the smallest integer c
// with c^5 >= 243 (n-3)^2.
Int lambda_floor(std::size_t n) {
    Int rhs = 243 * Int(static_cast<unsigned long>(n - 3)) *
              Int(static_cast<unsigned long>(n - 3));
    Int c = 1;
    while (c * c * c * c * c < rhs) ++c;
    return c;
}

// [A^T | n-k random columns with entries below lambda]
IntMat transpose_with_random_cols(const IntMat& a, std::size_t n, const Int& lambda,
                                  Rng& rng) {
    const std::size_t k = a.rows();
    IntMat b(n, n);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j) b(j, i) = a(i, j);
    for (std::size_t j = k; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) b(i, j) = rng.below(lambda);
    return b;
}

}  // namespace

unsigned long restart_cap(std::size_t n) {
    unsigned long bits = 0;
    while ((n + 1) >> bits) ++bits;  // bits = floor(log2(n+1)) + 1 = ceil(log2(n+2))
    unsigned long ceil_log = ((n + 1) & (n)) == 0 ? bits - 1 : bits;  // exact power of two?
    return 64 * (ceil_log == 0 ? 1 : ceil_log);
}

IntMat determinant_reduce(const IntMat& a) {
    if (a.is_empty()) throw EmptyInput("determinant_reduce: empty matrix");
    if (a.rows() != a.cols()) throw NotSquare("determinant_reduce: matrix is not square");
    if (a.rows() < 2) throw BadShape("determinant_reduce: need n >= 2");
    if (det(a) == 0) throw SingularMatrix("determinant_reduce: singular matrix");
    return determinant_reduce_nonsingular(a);
}

IntMat iterated_determinant_reduce(const IntMat& a, std::size_t d) {
    if (a.is_empty()) throw EmptyInput("iterated_determinant_reduce: empty matrix");
    if (a.rows() != a.cols()) throw NotSquare("iterated_determinant_reduce: not square");
    if (a.rows() < 2) throw BadShape("iterated_determinant_reduce: need n >= 2");
    if (d < 1 || d > a.rows())
        throw InvalidParams("iterated_determinant_reduce: need 1 <= d <= n");
    if (det(a) == 0) throw SingularMatrix("iterated_determinant_reduce: singular matrix");

    IntMat b = a;
    for (std::size_t round = 0; round < d; ++round)
        b = rotate_cols_right(determinant_reduce_nonsingular(b));
    return rotate_cols_left(b, d);
}

IntMat random_extension(const IntMat& a, std::size_t m, const Int& lambda, Rng& rng) {
    const std::size_t k = a.rows();
    if (m < k) throw BadShape("random_extension: target rows below k");
    if (m > a.cols()) throw BadShape("random_extension: target rows above n");
    if (lambda < 2) throw InvalidParams("random_extension: need lambda >= 2");
    if (m == 0) return a;
    IntMat out(m, a.cols());
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t i = k; i < m; ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = rng.below(lambda);
    return out;
}

IntMat random_extension(const IntMat& a, std::size_t m, const Int& lambda,
                        const RngSpec& spec) {
    Rng rng(spec);
    return random_extension(a, m, lambda, rng);
}

IntMat complete_one_row(const IntMat& a, const RngSpec& spec) {
    if (a.is_empty()) throw EmptyInput("complete_one_row: empty matrix");
    const std::size_t n = a.cols();
    if (a.rows() + 1 != n) throw BadShape("complete_one_row: need (n-1) x n input");
    if (!is_primitive(a)) throw NotPrimitive("complete_one_row: input is not primitive");

    Rng rng(spec);
    Int lambda = norm_or_zero(a);
    if (lambda < 2) lambda = 2;
    const unsigned long cap = restart_cap(n);
    for (unsigned long attempt = 0; attempt <= cap; ++attempt) {
        IntMat b = transpose_with_random_cols(a, n, lambda, rng);
        if (det(b) == 0) continue;
        return transpose(determinant_reduce_nonsingular(b));
    }
    throw RestartLimitExceeded("complete_one_row: restart cap reached");
}

CompletionResult complete_unimodular(const IntMat& a, const RngSpec& spec) {
    const std::size_t k = a.rows(), n = a.cols();
    if (k >= n) throw BadShape("complete_unimodular: need k < n");
    if (k > 0 && !is_primitive(a))
        throw NotPrimitive("complete_unimodular: input is not primitive");

    Rng rng(spec);
    if (n == 1) {
        // k must be 0; the only unimodular 1 x 1 completions are (+-1)
        CompletionResult res{IntMat::identity(1), 0, 2};
        return res;
    }

    const unsigned long cap = restart_cap(n);
    unsigned long restarts = 0;

    if (n - k <= 4 || n < 5) {
        // Too few free columns for the randomized rectification: run the
        // deterministic path, reducing exactly the appended columns.
        Int lambda = norm_or_zero(a);
        if (lambda < 2) lambda = 2;
        for (;;) {
            IntMat b = transpose_with_random_cols(a, n, lambda, rng);
            if (det(b) != 0) {
                IntMat u = transpose(iterated_determinant_reduce(b, n - k));
                return CompletionResult{std::move(u), restarts, lambda};
            }
            if (++restarts > cap)
                throw RestartLimitExceeded("complete_unimodular: restart cap reached");
        }
    }

    Int lambda = norm_or_zero(a);
    Int floor_val = lambda_floor(n);
    if (floor_val > lambda) lambda = floor_val;
    if (lambda < 2) lambda = 2;

    for (;;) {
        IntMat b = transpose_with_random_cols(a, n, lambda, rng);
        if (det(b) != 0) {
            for (int round = 0; round < 4; ++round)
                b = rotate_cols_right(determinant_reduce_nonsingular(b));
            Int d = det(b);
            if (d == 1 || d == -1) {
                IntMat u = transpose(rotate_cols_left(b, 4));
                return CompletionResult{std::move(u), restarts, lambda};
            }
        }
        if (++restarts > cap)
            throw RestartLimitExceeded("complete_unimodular: restart cap reached");
    }
}

}  // namespace unimat
