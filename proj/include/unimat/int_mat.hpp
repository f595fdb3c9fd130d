#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "unimat/errors.hpp"

namespace unimat {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

/// Canonical rational (gcd(|num|, den) = 1, den > 0).
inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw InvalidParams("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// Dense row-major matrix of arbitrary-precision integers.
///
/// A 0-row matrix with cols >= 1 is the EmptyMat marker: it is a legal input
/// only for unimodular completion with k = 0 and for random_extension; every
/// other operation rejects it with EmptyInput.
class IntMat {
public:
    IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {
        if (cols == 0) throw BadShape("IntMat: cols must be >= 1");
    }

    static IntMat empty(std::size_t cols) { return IntMat(0, cols); }

    static IntMat identity(std::size_t n) {
        IntMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    // Test/CLI convenience; machine-int entries only.
    static IntMat from_rows(std::initializer_list<std::initializer_list<long>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_empty() const { return rows_ == 0; }

    const Int& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    Int& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }

    IntVec row(std::size_t i) const {
        return IntVec(e_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                      e_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }
    IntVec col(std::size_t j) const {
        IntVec c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    friend bool operator==(const IntMat& a, const IntMat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Int> e_;
};

IntMat transpose(const IntMat& a);
IntMat mul(const IntMat& a, const IntMat& b);
Int dot(const IntVec& a, const IntVec& b);

/// max_{i,j} |a_{i,j}|.
Int max_norm(const IntMat& a);

/// Reads the plain text format, or the JSON alternative when the first
/// non-whitespace byte is '{'.
IntMat parse_matrix(std::string_view text);

/// Writes the plain text format; inverse of parse_matrix.
std::string serialize_matrix(const IntMat& a);

std::string to_string(const IntVec& v);

}  // namespace unimat
