#include "unimat/exact_linalg.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <utility>

namespace unimat {

namespace {

// w.row(i) -= q * w.row(r)
void row_submul(IntMat& w, std::size_t i, std::size_t r, const Int& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < w.cols(); ++c)
        mpz_submul(w(i, c).get_mpz_t(), q.get_mpz_t(), w(r, c).get_mpz_t());
}

void row_swap(IntMat& w, std::size_t i, std::size_t r) {
    if (i == r) return;
    for (std::size_t c = 0; c < w.cols(); ++c)
        mpz_swap(w(i, c).get_mpz_t(), w(r, c).get_mpz_t());
}

void row_negate(IntMat& w, std::size_t i) {
    for (std::size_t c = 0; c < w.cols(); ++c)
        mpz_neg(w(i, c).get_mpz_t(), w(i, c).get_mpz_t());
}

// Quotient rounded to nearest (ties toward floor); keeps remainders small
// during pivot chasing.
Int nearest_quotient(const Int& a, const Int& b) {
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    // r lies in [0, b) for b > 0 and in (b, 0] for b < 0
    if (2 * abs(r) > abs(b)) q += 1;
    return q;
}

// Shared HNF engine. When u is non-null it starts as the identity and
// receives every row operation, so H = U * A on return.
void hnf_inplace(IntMat& w, IntMat* u, std::vector<std::size_t>& pivot_cols) {
    const std::size_t m = w.rows(), n = w.cols();
    pivot_cols.clear();
    std::size_t r = 0;
    for (std::size_t j = 0; j < n && r < m; ++j) {
        // chase the gcd of column j into row r
        for (;;) {
            std::size_t best = m;
            for (std::size_t i = r; i < m; ++i) {
                if (w(i, j) != 0 &&
                    (best == m ||
                     mpz_cmpabs(w(i, j).get_mpz_t(), w(best, j).get_mpz_t()) < 0))
                    best = i;
            }
            if (best == m) break;  // column is zero below r
            row_swap(w, r, best);
            if (u) row_swap(*u, r, best);
            bool clean = true;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (w(i, j) == 0) continue;
                Int q = nearest_quotient(w(i, j), w(r, j));
                row_submul(w, i, r, q);
                if (u) row_submul(*u, i, r, q);
                if (w(i, j) != 0) clean = false;
            }
            if (clean) break;
        }
        if (w(r, j) == 0) continue;  // no pivot in this column
        if (w(r, j) < 0) {
            row_negate(w, r);
            if (u) row_negate(*u, r);
        }
        // reduce entries above the pivot into [0, pivot)
        for (std::size_t i = 0; i < r; ++i) {
            if (w(i, j) == 0) continue;
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), w(i, j).get_mpz_t(), w(r, j).get_mpz_t());
            row_submul(w, i, r, q);
            if (u) row_submul(*u, i, r, q);
        }
        pivot_cols.push_back(j);
        ++r;
    }
}

}  // namespace

HnfResult hnf(const IntMat& a) {
    if (a.is_empty()) throw EmptyInput("hnf: empty matrix");
    HnfResult res{a, {}, 0};
    hnf_inplace(res.H, nullptr, res.pivot_cols);
    res.rank = res.pivot_cols.size();
    return res;
}

HnfTransformResult hnf_with_transform(const IntMat& a) {
    if (a.is_empty()) throw EmptyInput("hnf: empty matrix");
    HnfTransformResult res{a, IntMat::identity(a.rows()), {}, 0};
    hnf_inplace(res.H, &res.U, res.pivot_cols);
    res.rank = res.pivot_cols.size();
    return res;
}

Int det(const IntMat& a) {
    if (a.is_empty()) throw EmptyInput("det: empty matrix");
    if (a.rows() != a.cols()) throw NotSquare("det: matrix is not square");
    const std::size_t n = a.rows();
    IntMat m = a;
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t i = k + 1;
            while (i < n && m(i, k) == 0) ++i;
            if (i == n) return 0;
            row_swap(m, k, i);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    constexpr std::uint64_t kTrialBound = 1 << 20;
    if (n < Int(static_cast<unsigned long>(kTrialBound))) {
        std::uint64_t v = n.get_ui();
        if (v % 2 == 0) return v == 2;
        for (std::uint64_t d = 3; d * d <= v; d += 2)
            if (v % d == 0) return false;
        return true;
    }
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;

    // write n-1 = d * 2^s
    Int nm1 = n - 1;
    unsigned long s = mpz_scan1(nm1.get_mpz_t(), 0);
    Int d = nm1 >> s;
    for (std::uint64_t w : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        Int x;
        Int base(static_cast<unsigned long>(w));
        mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (x == 1 || x == nm1) continue;
        bool witness = true;
        for (unsigned long r = 1; r < s; ++r) {
            x = (x * x) % n;
            if (x == nm1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::size_t rank_mod_p(const IntMat& a, const Int& p) {
    if (a.is_empty()) throw EmptyInput("rank_mod_p: empty matrix");
    if (!is_prime(p)) throw NotPrime("rank_mod_p: modulus is not prime");
    const std::size_t m = a.rows(), n = a.cols();
    IntMat w(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            mpz_mod(w(i, j).get_mpz_t(), a(i, j).get_mpz_t(), p.get_mpz_t());
    std::size_t r = 0;
    for (std::size_t j = 0; j < n && r < m; ++j) {
        std::size_t piv = r;
        while (piv < m && w(piv, j) == 0) ++piv;
        if (piv == m) continue;
        row_swap(w, r, piv);
        Int inv;
        mpz_invert(inv.get_mpz_t(), w(r, j).get_mpz_t(), p.get_mpz_t());
        for (std::size_t i = r + 1; i < m; ++i) {
            if (w(i, j) == 0) continue;
            Int f = (w(i, j) * inv) % p;
            for (std::size_t c = j; c < n; ++c) {
                mpz_submul(w(i, c).get_mpz_t(), f.get_mpz_t(), w(r, c).get_mpz_t());
                mpz_mod(w(i, c).get_mpz_t(), w(i, c).get_mpz_t(), p.get_mpz_t());
            }
        }
        ++r;
    }
    return r;
}

RatVec solve_nonsingular(const IntMat& a, const IntVec& b) {
    if (a.is_empty()) throw EmptyInput("solve_nonsingular: empty matrix");
    if (a.rows() != a.cols()) throw NotSquare("solve_nonsingular: matrix is not square");
    const std::size_t n = a.rows();
    if (b.size() != n) throw BadShape("solve_nonsingular: rhs length mismatch");

    // fraction-free forward elimination on [A | b]
    IntMat m(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j);
        m(i, n) = b[i];
    }
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t i = k + 1;
            while (i < n && m(i, k) == 0) ++i;
            if (i == n) throw SingularMatrix("solve_nonsingular: singular matrix");
            row_swap(m, k, i);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j <= n; ++j) {
                Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    if (m(n - 1, n - 1) == 0) throw SingularMatrix("solve_nonsingular: singular matrix");

    RatVec x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        Rat acc = make_rat(m(ii, n), 1);
        for (std::size_t j = ii + 1; j < n; ++j) acc -= Rat(m(ii, j)) * x[j];
        x[ii] = acc / Rat(m(ii, ii));
        x[ii].canonicalize();
    }
    return x;
}

IntVec left_kernel_primitive(const IntMat& c) {
    if (c.is_empty()) throw EmptyInput("left_kernel_primitive: empty matrix");
    const std::size_t n = c.rows();
    if (n < 2 || c.cols() != n - 1)
        throw BadShape("left_kernel_primitive: need n rows and n-1 columns");
    HnfTransformResult h = hnf_with_transform(c);
    if (h.rank != n - 1)
        throw RankDeficient("left_kernel_primitive: column rank below n-1");
    // Last row of U spans the left kernel, and rows of a unimodular matrix
    // are primitive.
    IntVec u = h.U.row(n - 1);
    for (const Int& e : u) {
        if (e == 0) continue;
        if (e < 0)
            for (Int& x : u) x = -x;
        break;
    }
    return u;
}

IntVec extended_gcd_vector(const IntVec& u) {
    if (u.empty()) throw EmptyInput("extended_gcd_vector: empty vector");
    IntVec b;
    b.reserve(u.size());
    Int g = 0;
    for (const Int& e : u) {
        if (g == 0 && e == 0) {
            b.push_back(0);
            continue;
        }
        Int g2, x, y;
        mpz_gcdext(g2.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), g.get_mpz_t(),
                   e.get_mpz_t());
        // shift (x, y) -> (x + t*e/g2, y - t*g/g2) to the minimal |y|
        if (g != 0 && e != 0) {
            Int gstep = g / g2;
            if (gstep != 0) {
                Int t = nearest_quotient(y, gstep);
                y -= t * gstep;
                x += t * (e / g2);
            }
        }
        for (Int& prev : b) prev *= x;
        b.push_back(y);
        g = g2;
    }
    if (g != 1) throw NotCoprime("extended_gcd_vector: entries have gcd " + g.get_str());
    assert(dot(u, b) == 1);
    return b;
}

bool lattices_equal(const IntMat& a, const IntMat& b) {
    if (a.is_empty() || b.is_empty()) throw EmptyInput("lattices_equal: empty matrix");
    if (a.cols() != b.cols()) throw ColumnMismatch("lattices_equal: column counts differ");
    HnfResult ha = hnf(a), hb = hnf(b);
    if (ha.rank != hb.rank) return false;
    for (std::size_t i = 0; i < ha.rank; ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (ha.H(i, j) != hb.H(i, j)) return false;
    return true;
}

}  // namespace unimat
