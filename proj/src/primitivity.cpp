#include "unimat/primitivity.hpp"

#include <numeric>

#include "unimat/exact_linalg.hpp"

namespace unimat {

namespace {

void check_shape(const IntMat& a) {
    if (a.is_empty()) throw EmptyInput("primitivity: empty matrix");
    if (a.rows() > a.cols()) throw BadShape("primitivity: need k <= n");
}

// Pivot values of HNF(A^T), with early exit: primitive iff every one of the
// k columns of A^T gets a pivot equal to 1. Skips the off-pivot reduction
// that the full HNF performs, since pivots alone decide the answer.
bool primitive_via_pivots(const IntMat& a) {
    const std::size_t k = a.rows(), n = a.cols();
    IntMat w = transpose(a);  // n x k
    std::size_t r = 0;
    for (std::size_t j = 0; j < k; ++j) {
        for (;;) {
            std::size_t best = n;
            for (std::size_t i = r; i < n; ++i) {
                if (w(i, j) != 0 &&
                    (best == n ||
                     mpz_cmpabs(w(i, j).get_mpz_t(), w(best, j).get_mpz_t()) < 0))
                    best = i;
            }
            if (best == n) return false;  // rank < k
            if (best != r)
                for (std::size_t c = j; c < k; ++c)
                    mpz_swap(w(r, c).get_mpz_t(), w(best, c).get_mpz_t());
            bool clean = true;
            for (std::size_t i = r + 1; i < n; ++i) {
                if (w(i, j) == 0) continue;
                Int q, rem;
                mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), w(i, j).get_mpz_t(),
                            w(r, j).get_mpz_t());
                if (2 * abs(rem) > abs(w(r, j))) q += 1;
                for (std::size_t c = j; c < k; ++c)
                    mpz_submul(w(i, c).get_mpz_t(), q.get_mpz_t(), w(r, c).get_mpz_t());
                if (w(i, j) != 0) clean = false;
            }
            if (clean) break;
        }
        if (mpz_cmpabs_ui(w(r, j).get_mpz_t(), 1) != 0) return false;  // pivot > 1
        ++r;
    }
    return true;
}

}  // namespace

bool is_primitive(const IntMat& a) {
    check_shape(a);
    return primitive_via_pivots(a);
}

bool is_primitive_minor_oracle(const IntMat& a) {
    check_shape(a);
    if (a.cols() > 10) throw TooLarge("is_primitive_minor_oracle: n > 10");
    const std::size_t k = a.rows(), n = a.cols();

    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    Int g = 0;
    for (;;) {
        IntMat sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) sub(i, j) = a(i, idx[j]);
        Int d = det(sub);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
        if (g == 1) return true;

        // next k-subset of {0..n-1} in lexicographic order
        std::size_t pos = k;
        while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
        if (pos == 0) break;
        ++idx[pos - 1];
        for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
    return false;  // g == 0 (rank deficient) or g >= 2
}

WitnessResult unprimitive_witness(const IntMat& a) {
    check_shape(a);
    if (a.cols() > 10) throw TooLarge("unprimitive_witness: n > 10");
    const std::size_t k = a.rows(), n = a.cols();

    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    Int g = 0;
    for (;;) {
        IntMat sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) sub(i, j) = a(i, idx[j]);
        Int d = det(sub);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
        if (g == 1) return {WitnessResult::Kind::none, 0};

        std::size_t pos = k;
        while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
        if (pos == 0) break;
        ++idx[pos - 1];
        for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (g == 0) return {WitnessResult::Kind::rank_deficient_over_q, 0};

    // smallest prime factor of g
    if (mpz_even_p(g.get_mpz_t())) return {WitnessResult::Kind::prime, 2};
    for (Int d = 3; d * d <= g && d < (1 << 20); d += 2)
        if (mpz_divisible_p(g.get_mpz_t(), d.get_mpz_t()))
            return {WitnessResult::Kind::prime, d};
    if (is_prime(g)) return {WitnessResult::Kind::prime, g};
    // no factor below 2^20 and composite: out of reach at n <= 10 desk scale
    for (Int d = 1 << 20; ; d += 1)
        if (mpz_divisible_p(g.get_mpz_t(), d.get_mpz_t()))
            return {WitnessResult::Kind::prime, d};
}

}  // namespace unimat
