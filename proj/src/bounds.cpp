#include "unimat/bounds.hpp"

#include <cmath>
#include <cstdio>

namespace unimat {

namespace {

Rat pow_rat(const Rat& base, unsigned long e) {
    Int num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), e);
    return make_rat(num, den);
}

Rat two_thirds_pow(unsigned long e) { return pow_rat(make_rat(2, 3), e); }

}  // namespace

void BoundParams::validate() const {
    if (k < 0 || k >= n) throw InvalidParams("BoundParams: need 0 <= k < n");
    if (s < 0 || s > n - k - 2) throw InvalidParams("BoundParams: need 0 <= s <= n-k-2");
    if (lambda < 2) throw InvalidParams("BoundParams: need lambda >= 2");
}

Rat theorem1_bound(const BoundParams& p) {
    p.validate();
    const unsigned long tail = static_cast<unsigned long>(p.n - p.k - p.s - 1);
    Rat geo = 4 * two_thirds_pow(static_cast<unsigned long>(p.s) + 1) *
              (1 - two_thirds_pow(tail));

    Int lam_s2;
    mpz_pow_ui(lam_s2.get_mpz_t(), p.lambda.get_mpz_t(),
               static_cast<unsigned long>(p.s) + 2);
    Int lam_tail;
    mpz_pow_ui(lam_tail.get_mpz_t(), p.lambda.get_mpz_t(), tail);
    Rat lam_term = make_rat(2 * Int(p.n - p.s) * Int(p.n - p.s), lam_s2) *
                   (1 - make_rat(1, lam_tail));

    return 1 - geo - lam_term;
}

Rat simple_bound(int n, int s, const Int& lambda) {
    if (lambda < 2) throw InvalidParams("simple_bound: need lambda >= 2");
    if (s < 0 || n < 1) throw InvalidParams("simple_bound: need s >= 0 and n >= 1");
    Int lam_s2;
    mpz_pow_ui(lam_s2.get_mpz_t(), lambda.get_mpz_t(), static_cast<unsigned long>(s) + 2);
    return 1 - 4 * two_thirds_pow(static_cast<unsigned long>(s) + 1) -
           make_rat(2 * Int(n - s) * Int(n - s), lam_s2);
}

Rat oversimplified_bound(int s, const Rat& delta) {
    if (s < 0) throw InvalidParams("oversimplified_bound: need s >= 0");
    if (delta <= 0 || delta >= 1) throw InvalidParams("oversimplified_bound: need 0 < delta < 1");
    return 1 - (4 + delta) * two_thirds_pow(static_cast<unsigned long>(s) + 1);
}

long double zeta(int j) {
    if (j < 2) throw InvalidParams("zeta: need j >= 2");
    // For large exponents the direct sum converges immediately.
    if (j > 60) {
        long double s = 1.0L;
        for (int t = 2;; ++t) {
            long double term = powl(static_cast<long double>(t), -j);
            if (term < 1e-25L) break;
            s += term;
        }
        return s;
    }
    // sum_{t<N} t^-j plus Euler-Maclaurin tail at N; the first omitted term
    // is below j^5 N^{-j-5}/30240 < 1e-16 for N = 256, j >= 2.
    constexpr int N = 256;
    long double s = 0.0L;
    for (int t = N - 1; t >= 1; --t) s += powl(static_cast<long double>(t), -j);
    const long double Nl = static_cast<long double>(N);
    const long double nj = powl(Nl, -j);
    s += Nl * nj / (j - 1);                                        // integral
    s += nj / 2;                                                   // f(N)/2
    s += j * nj / (12 * Nl);                                       // B_2 term
    s -= static_cast<long double>(j) * (j + 1) * (j + 2) * nj / (720 * Nl * Nl * Nl);
    return s;
}

long double limit_probability(int n, int s) {
    if (s < 0 || s + 2 > n) throw InvalidParams("limit_probability: need 0 <= s <= n-2");
    long double prod = 1.0L;
    for (int j = s + 2; j <= n; ++j) prod /= zeta(j);
    return prod;
}

std::optional<int> min_usable_s(int n, int k, const Int& lambda) {
    if (k < 0 || k >= n - 1) throw InvalidParams("min_usable_s: need 0 <= k < n-1");
    if (lambda < 2) throw InvalidParams("min_usable_s: need lambda >= 2");
    for (int s = 0; s <= n - k - 2; ++s) {
        Rat v = theorem1_bound({n, k, s, lambda});
        if (bound_usable(v)) return s;
    }
    return std::nullopt;
}

std::string rat_to_decimal(const Rat& v, int places, Rounding mode) {
    if (places < 0) throw InvalidParams("rat_to_decimal: places must be >= 0");
    Int num = v.get_num(), den = v.get_den();
    bool neg = num < 0;
    if (neg) num = -num;
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
    num *= scale;
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (mode == Rounding::half_even) {
        Int twice = 2 * r;
        if (twice > den || (twice == den && mpz_odd_p(q.get_mpz_t()))) q += 1;
    }
    std::string digits = q.get_str();
    std::string out;
    if (places == 0) {
        out = digits;
    } else {
        if (digits.size() <= static_cast<std::size_t>(places))
            digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
        out = digits.substr(0, digits.size() - places) + "." +
              digits.substr(digits.size() - places);
    }
    if (neg && q != 0) out.insert(0, 1, '-');
    return out;
}

std::string real_to_decimal(long double v, int places, Rounding mode) {
    if (places < 0) throw InvalidParams("real_to_decimal: places must be >= 0");
    if (mode == Rounding::trunc) {
        long double scaled = v * powl(10.0L, places);
        long double cut = truncl(scaled);
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.*Lf", places,
                      cut / powl(10.0L, places));
        return buf;
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*Lf", places, v);
    return buf;
}

}  // namespace unimat
