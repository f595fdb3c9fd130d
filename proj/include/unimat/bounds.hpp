#pragma once

#include <optional>
#include <string>

#include "unimat/int_mat.hpp"

namespace unimat {

/// Parameters (n, k, s, lambda) shared by the closed-form bounds:
/// 0 <= k < n, 0 <= s <= n-k-2, lambda >= 2.
struct BoundParams {
    int n = 0;
    int k = 0;
    int s = 0;
    Int lambda = 2;

    void validate() const;
};

/// Exact value of
///   1 - 4(2/3)^{s+1} (1 - (2/3)^{n-k-s-1})
///     - (2(n-s)^2 / lambda^{s+2}) (1 - 1/lambda^{n-k-s-1}).
/// May fall outside [0, 1]; usability is the caller's call.
Rat theorem1_bound(const BoundParams& p);

/// Exact value of 1 - 4(2/3)^{s+1} - 2(n-s)^2/lambda^{s+2}; never exceeds
/// theorem1_bound on shared parameters.
Rat simple_bound(int n, int s, const Int& lambda);

/// 1 - (4 + delta)(2/3)^{s+1} for 0 < delta < 1.
Rat oversimplified_bound(int s, const Rat& delta);

/// True iff a bound value is usable, i.e. strictly between 0 and 1.
inline bool bound_usable(const Rat& v) { return v > 0 && v < 1; }

/// Riemann zeta at integer j >= 2, absolute error below 1e-13
/// (truncated sum plus Euler-Maclaurin tail).
long double zeta(int j);

/// prod_{j=s+2}^{n} 1/zeta(j); good to ~1e-11 absolute.
long double limit_probability(int n, int s);

/// Smallest s in [0, n-k-2] whose theorem1_bound value lies in (0, 1), if any.
std::optional<int> min_usable_s(int n, int k, const Int& lambda);

enum class Rounding {
    half_even,  // banker's rounding
    trunc,      // toward zero
};

/// Fixed-point decimal rendering of an exact rational.
std::string rat_to_decimal(const Rat& v, int places, Rounding mode = Rounding::half_even);

/// Fixed-point rendering of a long double; trunc mode assumes the value is
/// not within ~1e-9 of a grid point.
std::string real_to_decimal(long double v, int places, Rounding mode = Rounding::half_even);

}  // namespace unimat
