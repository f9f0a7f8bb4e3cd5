#pragma once

#include <cstdint>

#include "psden/arith.hpp"
#include "psden/bernoulli.hpp"

namespace psden {

/// The progression r, m + r, 2m + r, ... raised to the n-th power.
/// Invariants: m >= 1, r >= 0, n >= 1 (checked on construction).
class ProgressionSpec {
public:
    ProgressionSpec(BigInt m, BigInt r, std::uint64_t n);

    const BigInt& m() const { return m_; }
    const BigInt& r() const { return r_; }
    std::uint64_t n() const { return n_; }

private:
    BigInt m_;
    BigInt r_;
    std::uint64_t n_;
};

/// sum_{k=0}^{x-1} (k*m + r)^n by direct summation.
BigInt power_sum_naive(const ProgressionSpec& spec, std::uint64_t x);

/// SP(x) = m^n/(n+1) * (B_{n+1}(x + r/m) - B_{n+1}(r/m)), expanded with the
/// Appell relation at y = r/m. Degree n+1, zero constant term.
RationalPoly power_sum_poly(BernoulliCache& cache, const ProgressionSpec& spec);

/// Closed form (n+1)/gcd(n+1, m^n) * DD_{n+1}/gcd(DD_{n+1}, m). Independent of r.
BigInt power_sum_denominator(const ProgressionSpec& spec);

/// True iff DB_n divides m, i.e. SP has integer coefficients.
bool is_integral(const ProgressionSpec& spec);

/// SP_{m,r1} - SP_{m,r2}; always in Z[x], a non-integral coefficient throws TheoremViolation.
RationalPoly power_sum_difference(BernoulliCache& cache, const BigInt& m, const BigInt& r1, const BigInt& r2,
                                  std::uint64_t n);

/// m^n (B_n(r/m) - B_n), an integer for every integer r.
struct AMInteger {
    BigInt m;
    BigInt r;
    std::uint64_t n;
    BigInt value;
};

/// Evaluates sum_{k<n} C(n,k) B_k m^k r^(n-k). Requires m >= 1, n >= 1; r is any integer.
/// A non-integral result throws TheoremViolation.
AMInteger am_integer(BernoulliCache& cache, const BigInt& m, const BigInt& r, std::uint64_t n);

/// Whether p^e divides am_integer(m, r, n). Requires p prime, p not dividing m,
/// and 0 <= e <= v_p(n); violations throw DomainError.
bool am_congruence_check(BernoulliCache& cache, const BigInt& m, const BigInt& r, std::uint64_t n, const BigInt& p,
                         std::uint64_t e);

/// c_{n,k} = C(n, k-1) / k for 1 <= k <= n.
Rational c_coeff(std::uint64_t n, std::uint64_t k);

}  // namespace psden
