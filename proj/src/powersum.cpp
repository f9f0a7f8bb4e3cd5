#include "psden/powersum.hpp"

#include <string>

#include "psden/denom.hpp"
#include "psden/digits.hpp"

namespace psden {

ProgressionSpec::ProgressionSpec(BigInt m, BigInt r, std::uint64_t n) : m_(std::move(m)), r_(std::move(r)), n_(n) {
    if (m_ < 1) throw DomainError("common difference m must be >= 1, got " + m_.get_str());
    if (r_ < 0) throw DomainError("initial term r must be >= 0, got " + r_.get_str());
    if (n_ < 1) throw DomainError("exponent n must be >= 1");
}

BigInt power_sum_naive(const ProgressionSpec& spec, std::uint64_t x) {
    BigInt sum = 0;
    BigInt term = spec.r();
    for (std::uint64_t k = 0; k < x; ++k, term += spec.m()) sum += pow(term, spec.n());
    return sum;
}

RationalPoly power_sum_poly(BernoulliCache& cache, const ProgressionSpec& spec) {
    const std::uint64_t n = spec.n();
    const std::vector<Rational> shifted = bernoulli_poly_values(cache, n, make_rational(spec.r(), spec.m()));
    const Rational scale = make_rational(pow(spec.m(), n), BigInt(static_cast<unsigned long>(n + 1)));

    std::vector<Rational> c(n + 2, Rational(0));
    BigInt binom = 1;  // C(n+1, k)
    for (std::uint64_t k = 0; k <= n; ++k) {
        c[n + 1 - k] = scale * binom * shifted[k];
        binom *= static_cast<unsigned long>(n + 1 - k);
        mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(k + 1));
    }
    return RationalPoly(std::move(c));
}

BigInt power_sum_denominator(const ProgressionSpec& spec) {
    const std::uint64_t n = spec.n();
    // (n+1)/gcd(n+1, m^n): strip common factors of m until coprime. Every p^e || n+1
    // has e < n, so this equals the gcd with m^n without forming m^n.
    BigInt left = static_cast<unsigned long>(n + 1);
    for (BigInt g = gcd(left, spec.m()); g != 1; g = gcd(left, spec.m())) left /= g;

    const BigInt dd = DD_formula(n + 1).value();
    return left * (dd / gcd(dd, spec.m()));
}

bool is_integral(const ProgressionSpec& spec) {
    const BigInt db = DB_formula(spec.n()).value();
    return mpz_divisible_p(spec.m().get_mpz_t(), db.get_mpz_t()) != 0;
}

RationalPoly power_sum_difference(BernoulliCache& cache, const BigInt& m, const BigInt& r1, const BigInt& r2,
                                  std::uint64_t n) {
    RationalPoly diff =
        power_sum_poly(cache, ProgressionSpec(m, r1, n)) - power_sum_poly(cache, ProgressionSpec(m, r2, n));
    if (!diff.has_integer_coefficients()) {
        throw TheoremViolation("SP difference not integral for m=" + m.get_str() + ", r1=" + r1.get_str() +
                               ", r2=" + r2.get_str() + ", n=" + std::to_string(n));
    }
    return diff;
}

AMInteger am_integer(BernoulliCache& cache, const BigInt& m, const BigInt& r, std::uint64_t n) {
    if (m < 1) throw DomainError("m must be >= 1, got " + m.get_str());
    if (n < 1) throw DomainError("n must be >= 1");
    cache.number(n);

    Rational sum = 0;
    BigInt binom = 1;  // C(n, k)
    BigInt m_pow = 1;  // m^k
    std::vector<BigInt> r_pow(n + 1);
    r_pow[0] = 1;
    for (std::uint64_t i = 1; i <= n; ++i) r_pow[i] = r_pow[i - 1] * r;
    for (std::uint64_t k = 0; k < n; ++k) {
        const Rational& b = cache.number(k);
        if (b != 0) sum += b * (binom * m_pow * r_pow[n - k]);
        m_pow *= m;
        binom *= static_cast<unsigned long>(n - k);
        mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(k + 1));
    }
    if (!is_integer(sum)) {
        throw TheoremViolation("m^n(B_n(r/m) - B_n) not integral for m=" + m.get_str() + ", r=" + r.get_str() +
                               ", n=" + std::to_string(n) + ": " + sum.get_str());
    }
    return AMInteger{m, r, n, sum.get_num()};
}

bool am_congruence_check(BernoulliCache& cache, const BigInt& m, const BigInt& r, std::uint64_t n, const BigInt& p,
                         std::uint64_t e) {
    if (!is_prime(p)) throw DomainError("p must be prime, got " + p.get_str());
    if (m < 1 || n < 1) throw DomainError("m and n must be >= 1");
    if (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) throw DomainError("p must not divide m");
    const BigInt vp = p_valuation(p, BigInt(static_cast<unsigned long>(n)));
    if (BigInt(static_cast<unsigned long>(e)) > vp) {
        throw DomainError("e = " + std::to_string(e) + " exceeds v_p(n) = " + vp.get_str());
    }
    const BigInt modulus = pow(p, e);
    const BigInt value = am_integer(cache, m, r, n).value;
    return mpz_divisible_p(value.get_mpz_t(), modulus.get_mpz_t()) != 0;
}

Rational c_coeff(std::uint64_t n, std::uint64_t k) {
    if (k < 1 || k > n) {
        throw DomainError("c_{n,k} needs 1 <= k <= n, got n=" + std::to_string(n) + ", k=" + std::to_string(k));
    }
    return make_rational(binomial(n, k - 1), BigInt(static_cast<unsigned long>(k)));
}

}  // namespace psden
