#include "psden/arith.hpp"

namespace psden {

BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
    if (a == 0 || b == 0) {
        throw DomainError("lcm is undefined for a zero argument");
    }
    BigInt l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt c = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        mpz_mul_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(n - k + i));
        mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(i));
    }
    return c;
}

BigInt pow(const BigInt& base, std::uint64_t exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
    return r;
}

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DomainError("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

std::uint64_t to_u64(const BigInt& v) {
    if (v < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64) {
        throw DomainError("value out of range for an index: " + v.get_str());
    }
    static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
    return mpz_get_ui(v.get_mpz_t());
}

}  // namespace psden
