#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace psden {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Bad input: out-of-domain arguments, wrong parity, malformed specs.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A proven identity failed to hold. Always an implementation bug, never bad input.
class TheoremViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// gcd(0, x) = |x|.
BigInt gcd(const BigInt& a, const BigInt& b);

/// Throws DomainError if either argument is zero.
BigInt lcm(const BigInt& a, const BigInt& b);

/// C(n, k) by the running product; 0 when k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);

BigInt pow(const BigInt& base, std::uint64_t exp);

/// Builds a canonical rational num/den; den must be nonzero.
Rational make_rational(const BigInt& num, const BigInt& den);

bool is_integer(const Rational& q);

std::string to_string(const BigInt& v);
std::string to_string(const Rational& q);

/// Narrowing conversion for index-like values; throws DomainError if v does not fit.
std::uint64_t to_u64(const BigInt& v);

}  // namespace psden
