#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "psden/arith.hpp"

namespace psden {

/// Dense polynomial over Q; coeffs()[i] is the coefficient of x^i.
/// Trailing zeros are always trimmed, so the zero polynomial has no coefficients.
class RationalPoly {
public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rational> coeffs);
    RationalPoly(std::initializer_list<Rational> coeffs);

    static RationalPoly monomial(const Rational& c, std::size_t degree);

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
    Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

    /// Horner evaluation.
    Rational operator()(const Rational& x) const;

    /// p(x + shift), expanded.
    RationalPoly shifted(const Rational& shift) const;

    bool has_integer_coefficients() const;

    RationalPoly& operator+=(const RationalPoly& o);
    RationalPoly& operator-=(const RationalPoly& o);
    RationalPoly& operator*=(const Rational& c);

    friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
    friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
    friend RationalPoly operator*(RationalPoly a, const Rational& c) { return a *= c; }
    friend RationalPoly operator*(const Rational& c, RationalPoly a) { return a *= c; }
    friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
    friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Descending powers, "*" elided: "12x^3 - 12x^2 + x", "x^2 - x + 1/6".
/// Non-integral coefficients of x^k (k >= 1) are parenthesized: "(1/30)x^5".
std::string format_poly(const RationalPoly& p, char var = 'x');

/// Memoized Bernoulli numbers (B_1 = -1/2). Growing to n fills every index <= n.
/// Not synchronized: use one cache per thread.
class BernoulliCache {
public:
    BernoulliCache();

    const Rational& number(std::uint64_t n);
    std::size_t size() const { return numbers_.size(); }

private:
    void grow_to(std::uint64_t n);
    std::vector<Rational> numbers_;
};

Rational bernoulli_number(BernoulliCache& cache, std::uint64_t n);

/// B_n(x) = sum_k C(n,k) B_k x^(n-k).
RationalPoly bernoulli_polynomial(BernoulliCache& cache, std::uint64_t n);

Rational bernoulli_poly_at(BernoulliCache& cache, std::uint64_t n, const Rational& q);

/// B_0(q), ..., B_n(q) in one pass.
std::vector<Rational> bernoulli_poly_values(BernoulliCache& cache, std::uint64_t n, const Rational& q);

}  // namespace psden
