#include <doctest.h>

#include <vector>

#include "psden/bernoulli.hpp"
#include "psden/digits.hpp"

using namespace psden;

namespace {

Rational q(long num, long den = 1) { return make_rational(num, den); }

// Akiyama-Tanigawa: an independent route to B_n (it yields B_1 = +1/2).
std::vector<Rational> akiyama_tanigawa(std::size_t count) {
    std::vector<Rational> out;
    std::vector<Rational> a(count);
    for (std::size_t m = 0; m < count; ++m) {
        a[m] = q(1, static_cast<long>(m + 1));
        for (std::size_t j = m; j >= 1; --j) a[j - 1] = Rational(static_cast<long>(j)) * (a[j - 1] - a[j]);
        out.push_back(a[0]);
    }
    out[1] = -out[1];
    return out;
}

// Rational p-adic valuation.
long valuation(long p, const Rational& x) {
    return p_valuation(BigInt(p), x.get_num()).get_si() - p_valuation(BigInt(p), x.get_den()).get_si();
}

}  // namespace

TEST_CASE("bernoulli numbers") {
    BernoulliCache cache;
    CHECK(bernoulli_number(cache, 0) == 1);
    CHECK(bernoulli_number(cache, 1) == q(-1, 2));
    CHECK(bernoulli_number(cache, 2) == q(1, 6));
    CHECK(bernoulli_number(cache, 4) == q(-1, 30));
    CHECK(bernoulli_number(cache, 6) == q(1, 42));
    CHECK(bernoulli_number(cache, 3) == 0);
    CHECK(bernoulli_number(cache, 12) == q(-691, 2730));
    for (std::uint64_t n = 3; n <= 99; n += 2) CHECK(bernoulli_number(cache, n) == 0);
}

TEST_CASE("bernoulli numbers agree with Akiyama-Tanigawa") {
    BernoulliCache cache;
    const auto oracle = akiyama_tanigawa(80);
    for (std::size_t n = 0; n < oracle.size(); ++n) CHECK(bernoulli_number(cache, n) == oracle[n]);
}

TEST_CASE("cache grows monotonically and fills every index") {
    BernoulliCache cache;
    CHECK(cache.size() == 1);
    cache.number(10);
    CHECK(cache.size() == 11);
    cache.number(4);
    CHECK(cache.size() == 11);
    BernoulliCache fresh;
    CHECK(fresh.number(10) == cache.number(10));
}

TEST_CASE("defining recurrence") {
    BernoulliCache cache;
    for (std::uint64_t n = 2; n <= 120; ++n) {
        Rational sum = 0;
        for (std::uint64_t k = 0; k < n; ++k) sum += binomial(n, k) * cache.number(k);
        CHECK(sum == 0);
    }
}

TEST_CASE("von Staudt-Clausen") {
    BernoulliCache cache;
    for (std::uint64_t n = 2; n <= 400; n += 2) {
        BigInt expected = 1;
        for (std::uint64_t p : primes_up_to(n + 1)) {
            if (n % (p - 1) == 0) expected *= static_cast<unsigned long>(p);
        }
        REQUIRE(cache.number(n).get_den() == expected);
    }
}

TEST_CASE("divided Bernoulli valuation") {
    BernoulliCache cache;
    for (long n = 2; n <= 200; n += 2) {
        const Rational divided = cache.number(static_cast<std::uint64_t>(n)) / Rational(n);
        for (std::uint64_t p : primes_up_to(50)) {
            const long v = valuation(static_cast<long>(p), divided);
            if (n % static_cast<long>(p - 1) == 0) {
                const long vn = static_cast<long>(p_valuation(p, static_cast<std::uint64_t>(n)));
                CHECK(v == -(vn + 1));
            } else {
                CHECK(v >= 0);
            }
        }
    }
}

TEST_CASE("bernoulli polynomials") {
    BernoulliCache cache;
    CHECK(bernoulli_polynomial(cache, 0) == RationalPoly{1});
    CHECK(bernoulli_polynomial(cache, 1) == RationalPoly{q(-1, 2), 1});
    CHECK(bernoulli_polynomial(cache, 2) == RationalPoly{q(1, 6), -1, 1});
    for (std::uint64_t n = 0; n <= 40; ++n) {
        const RationalPoly b = bernoulli_polynomial(cache, n);
        CHECK(b.degree() == static_cast<long>(n));
        CHECK(b.leading() == 1);
        CHECK(b.coeff(0) == cache.number(n));
    }
}

TEST_CASE("bernoulli_poly_at") {
    BernoulliCache cache;
    CHECK(bernoulli_poly_at(cache, 2, q(1, 2)) == q(-1, 12));
    for (std::uint64_t n = 0; n <= 30; ++n) {
        CHECK(bernoulli_poly_at(cache, n, 0) == cache.number(n));
        if (n != 1) CHECK(bernoulli_poly_at(cache, n, 1) == cache.number(n));
    }
    CHECK(bernoulli_poly_at(cache, 1, 1) == q(1, 2));

    for (const Rational& y : {q(0), q(1, 3), q(-5, 7), q(9, 2)}) {
        const auto values = bernoulli_poly_values(cache, 25, y);
        for (std::uint64_t n = 0; n <= 25; ++n) CHECK(values[n] == bernoulli_poly_at(cache, n, y));
    }
}

TEST_CASE("Appell relation") {
    BernoulliCache cache;
    for (const Rational& y : {q(1), q(1, 2), q(-2)}) {
        for (std::uint64_t n = 0; n <= 30; ++n) {
            RationalPoly rhs;
            for (std::uint64_t k = 0; k <= n; ++k) {
                rhs += RationalPoly::monomial(binomial(n, k) * bernoulli_poly_at(cache, k, y), n - k);
            }
            CHECK(bernoulli_polynomial(cache, n).shifted(y) == rhs);
        }
    }
}

TEST_CASE("reflection and forward difference") {
    BernoulliCache cache;
    const RationalPoly one_minus_x{1, -1};
    for (std::uint64_t n = 0; n <= 50; ++n) {
        const RationalPoly b = bernoulli_polynomial(cache, n);
        // Compose with 1 - x: substitute -x, then shift by 1.
        std::vector<Rational> negated = b.coeffs();
        for (std::size_t i = 1; i < negated.size(); i += 2) negated[i] = -negated[i];
        const RationalPoly reflected = RationalPoly(negated).shifted(-1);
        const Rational sign = (n % 2 == 0) ? 1 : -1;
        CHECK(reflected == b * sign);
        CHECK(reflected(q(3, 7)) == b(one_minus_x(q(3, 7))));

        const RationalPoly diff = b.shifted(1) - b;
        if (n == 0) {
            CHECK(diff.is_zero());
        } else {
            CHECK(diff == RationalPoly::monomial(Rational(static_cast<unsigned long>(n)), n - 1));
        }
    }
}

TEST_CASE("polynomial arithmetic and formatting") {
    const RationalPoly p{q(1, 6), -1, 1};
    CHECK(format_poly(p) == "x^2 - x + 1/6");
    CHECK(format_poly(RationalPoly{0, q(-1, 30), 0, q(1, 3), q(-1, 2), q(1, 5)}) ==
          "(1/5)x^5 - (1/2)x^4 + (1/3)x^3 - (1/30)x");
    CHECK(format_poly(RationalPoly{}) == "0");
    CHECK(format_poly(RationalPoly{0, 1, -12, 12}) == "12x^3 - 12x^2 + x");
    CHECK(format_poly(RationalPoly{0, 0, -1}) == "-x^2");

    CHECK((p - p).is_zero());
    CHECK((p - p).degree() == -1);
    CHECK(RationalPoly{1, 0, 0}.degree() == 0);
    CHECK(p * RationalPoly{0, 1} == RationalPoly{0, q(1, 6), -1, 1});
    CHECK(p(q(1, 2)) == q(-1, 12));
    CHECK_FALSE(p.has_integer_coefficients());
    CHECK((p * Rational(6)).has_integer_coefficients());
}
