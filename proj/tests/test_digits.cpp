#include <doctest.h>

#include <vector>

#include "psden/digits.hpp"

using namespace psden;

namespace {

std::vector<BigInt> big(std::initializer_list<long> v) {
    std::vector<BigInt> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

bool trial_division_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("expand") {
    CHECK(expand(0, 2).digits.empty());
    CHECK(expand(8, 2).digits == big({0, 0, 0, 1}));
    CHECK(expand(8, 3).digits == big({2, 2}));
    CHECK_THROWS_AS(expand(8, 1), DomainError);
    CHECK_THROWS_AS(expand(-1, 3), DomainError);

    for (long b = 2; b <= 17; ++b) {
        for (long n = 0; n <= 3000; n += 7) {
            const DigitExpansion e = expand(n, b);
            CHECK(e.value() == n);
            for (const auto& d : e.digits) CHECK((d >= 0 && d < b));
            if (!e.digits.empty()) CHECK(e.digits.back() != 0);
        }
    }
}

TEST_CASE("digit_sum") {
    for (long p : {2, 3, 5, 7, 11}) {
        BigInt pk = 1;
        for (int k = 0; k < 30; ++k, pk *= p) CHECK(digit_sum(BigInt(p), pk) == 1);
    }
    CHECK(digit_sum(BigInt(3), BigInt(8)) == 4);
    for (int k = 1; k < 100; ++k) {
        CHECK(digit_sum(BigInt(2), pow(BigInt(2), k) - 1) == k);
    }
    CHECK(digit_sum(std::uint64_t{3}, std::uint64_t{8}) == 4);
    CHECK(digit_sum(BigInt(10), BigInt(0)) == 0);
    CHECK_THROWS_AS(digit_sum(BigInt(1), BigInt(5)), DomainError);
}

TEST_CASE("p_valuation") {
    CHECK(p_valuation(BigInt(2), BigInt(8)) == 3);
    CHECK(p_valuation(BigInt(3), BigInt(8)) == 0);
    CHECK(p_valuation(BigInt(5), BigInt(250)) == 3);
    CHECK(p_valuation(BigInt(3), BigInt(-54)) == 3);
    CHECK(p_valuation(std::uint64_t{5}, std::uint64_t{250}) == 3);
    CHECK_THROWS_AS(p_valuation(BigInt(2), BigInt(0)), DomainError);
    CHECK_THROWS_AS(p_valuation(std::uint64_t{2}, std::uint64_t{0}), DomainError);
}

TEST_CASE("digit-sum step and congruence laws") {
    for (std::uint64_t p : primes_up_to(50)) {
        for (std::uint64_t n = 1; n <= 10000; ++n) {
            const auto s = static_cast<std::int64_t>(digit_sum(p, n));
            const auto s_next = static_cast<std::int64_t>(digit_sum(p, n + 1));
            const auto v = static_cast<std::int64_t>(p_valuation(p, n + 1));
            REQUIRE(s_next == s + 1 - static_cast<std::int64_t>(p - 1) * v);
            REQUIRE(s % static_cast<std::int64_t>(p - 1) == static_cast<std::int64_t>(n % (p - 1)));
            REQUIRE((s_next == s + 1) == ((n + 1) % p != 0));
        }
    }
}

TEST_CASE("radical") {
    SquarefreeProduct one = radical(1);
    CHECK(one.primes().empty());
    CHECK(one.value() == 1);

    SquarefreeProduct twelve = radical(12);
    CHECK(twelve.primes() == big({2, 3}));
    CHECK(twelve.value() == 6);

    CHECK(radical(pow(BigInt(7), 5)).value() == 7);
    CHECK(radical(BigInt(2 * 1000003)).primes() == big({2, 1000003}));
    CHECK_THROWS_AS(radical(0), DomainError);
    CHECK_THROWS_AS(radical(-4), DomainError);

    for (long k = 1; k <= 3000; ++k) {
        const SquarefreeProduct r = radical(k);
        CHECK(r.is_valid());
        CHECK(BigInt(k) % r.value() == 0);
        for (const auto& p : r.primes()) CHECK(BigInt(k) % p == 0);
    }
}

TEST_CASE("squarefree product") {
    const SquarefreeProduct a(big({2, 5}));
    const SquarefreeProduct b(big({3, 5, 7}));
    const SquarefreeProduct u = a.lcm(b);
    CHECK(u.primes() == big({2, 3, 5, 7}));
    CHECK(u.value() == 210);
    CHECK(u.contains(7));
    CHECK_FALSE(u.contains(11));
    CHECK(SquarefreeProduct().value() == 1);
    CHECK_THROWS_AS(SquarefreeProduct(big({5, 3})), DomainError);
    CHECK_THROWS_AS(SquarefreeProduct(big({3, 3})), DomainError);
    CHECK_FALSE(SquarefreeProduct(big({2, 4})).is_valid());
}

TEST_CASE("primes_up_to") {
    CHECK(primes_up_to(0).empty());
    CHECK(primes_up_to(1).empty());
    CHECK(primes_up_to(10) == std::vector<std::uint64_t>{2, 3, 5, 7});
    CHECK(primes_up_to(30) == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});

    const auto sieve = primes_up_to(100000);
    std::vector<std::uint64_t> oracle;
    for (std::uint64_t n = 0; n <= 100000; ++n) {
        if (trial_division_prime(n)) oracle.push_back(n);
    }
    CHECK(sieve == oracle);
}

TEST_CASE("gcd and lcm conventions") {
    CHECK(gcd(0, 7) == 7);
    CHECK(gcd(0, -7) == 7);
    CHECK(gcd(12, 18) == 6);
    CHECK(lcm(4, 6) == 12);
    CHECK_THROWS_AS(lcm(0, 6), DomainError);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(60, 30) == BigInt("118264581564861424"));
}
