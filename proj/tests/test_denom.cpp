#include <doctest.h>

#include <vector>

#include "psden/denom.hpp"

using namespace psden;

namespace {

Rational q(long num, long den = 1) { return make_rational(num, den); }

const std::vector<long> kDD = {1, 1, 2, 1, 6, 2, 6, 3, 10, 2, 6, 2, 210, 30, 6, 3, 30, 10, 210, 42, 330};
const std::vector<long> kDB = {2, 6, 2, 30, 6, 42, 6, 30, 10, 66, 6, 2730, 210, 30, 6, 510, 30, 3990};
const std::vector<long> kD = {2, 6, 1, 30, 1, 42, 1, 30, 1, 66, 1, 2730, 1, 6, 1, 510, 1, 798, 1, 330};

// Linear scan using explicit expansions, independent of digit_sum.
std::uint64_t first_index_by_expansion(long p, long q) {
    BigInt power = q;
    for (std::uint64_t k = 1;; ++k, power *= q) {
        BigInt s = 0;
        for (const auto& d : expand(power, p).digits) s += d;
        if (s >= p) return k;
    }
}

}  // namespace

TEST_CASE("denom_poly") {
    CHECK(denom_poly(RationalPoly{1}) == 1);
    CHECK(denom_poly(RationalPoly{}) == 1);
    CHECK(denom_poly(RationalPoly{q(1, 6), -1, 1}) == 6);
    // (2x^3 - 3x^2 + x)/6
    CHECK(denom_poly(RationalPoly{0, q(1, 6), q(-1, 2), q(1, 3)}) == 6);
    CHECK(denom_poly(RationalPoly{q(1, 4), q(1, 6)}) == 12);
}

TEST_CASE("printed sequences") {
    BernoulliCache cache;
    for (std::size_t i = 0; i < kDD.size(); ++i) {
        CHECK(DD_formula(i + 1).value() == kDD[i]);
        CHECK(DD_direct(cache, i + 1) == kDD[i]);
    }
    for (std::size_t i = 0; i < kDB.size(); ++i) {
        CHECK(DB_formula(i + 1).value() == kDB[i]);
        CHECK(DB_direct(cache, i + 1) == kDB[i]);
    }
    for (std::size_t i = 0; i < kD.size(); ++i) {
        CHECK(D_formula(i + 1).value() == kD[i]);
        CHECK(D_direct(cache, i + 1) == kD[i]);
    }
}

TEST_CASE("edge values") {
    CHECK(D_formula(1).value() == 2);
    CHECK(D_formula(12).value() == 2730);
    for (std::uint64_t n = 3; n < 200; n += 2) CHECK(D_formula(n).value() == 1);
    CHECK(DD_formula(2).value() == 1);
    CHECK(DD_formula(12).value() == 2);
    CHECK(DD_formula(21).value() == 330);
    CHECK(DB_formula(10).value() == 66);
    for (std::uint64_t k = 0; k <= 6; ++k) {
        CHECK(mpz_odd_p(DD_formula(std::uint64_t{1} << k).value().get_mpz_t()));
    }
    CHECK_THROWS_AS(D_formula(0), DomainError);
    CHECK_THROWS_AS(DD_formula(0), DomainError);
    CHECK_THROWS_AS(DB_formula(0), DomainError);
    BernoulliCache cache;
    CHECK_THROWS_AS(DD_direct(cache, 0), DomainError);
}

TEST_CASE("formula routes agree with direct routes") {
    BernoulliCache cache;
    for (std::uint64_t n = 1; n <= 120; ++n) {
        CAPTURE(n);
        const auto dd = DD_formula(n);
        CHECK(dd.is_valid());
        CHECK(dd == DD_formula_unbounded(n));
        CHECK(dd.value() == DD_direct(cache, n));
        CHECK(D_formula(n).value() == D_direct(cache, n));
        const auto db = DB_formula(n);
        CHECK(db == DB_formula_shifted(n));
        CHECK(db == DB_formula_product(n));
        CHECK(db.value() == DB_direct(cache, n));
    }
}

TEST_CASE("denom_triple") {
    for (std::uint64_t n = 1; n <= 500; ++n) {
        const DenomTriple t = denom_triple(n);
        CHECK(t.DB.value() == lcm(t.DD.value(), t.D.value()));
        CHECK(mpz_even_p(t.DB.value().get_mpz_t()));
    }
}

TEST_CASE("quotients") {
    const std::vector<long> dd = {1, 2, 3, 2, 5, 3, 7, 2, 3, 5, 11, 1, 13, 7, 15, 2, 17, 3, 19, 5, 7};
    for (std::size_t i = 0; i < dd.size(); ++i) CHECK(dd_quotient(2 * i + 1) == dd[i]);
    const std::vector<long> db = {3, 5, 7, 3, 11, 13, 5, 17, 19, 7, 23, 5, 3, 29, 31, 11, 35, 37};
    for (std::size_t i = 0; i < db.size(); ++i) CHECK(db_quotient(2 * i + 2) == db[i]);
    for (std::uint64_t k = 2; k <= 4; ++k) CHECK(dd_quotient((std::uint64_t{1} << k) - 1) == 2);

    CHECK_THROWS_AS(dd_quotient(2), DomainError);
    CHECK_THROWS_AS(db_quotient(3), DomainError);
    CHECK_THROWS_AS(db_quotient(0), DomainError);
}

TEST_CASE("first_index_digit_sum_reaches") {
    CHECK(first_index_digit_sum_reaches(3, 2) == 3);
    CHECK(first_index_digit_sum_reaches(5, 2) == 6);
    for (long q : {3, 5, 7, 11, 13, 47}) CHECK(first_index_digit_sum_reaches(2, q) == 1);

    const auto primes = primes_up_to(50);
    for (auto p : primes) {
        for (auto r : primes) {
            if (p == r) continue;
            CHECK(first_index_digit_sum_reaches(static_cast<unsigned long>(p), static_cast<unsigned long>(r)) ==
                  first_index_by_expansion(static_cast<long>(p), static_cast<long>(r)));
        }
    }
    CHECK_THROWS_AS(first_index_digit_sum_reaches(3, 3), DomainError);
    CHECK_THROWS_AS(first_index_digit_sum_reaches(4, 3), DomainError);
    CHECK_THROWS_AS(first_index_digit_sum_reaches(47, 2, 2), SearchCapExceeded);
}
