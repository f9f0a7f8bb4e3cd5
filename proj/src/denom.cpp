#include "psden/denom.hpp"

#include <string>

namespace psden {

namespace {

void check_index(std::uint64_t n) {
    if (n == 0) throw DomainError("sequence index must be >= 1");
}

std::uint64_t digit_cutoff(std::uint64_t n) { return (n % 2 == 1) ? (n + 1) / 2 : (n + 1) / 3; }

SquarefreeProduct digit_sum_product(std::uint64_t n, std::uint64_t bound, std::uint64_t skip_divisors_of = 0) {
    std::vector<BigInt> hits;
    for (std::uint64_t p : primes_up_to(bound)) {
        if (skip_divisors_of != 0 && skip_divisors_of % p == 0) continue;
        if (digit_sum(p, n) >= p) hits.emplace_back(static_cast<unsigned long>(p));
    }
    return SquarefreeProduct(std::move(hits));
}

SquarefreeProduct to_product(std::initializer_list<unsigned long> primes) {
    std::vector<BigInt> v;
    for (auto p : primes) v.emplace_back(p);
    return SquarefreeProduct(std::move(v));
}

}  // namespace

BigInt denom_poly(const RationalPoly& f) {
    BigInt d = 1;
    for (const auto& c : f.coeffs()) d = lcm(d, c.get_den());
    return d;
}

BigInt D_direct(BernoulliCache& cache, std::uint64_t n) {
    check_index(n);
    return cache.number(n).get_den();
}

SquarefreeProduct D_formula(std::uint64_t n) {
    check_index(n);
    if (n == 1) return to_product({2});
    if (n % 2 == 1) return {};
    std::vector<BigInt> primes;
    for (std::uint64_t p : primes_up_to(n + 1)) {
        if (n % (p - 1) == 0) primes.emplace_back(static_cast<unsigned long>(p));
    }
    return SquarefreeProduct(std::move(primes));
}

BigInt DD_direct(BernoulliCache& cache, std::uint64_t n) {
    check_index(n);
    RationalPoly b = bernoulli_polynomial(cache, n);
    return denom_poly(b - RationalPoly{b.coeff(0)});
}

SquarefreeProduct DD_formula(std::uint64_t n) {
    check_index(n);
    return digit_sum_product(n, digit_cutoff(n));
}

SquarefreeProduct DD_formula_unbounded(std::uint64_t n) {
    check_index(n);
    return digit_sum_product(n, n);
}

BigInt DB_direct(BernoulliCache& cache, std::uint64_t n) {
    check_index(n);
    return denom_poly(bernoulli_polynomial(cache, n));
}

SquarefreeProduct DB_formula(std::uint64_t n) { return DD_formula(n).lcm(D_formula(n)); }

SquarefreeProduct DB_formula_shifted(std::uint64_t n) {
    check_index(n);
    return DD_formula(n + 1).lcm(radical(BigInt(static_cast<unsigned long>(n + 1))));
}

SquarefreeProduct DB_formula_product(std::uint64_t n) {
    check_index(n);
    const std::uint64_t next = n + 1;
    SquarefreeProduct rad = radical(BigInt(static_cast<unsigned long>(next)));
    // The two factors have disjoint prime sets, so their lcm is their product.
    return rad.lcm(digit_sum_product(next, digit_cutoff(next), next));
}

DenomTriple denom_triple(std::uint64_t n) {
    SquarefreeProduct d = D_formula(n);
    SquarefreeProduct dd = DD_formula(n);
    SquarefreeProduct db = dd.lcm(d);
    return DenomTriple{n, std::move(d), std::move(dd), std::move(db)};
}

BigInt dd_quotient(std::uint64_t n) {
    check_index(n);
    if (n % 2 == 0) throw DomainError("DD quotient is only integral for odd n, got " + std::to_string(n));
    BigInt num = DD_formula(n).value();
    BigInt den = DD_formula(n + 1).value();
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
        throw TheoremViolation("DD_" + std::to_string(n + 1) + " does not divide DD_" + std::to_string(n));
    }
    return num / den;
}

BigInt db_quotient(std::uint64_t n) {
    check_index(n);
    if (n % 2 == 1) throw DomainError("DB quotient is only integral for even n, got " + std::to_string(n));
    BigInt num = DB_formula(n).value();
    BigInt den = DB_formula(n + 1).value();
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
        throw TheoremViolation("DB_" + std::to_string(n + 1) + " does not divide DB_" + std::to_string(n));
    }
    return num / den;
}

std::uint64_t first_index_digit_sum_reaches(const BigInt& p, const BigInt& q, std::uint64_t cap) {
    if (!is_prime(p) || !is_prime(q)) throw DomainError("first-index search needs two primes");
    if (p == q) throw DomainError("first-index search needs distinct primes");
    BigInt power = q;
    for (std::uint64_t k = 1; k <= cap; ++k, power *= q) {
        if (digit_sum(p, power) >= p) return k;
    }
    throw SearchCapExceeded("no k <= " + std::to_string(cap) + " with s_" + p.get_str() + "(" + q.get_str() +
                            "^k) >= " + p.get_str());
}

}  // namespace psden
