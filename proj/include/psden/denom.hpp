#pragma once

#include <cstdint>
#include <stdexcept>

#include "psden/arith.hpp"
#include "psden/bernoulli.hpp"
#include "psden/digits.hpp"

namespace psden {

/// Smallest d >= 1 with d*f in Z[x]; 1 for the zero polynomial.
BigInt denom_poly(const RationalPoly& f);

// Denominators of B_n (D), of B_n(x) - B_n (DD), and of B_n(x) (DB).
// *_direct routes compute the Bernoulli objects; *_formula routes never touch them.
// All take n >= 1 and throw DomainError otherwise.

BigInt D_direct(BernoulliCache& cache, std::uint64_t n);
/// prod_{p-1 | n} p for even n; 2 for n = 1; 1 for odd n >= 3.
SquarefreeProduct D_formula(std::uint64_t n);

BigInt DD_direct(BernoulliCache& cache, std::uint64_t n);
/// Primes p <= M_n with s_p(n) >= p, where M_n = floor((n+1)/2) for odd n
/// and floor((n+1)/3) for even n.
SquarefreeProduct DD_formula(std::uint64_t n);
/// Same product without the M_n cutoff (scans every p <= n).
SquarefreeProduct DD_formula_unbounded(std::uint64_t n);

BigInt DB_direct(BernoulliCache& cache, std::uint64_t n);
/// lcm(DD_n, D_n).
SquarefreeProduct DB_formula(std::uint64_t n);
/// lcm(DD_{n+1}, rad(n+1)).
SquarefreeProduct DB_formula_shifted(std::uint64_t n);
/// rad(n+1) times the primes p not dividing n+1 with p <= M_{n+1} and s_p(n+1) >= p.
SquarefreeProduct DB_formula_product(std::uint64_t n);

struct DenomTriple {
    std::uint64_t n;
    SquarefreeProduct D;
    SquarefreeProduct DD;
    SquarefreeProduct DB;
};

DenomTriple denom_triple(std::uint64_t n);

/// DD_n / DD_{n+1} for odd n >= 1. Even n throws DomainError.
BigInt dd_quotient(std::uint64_t n);
/// DB_n / DB_{n+1} for even n >= 2. Odd n throws DomainError.
BigInt db_quotient(std::uint64_t n);

class SearchCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Smallest k >= 1 with s_p(q^k) >= p. This is only the first hit; it says
/// nothing about whether every larger k also qualifies.
/// Throws SearchCapExceeded if no k <= cap qualifies.
std::uint64_t first_index_digit_sum_reaches(const BigInt& p, const BigInt& q, std::uint64_t cap = 10000);

}  // namespace psden
