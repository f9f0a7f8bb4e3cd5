#pragma once

#include <cstdint>
#include <vector>

#include "psden/arith.hpp"

namespace psden {

/// Base-b expansion of a nonnegative integer, least-significant digit first.
/// Zero has the empty expansion; otherwise the last digit is nonzero.
struct DigitExpansion {
    BigInt base;
    std::vector<BigInt> digits;

    BigInt value() const;
};

/// Distinct primes in increasing order together with their product.
class SquarefreeProduct {
public:
    SquarefreeProduct() = default;

    /// Primes must be strictly increasing. Primality is only checked by is_valid().
    explicit SquarefreeProduct(std::vector<BigInt> primes);

    const std::vector<BigInt>& primes() const { return primes_; }
    const BigInt& value() const { return value_; }
    bool contains(const BigInt& p) const;

    /// Union of prime sets, i.e. the lcm of the two values.
    SquarefreeProduct lcm(const SquarefreeProduct& other) const;

    /// Full check: increasing, each prime, product matches.
    bool is_valid() const;

    friend bool operator==(const SquarefreeProduct& a, const SquarefreeProduct& b) {
        return a.primes_ == b.primes_;
    }

private:
    std::vector<BigInt> primes_;
    BigInt value_ = 1;
};

DigitExpansion expand(const BigInt& n, const BigInt& base);

/// s_b(n), the sum of base-b digits. Never materializes the expansion.
BigInt digit_sum(const BigInt& base, const BigInt& n);
std::uint64_t digit_sum(std::uint64_t base, std::uint64_t n);

/// Exponent of the largest power of p dividing n. n = 0 is rejected.
BigInt p_valuation(const BigInt& p, const BigInt& n);
std::uint64_t p_valuation(std::uint64_t p, std::uint64_t n);

/// Product of the distinct prime divisors of k (trial division), k >= 1.
SquarefreeProduct radical(const BigInt& k);

/// All primes <= bound, ascending (sieve of Eratosthenes).
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

bool is_prime(const BigInt& n);

}  // namespace psden
