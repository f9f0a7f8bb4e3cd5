#include "psden/digits.hpp"

#include <algorithm>

namespace psden {

namespace {

void check_base(const BigInt& base) {
    if (base < 2) throw DomainError("digit base must be >= 2, got " + base.get_str());
}

void check_nonnegative(const BigInt& n) {
    if (n < 0) throw DomainError("expected a nonnegative integer, got " + n.get_str());
}

}  // namespace

BigInt DigitExpansion::value() const {
    BigInt v = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) v = v * base + *it;
    return v;
}

SquarefreeProduct::SquarefreeProduct(std::vector<BigInt> primes) : primes_(std::move(primes)) {
    for (std::size_t i = 1; i < primes_.size(); ++i) {
        if (!(primes_[i - 1] < primes_[i])) {
            throw DomainError("squarefree product needs strictly increasing primes");
        }
    }
    for (const auto& p : primes_) {
        if (p < 2) throw DomainError("not a prime: " + p.get_str());
        value_ *= p;
    }
}

bool SquarefreeProduct::contains(const BigInt& p) const {
    return std::binary_search(primes_.begin(), primes_.end(), p);
}

SquarefreeProduct SquarefreeProduct::lcm(const SquarefreeProduct& other) const {
    std::vector<BigInt> merged;
    merged.reserve(primes_.size() + other.primes_.size());
    std::set_union(primes_.begin(), primes_.end(), other.primes_.begin(), other.primes_.end(),
                   std::back_inserter(merged));
    return SquarefreeProduct(std::move(merged));
}

bool SquarefreeProduct::is_valid() const {
    BigInt prod = 1;
    for (std::size_t i = 0; i < primes_.size(); ++i) {
        if (!is_prime(primes_[i])) return false;
        if (i > 0 && !(primes_[i - 1] < primes_[i])) return false;
        prod *= primes_[i];
    }
    return prod == value_;
}

DigitExpansion expand(const BigInt& n, const BigInt& base) {
    check_base(base);
    check_nonnegative(n);
    DigitExpansion e{base, {}};
    BigInt q = n;
    BigInt r;
    while (q != 0) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), q.get_mpz_t(), base.get_mpz_t());
        e.digits.push_back(r);
    }
    return e;
}

BigInt digit_sum(const BigInt& base, const BigInt& n) {
    check_base(base);
    check_nonnegative(n);
    BigInt sum = 0;
    BigInt q = n;
    BigInt r;
    while (q != 0) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), q.get_mpz_t(), base.get_mpz_t());
        sum += r;
    }
    return sum;
}

std::uint64_t digit_sum(std::uint64_t base, std::uint64_t n) {
    if (base < 2) throw DomainError("digit base must be >= 2");
    std::uint64_t sum = 0;
    while (n != 0) {
        sum += n % base;
        n /= base;
    }
    return sum;
}

BigInt p_valuation(const BigInt& p, const BigInt& n) {
    check_base(p);
    if (n == 0) throw DomainError("p-adic valuation of 0 is infinite");
    BigInt q = n;
    BigInt e = 0;
    while (mpz_divisible_p(q.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(q.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
        ++e;
    }
    return e;
}

std::uint64_t p_valuation(std::uint64_t p, std::uint64_t n) {
    if (p < 2) throw DomainError("valuation base must be >= 2");
    if (n == 0) throw DomainError("p-adic valuation of 0 is infinite");
    std::uint64_t e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    return e;
}

SquarefreeProduct radical(const BigInt& k) {
    if (k < 1) throw DomainError("radical needs k >= 1, got " + k.get_str());
    std::vector<BigInt> primes;
    BigInt rest = k;
    for (BigInt d = 2; d * d <= rest; ++d) {
        if (mpz_divisible_p(rest.get_mpz_t(), d.get_mpz_t())) {
            primes.push_back(d);
            do {
                mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), d.get_mpz_t());
            } while (mpz_divisible_p(rest.get_mpz_t(), d.get_mpz_t()));
        }
    }
    if (rest > 1) primes.push_back(rest);
    return SquarefreeProduct(std::move(primes));
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    if (bound < 2) return out;
    std::vector<bool> composite(bound + 1, false);
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
    }
    return out;
}

bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    for (BigInt d = 2; d * d <= n; ++d) {
        if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) return false;
    }
    return true;
}

}  // namespace psden
