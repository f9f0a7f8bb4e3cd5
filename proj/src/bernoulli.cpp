#include "psden/bernoulli.hpp"

#include <sstream>

namespace psden {

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RationalPoly::RationalPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

RationalPoly RationalPoly::monomial(const Rational& c, std::size_t degree) {
    std::vector<Rational> v(degree + 1, Rational(0));
    v[degree] = c;
    return RationalPoly(std::move(v));
}

void RationalPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPoly::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RationalPoly RationalPoly::shifted(const Rational& shift) const {
    // Taylor shift by repeated synthetic division.
    std::vector<Rational> c = coeffs_;
    const std::size_t n = c.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = n - 1; j > i; --j) c[j - 1] += shift * c[j];
    }
    return RationalPoly(std::move(c));
}

bool RationalPoly::has_integer_coefficients() const {
    for (const auto& c : coeffs_) {
        if (c.get_den() != 1) return false;
    }
    return true;
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

RationalPoly& RationalPoly::operator*=(const Rational& c) {
    for (auto& a : coeffs_) a *= c;
    trim();
    return *this;
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return RationalPoly(std::move(out));
}

std::string format_poly(const RationalPoly& p, char var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long k = p.degree(); k >= 0; --k) {
        const Rational& c = p.coeffs()[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) {
            if (mag.get_den() == 1) {
                os << mag.get_str();
            } else {
                os << '(' << mag.get_str() << ')';
            }
        }
        os << var;
        if (k > 1) os << '^' << k;
    }
    return os.str();
}

BernoulliCache::BernoulliCache() { numbers_.emplace_back(1); }

const Rational& BernoulliCache::number(std::uint64_t n) {
    if (n >= numbers_.size()) grow_to(n);
    return numbers_[n];
}

void BernoulliCache::grow_to(std::uint64_t n) {
    numbers_.reserve(n + 1);
    // sum_{k=0}^{j} C(j+1, k) B_k = 0 for j >= 1.
    for (std::uint64_t j = numbers_.size(); j <= n; ++j) {
        Rational sum = 0;
        BigInt c = 1;  // C(j+1, k)
        for (std::uint64_t k = 0; k < j; ++k) {
            if (numbers_[k] != 0) sum += c * numbers_[k];
            c *= static_cast<unsigned long>(j + 1 - k);
            mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(k + 1));
        }
        sum /= Rational(static_cast<unsigned long>(j + 1));
        numbers_.push_back(-sum);
    }
}

Rational bernoulli_number(BernoulliCache& cache, std::uint64_t n) { return cache.number(n); }

RationalPoly bernoulli_polynomial(BernoulliCache& cache, std::uint64_t n) {
    std::vector<Rational> c(n + 1);
    BigInt binom = 1;  // C(n, k)
    for (std::uint64_t k = 0; k <= n; ++k) {
        c[n - k] = binom * cache.number(k);
        binom *= static_cast<unsigned long>(n - k);
        mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(k + 1));
    }
    return RationalPoly(std::move(c));
}

Rational bernoulli_poly_at(BernoulliCache& cache, std::uint64_t n, const Rational& q) {
    return bernoulli_polynomial(cache, n)(q);
}

std::vector<Rational> bernoulli_poly_values(BernoulliCache& cache, std::uint64_t n, const Rational& q) {
    cache.number(n);
    std::vector<Rational> out;
    out.reserve(n + 1);
    // Horner per index with a rolling binomial row: B_k(q) = sum_j C(k,j) B_j q^(k-j).
    for (std::uint64_t k = 0; k <= n; ++k) {
        Rational acc = 0;
        BigInt binom = 1;  // C(k, j)
        for (std::uint64_t j = 0; j <= k; ++j) {
            acc = acc * q + binom * cache.number(j);
            binom *= static_cast<unsigned long>(k - j);
            mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(j + 1));
        }
        out.push_back(std::move(acc));
    }
    return out;
}

}  // namespace psden
