#include "psden/sweep.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <thread>

#include "psden/bernoulli.hpp"
#include "psden/denom.hpp"
#include "psden/digits.hpp"
#include "psden/powersum.hpp"

namespace psden {

namespace {

struct Tally {
    std::uint64_t checked = 0;
    std::vector<SweepFailure> failures;

    void expect(bool ok, std::string input, std::string expected, std::string actual) {
        ++checked;
        if (!ok) failures.push_back({std::move(input), std::move(expected), std::move(actual)});
    }
};

using IndexCheck = std::function<void(BernoulliCache&, std::uint64_t, Tally&)>;

// Index i goes to worker i % jobs; per-index tallies are concatenated in index order.
Tally run_partitioned(std::uint64_t first, std::uint64_t last, unsigned jobs, const IndexCheck& check) {
    if (last < first) return {};
    const std::uint64_t count = last - first + 1;
    jobs = static_cast<unsigned>(std::clamp<std::uint64_t>(jobs, 1, count));
    std::vector<Tally> per_index(count);
    std::vector<std::exception_ptr> errors(jobs);

    auto worker = [&](unsigned w) {
        BernoulliCache cache;
        try {
            for (std::uint64_t i = w; i < count; i += jobs) check(cache, first + i, per_index[i]);
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
        for (auto& t : pool) t.join();
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }

    Tally total;
    for (auto& t : per_index) {
        total.checked += t.checked;
        std::move(t.failures.begin(), t.failures.end(), std::back_inserter(total.failures));
    }
    return total;
}

std::string str(std::uint64_t v) { return std::to_string(v); }
std::string str(const BigInt& v) { return v.get_str(); }
std::string yes_no(bool b) { return b ? "true" : "false"; }

bool divides(const BigInt& d, const BigInt& n) { return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0; }

bool is_power_of_two(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

BigInt ui(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

void check_parity(BernoulliCache&, std::uint64_t n, Tally& t) {
    const bool odd = mpz_odd_p(DD_formula(n).value().get_mpz_t()) != 0;
    t.expect(odd == is_power_of_two(n), "n=" + str(n), "odd=" + yes_no(is_power_of_two(n)), "odd=" + yes_no(odd));
}

IndexCheck check_denominator(const SweepOptions& opts) {
    return [opts](BernoulliCache& cache, std::uint64_t n, Tally& t) {
        const BigInt classical = ui(n + 1) * DD_formula(n + 1).value();
        for (std::uint64_t m = 1; m <= opts.m_max; ++m) {
            const BigInt closed = power_sum_denominator(ProgressionSpec(ui(m), 0, n));
            RationalPoly base;
            for (std::uint64_t r = 0; r <= opts.r_max; ++r) {
                const ProgressionSpec spec(ui(m), ui(r), n);
                const std::string input = "m=" + str(m) + ",r=" + str(r) + ",n=" + str(n);
                RationalPoly poly = power_sum_poly(cache, spec);
                const BigInt direct = denom_poly(poly);
                t.expect(direct == closed, input, "denom=" + str(closed), "denom=" + str(direct));
                t.expect(power_sum_denominator(spec) == closed, input + " (r-independence)", str(closed),
                         str(power_sum_denominator(spec)));
                t.expect(divides(direct, classical), input + " (divides (n+1)DD_{n+1})", str(classical),
                         str(direct));
                if (r == 0) {
                    base = std::move(poly);
                } else {
                    t.expect((poly - base).has_integer_coefficients(), input + " (SP_r - SP_0 integral)", "true",
                             "false");
                }
            }
        }
    };
}

IndexCheck check_integrality(const SweepOptions& opts) {
    return [opts](BernoulliCache& cache, std::uint64_t n, Tally& t) {
        const BigInt db = DB_formula(n).value();
        for (std::uint64_t m = 1; m <= opts.m_max; ++m) {
            for (std::uint64_t r = 0; r <= opts.r_max; ++r) {
                const ProgressionSpec spec(ui(m), ui(r), n);
                const bool by_db = divides(db, ui(m));
                const bool by_coeffs = power_sum_poly(cache, spec).has_integer_coefficients();
                const bool by_flag = is_integral(spec);
                const bool by_denominator = power_sum_denominator(spec) == 1;
                const bool agree = by_db == by_coeffs && by_db == by_flag && by_db == by_denominator;
                t.expect(agree, "m=" + str(m) + ",r=" + str(r) + ",n=" + str(n),
                         "all equal to DB_n|m=" + yes_no(by_db),
                         "coeffs=" + yes_no(by_coeffs) + ",is_integral=" + yes_no(by_flag) +
                             ",denom==1=" + yes_no(by_denominator));
            }
        }
    };
}

void check_relations(BernoulliCache&, std::uint64_t n, Tally& t) {
    const std::string input = "n=" + str(n);
    const SquarefreeProduct rad_next = radical(ui(n + 1));
    const SquarefreeProduct dd = DD_formula(n);
    const SquarefreeProduct dd_next = DD_formula(n + 1);
    const SquarefreeProduct db = DB_formula(n);

    if (n % 2 == 1) {
        if (n >= 3) {
            const auto rhs = dd_next.lcm(rad_next);
            t.expect(dd == rhs, input + " DD_n = lcm(DD_{n+1}, rad(n+1))", str(rhs.value()), str(dd.value()));
        }
        t.expect(divides(dd_next.value(), dd.value()), input + " DD_{n+1} | DD_n", str(dd.value()),
                 str(dd_next.value()));
    } else {
        const SquarefreeProduct db_next = DB_formula(n + 1);
        const auto rhs = db_next.lcm(rad_next);
        t.expect(db == rhs, input + " DB_n = lcm(DB_{n+1}, rad(n+1))", str(rhs.value()), str(db.value()));
        t.expect(divides(db_next.value(), db.value()), input + " DB_{n+1} | DB_n", str(db.value()),
                 str(db_next.value()));
    }
    if (!is_prime(ui(n + 1))) {
        t.expect(divides(rad_next.value(), dd.value()), input + " rad(n+1) | DD_n", str(dd.value()),
                 str(rad_next.value()));
    }
    t.expect(mpz_even_p(db.value().get_mpz_t()) != 0, input + " DB_n even", "even", str(db.value()));
    const auto shifted = DB_formula_shifted(n);
    const auto product = DB_formula_product(n);
    t.expect(shifted == db && product == db, input + " DB product forms agree", str(db.value()),
             str(shifted.value()) + "," + str(product.value()));
    const auto unbounded = DD_formula_unbounded(n);
    t.expect(unbounded == dd, input + " DD bounded = unbounded", str(dd.value()), str(unbounded.value()));
}

// Splits k = 2^l * rest with rest odd.
std::pair<std::uint64_t, std::uint64_t> split_two(std::uint64_t k) {
    std::uint64_t l = 0;
    while (k % 2 == 0) {
        k /= 2;
        ++l;
    }
    return {l, k};
}

void check_dd_quotients(BernoulliCache&, std::uint64_t n, Tally& t) {
    if (n % 2 == 0) return;
    const std::string input = "n=" + str(n);
    const BigInt q = dd_quotient(n);
    if (n >= 3 && is_power_of_two(n + 1)) {
        t.expect(q == 2, input + " (n = 2^k - 1)", "2", str(q));
        return;
    }
    t.expect(mpz_odd_p(q.get_mpz_t()) != 0, input, "odd", str(q));

    const auto [l, odd_part] = split_two(n + 1);
    if (l == 0 || odd_part == 1) return;
    const SquarefreeProduct rad = radical(ui(odd_part));
    if (rad.primes().size() != 1) return;
    const BigInt& p = rad.primes().front();
    const BigInt two_pow = pow(BigInt(2), l);
    const std::string shape = input + " (2^" + str(l) + "*" + str(p) + "^k - 1)";
    t.expect(q == 1 || q == p, shape, "1 or " + str(p), str(q));
    const BigInt expected = digit_sum(p, two_pow) < p ? p : BigInt(1);
    t.expect(q == expected, shape + " digit-sum rule", str(expected), str(q));
    if (two_pow < p) t.expect(q == p, shape + " with 2^l < p", str(p), str(q));
}

void check_db_quotients(BernoulliCache&, std::uint64_t n, Tally& t) {
    if (n % 2 == 1) return;
    const std::string input = "n=" + str(n);
    const BigInt q = db_quotient(n);
    t.expect(mpz_odd_p(q.get_mpz_t()) != 0, input, "odd", str(q));

    const SquarefreeProduct rad = radical(ui(n + 1));
    if (rad.primes().size() == 1) {
        t.expect(q == rad.value(), input + " (p^k - 1)", str(rad.value()), str(q));
    } else if (rad.primes().size() == 2) {
        const BigInt& p = rad.primes()[0];
        const BigInt& r = rad.primes()[1];
        const std::string shape = input + " (p^k q^l - 1, p=" + str(p) + ", q=" + str(r) + ")";
        t.expect(q == 1 || q == p || q == r || q == p * r, shape, "one of 1,p,q,pq", str(q));
        // p survives in the quotient iff s_p(n+1) < p, and s_p(n+1) = s_p(q^l).
        BigInt expected = 1;
        for (const BigInt* prime : {&p, &r}) {
            BigInt cofactor = ui(n + 1);
            while (divides(*prime, cofactor)) cofactor /= *prime;
            if (digit_sum(*prime, cofactor) < *prime) expected *= *prime;
        }
        t.expect(q == expected, shape + " digit-sum rule", str(expected), str(q));
    }
}

IndexCheck check_congruence(const SweepOptions& opts) {
    return [opts](BernoulliCache& cache, std::uint64_t n, Tally& t) {
        const auto primes = primes_up_to(13);
        for (std::uint64_t m = 1; m <= opts.m_max; ++m) {
            for (std::uint64_t r = 0; r <= opts.r_max; ++r) {
                const BigInt value = am_integer(cache, ui(m), ui(r), n).value;
                for (std::uint64_t p : primes) {
                    if (m % p == 0) continue;
                    const std::uint64_t vp = p_valuation(p, n);
                    for (std::uint64_t e = 0; e <= vp; ++e) {
                        t.expect(divides(pow(ui(p), e), value),
                                 "m=" + str(m) + ",r=" + str(r) + ",n=" + str(n) + ",p=" + str(p) + ",e=" + str(e),
                                 "p^e | BP", str(value));
                    }
                }
            }
        }
    };
}

IndexCheck check_am_integrality(const SweepOptions& opts) {
    return [opts](BernoulliCache& cache, std::uint64_t n, Tally& t) {
        const long r_max = static_cast<long>(opts.r_max);
        for (std::uint64_t m = 1; m <= opts.m_max; ++m) {
            for (long r = -r_max; r <= r_max; ++r) {
                const std::string input = "m=" + str(m) + ",r=" + std::to_string(r) + ",n=" + str(n);
                try {
                    am_integer(cache, ui(m), BigInt(r), n);
                    t.expect(true, input, "", "");
                } catch (const TheoremViolation& e) {
                    t.expect(false, input, "integer", e.what());
                }
            }
        }
    };
}

std::string describe_range(TheoremId id, const SweepOptions& o) {
    std::string s = "n<=" + str(o.max_n);
    switch (id) {
        case TheoremId::T2Denominator:
        case TheoremId::T3Integrality:
        case TheoremId::L1Congruence:
            s += ",m<=" + str(o.m_max) + ",0<=r<=" + str(o.r_max);
            break;
        case TheoremId::AMIntegrality:
            s += ",m<=" + str(o.m_max) + ",|r|<=" + str(o.r_max);
            break;
        default:
            break;
    }
    return s;
}

}  // namespace

std::string_view to_string(TheoremId id) {
    switch (id) {
        case TheoremId::T1Parity: return "T1-parity";
        case TheoremId::T2Denominator: return "T2-denominator";
        case TheoremId::T3Integrality: return "T3-integrality";
        case TheoremId::C2Relations: return "C2-relations";
        case TheoremId::T4Quotients: return "T4-quotients";
        case TheoremId::T5Quotients: return "T5-quotients";
        case TheoremId::L1Congruence: return "L1-congruence";
        case TheoremId::AMIntegrality: return "AM-integrality";
    }
    return "?";
}

std::optional<TheoremId> parse_theorem_id(std::string_view name) {
    for (TheoremId id : kAllTheorems) {
        if (to_string(id) == name) return id;
    }
    return std::nullopt;
}

SweepOptions default_sweep_options(TheoremId id) {
    SweepOptions o;
    o.jobs = std::max(1u, std::thread::hardware_concurrency());
    switch (id) {
        case TheoremId::T1Parity: o.max_n = 4096; break;
        case TheoremId::T2Denominator: o.max_n = 60; o.m_max = 30; o.r_max = 3; break;
        case TheoremId::T3Integrality: o.max_n = 40; o.m_max = 60; o.r_max = 2; break;
        case TheoremId::C2Relations: o.max_n = 2000; break;
        case TheoremId::T4Quotients: o.max_n = 2047; break;
        case TheoremId::T5Quotients: o.max_n = 2048; break;
        case TheoremId::L1Congruence: o.max_n = 60; o.m_max = 20; o.r_max = 20; break;
        case TheoremId::AMIntegrality: o.max_n = 80; o.m_max = 40; o.r_max = 40; break;
    }
    return o;
}

SweepReport run_sweep(TheoremId id, const SweepOptions& opts) {
    if (opts.max_n < 1) throw DomainError("sweep needs max n >= 1");
    const auto start = std::chrono::steady_clock::now();

    IndexCheck check;
    std::uint64_t first = 1;
    switch (id) {
        case TheoremId::T1Parity: check = check_parity; break;
        case TheoremId::T2Denominator: check = check_denominator(opts); break;
        case TheoremId::T3Integrality: check = check_integrality(opts); break;
        case TheoremId::C2Relations: check = check_relations; break;
        case TheoremId::T4Quotients: check = check_dd_quotients; break;
        case TheoremId::T5Quotients: check = check_db_quotients; first = 2; break;
        case TheoremId::L1Congruence: check = check_congruence(opts); break;
        case TheoremId::AMIntegrality: check = check_am_integrality(opts); break;
    }

    Tally tally = run_partitioned(first, opts.max_n, opts.jobs, check);
    SweepReport report{id, describe_range(id, opts), tally.checked, std::move(tally.failures), {}};
    report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
    return report;
}

}  // namespace psden
