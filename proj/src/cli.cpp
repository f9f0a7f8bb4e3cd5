#include "psden/cli.hpp"

#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "psden/bernoulli.hpp"
#include "psden/denom.hpp"
#include "psden/powersum.hpp"
#include "psden/sweep.hpp"

namespace psden::cli {

namespace {

using Clock = std::chrono::steady_clock;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

BigInt oracle_term(BernoulliCache& cache, SequenceId id, std::uint64_t n) {
    switch (id) {
        case SequenceId::D: return D_direct(cache, n);
        case SequenceId::DD: return DD_direct(cache, n);
        case SequenceId::DB: return DB_direct(cache, n);
        default: throw DomainError("no oracle route for sequence " + std::string(to_string(id)));
    }
}

std::string coefficient_list(const RationalPoly& p) {
    std::ostringstream os;
    for (long k = p.degree(); k >= 0; --k) {
        const Rational& c = p.coeffs()[static_cast<std::size_t>(k)];
        if (k != p.degree()) os << ", ";
        os << c.get_num().get_str() << '/' << c.get_den().get_str();
    }
    return os.str();
}

int cmd_seq(const std::string& id_name, std::uint64_t from, std::uint64_t to, const std::string& format_name,
            std::ostream& out, std::ostream& err) {
    auto id = parse_sequence_id(id_name);
    if (!id) throw UsageError("unknown sequence id '" + id_name + "' (expected D, DD, DB, DDQ or DBQ)");
    if (from < 1 || from > to) throw UsageError("need 1 <= from <= to");
    Format format;
    if (format_name == "csv") {
        format = Format::Csv;
    } else if (format_name == "bfile") {
        format = Format::BFile;
    } else {
        throw UsageError("unknown format '" + format_name + "' (expected csv or bfile)");
    }
    write_sequence(*id, from, to, format, out, err);
    return kExitOk;
}

int cmd_powersum(const std::string& m_text, const std::string& r_text, std::uint64_t n,
                 const std::optional<std::uint64_t>& x, std::ostream& out) {
    BigInt m, r;
    if (m.set_str(m_text, 10) != 0 || r.set_str(r_text, 10) != 0) throw UsageError("m and r must be integers");
    if (m < 1) throw UsageError("m must be >= 1");
    if (r < 0) throw UsageError("r must be >= 0");
    const std::string name = "SP_{" + m.get_str() + "," + r.get_str() + "}^" + std::to_string(n) + "(x)";

    if (n == 0) {
        // Every term is 1, so SP^0(x) = x.
        out << name << " = x\n";
        out << "coefficients: 1/1, 0/1\n";
        out << "denominator: 1\n";
        out << "integral: yes\n";
        if (x) {
            out << "value at x=" << *x << ": " << *x << "\n";
            out << "naive sum: " << *x << "\n";
            out << "match: yes\n";
        }
        return kExitOk;
    }

    BernoulliCache cache;
    const ProgressionSpec spec(m, r, n);
    const RationalPoly poly = power_sum_poly(cache, spec);
    const BigInt closed = power_sum_denominator(spec);
    const BigInt direct = denom_poly(poly);
    const bool integral = is_integral(spec);

    out << name << " = " << format_poly(poly) << "\n";
    out << "coefficients: " << coefficient_list(poly) << "\n";
    out << "denominator: " << closed << "\n";
    out << "integral: " << (integral ? "yes" : "no") << "\n";
    bool consistent = direct == closed && integral == (closed == 1);
    if (direct != closed) out << "MISMATCH: coefficient denominator " << direct << "\n";
    if (x) {
        const Rational at = poly(Rational(static_cast<unsigned long>(*x)));
        const BigInt naive = power_sum_naive(spec, *x);
        const bool match = at == Rational(naive);
        out << "value at x=" << *x << ": " << at.get_str() << "\n";
        out << "naive sum: " << naive << "\n";
        out << "match: " << (match ? "yes" : "NO") << "\n";
        consistent = consistent && match;
    }
    return consistent ? kExitOk : kExitTheoremViolation;
}

int cmd_verify(const std::string& id_name, SweepOptions opts, std::ostream& out) {
    auto id = parse_theorem_id(id_name);
    if (!id) throw UsageError("unknown theorem id '" + id_name + "'");
    if (opts.max_n < 1) throw UsageError("--max must be >= 1");
    const SweepReport report = run_sweep(*id, opts);
    const double seconds = std::chrono::duration<double>(report.elapsed).count();
    out << to_string(report.id) << " [" << report.range << "]: " << report.checked << " checked, "
        << report.failures.size() << " failures (" << std::fixed << std::setprecision(3) << seconds << " s)\n";
    for (const auto& f : report.failures) {
        out << "  FAIL " << f.input << ": expected " << f.expected << ", got " << f.actual << "\n";
    }
    return report.ok() ? kExitOk : kExitVerifyFailed;
}

int cmd_bench(const std::string& id_name, std::uint64_t from, std::uint64_t to, unsigned reps, std::uint64_t chunk,
              std::ostream& out) {
    auto id = parse_sequence_id(id_name);
    if (!id || (*id != SequenceId::D && *id != SequenceId::DD && *id != SequenceId::DB)) {
        throw UsageError("bench supports D, DD and DB");
    }
    if (from < 1 || from > to) throw UsageError("need 1 <= from <= to");
    if (reps < 1) throw UsageError("--reps must be >= 1");
    if (chunk == 0) chunk = to - from + 1;

    std::vector<BenchRecord> records;
    for (std::uint64_t lo = from; lo <= to; lo += chunk) {
        records.push_back(run_bench(*id, lo, std::min(to, lo + chunk - 1), reps));
    }
    out << "sequence,from,to,reps,formula_ns,oracle_ns,speedup\n";
    for (const auto& r : records) {
        out << to_string(r.sequence) << ',' << r.from << ',' << r.to << ',' << r.reps << ','
            << r.formula_time.count() << ',' << r.oracle_time.count() << ',' << std::fixed << std::setprecision(2)
            << r.speedup.get_d() << "\n";
    }
    return kExitOk;
}

}  // namespace

std::optional<SequenceId> parse_sequence_id(std::string_view name) {
    if (name == "D") return SequenceId::D;
    if (name == "DD") return SequenceId::DD;
    if (name == "DB") return SequenceId::DB;
    if (name == "DDQ") return SequenceId::DDQ;
    if (name == "DBQ") return SequenceId::DBQ;
    return std::nullopt;
}

std::string_view to_string(SequenceId id) {
    switch (id) {
        case SequenceId::D: return "D";
        case SequenceId::DD: return "DD";
        case SequenceId::DB: return "DB";
        case SequenceId::DDQ: return "DDQ";
        case SequenceId::DBQ: return "DBQ";
    }
    return "?";
}

bool has_index(SequenceId id, std::uint64_t n) {
    if (n < 1) return false;
    if (id == SequenceId::DDQ) return n % 2 == 1;
    if (id == SequenceId::DBQ) return n % 2 == 0;
    return true;
}

BigInt sequence_term(SequenceId id, std::uint64_t n) {
    switch (id) {
        case SequenceId::D: return D_formula(n).value();
        case SequenceId::DD: return DD_formula(n).value();
        case SequenceId::DB: return DB_formula(n).value();
        case SequenceId::DDQ: return dd_quotient(n);
        case SequenceId::DBQ: return db_quotient(n);
    }
    throw DomainError("unknown sequence");
}

void write_sequence(SequenceId id, std::uint64_t from, std::uint64_t to, Format format, std::ostream& out,
                    std::ostream& notes) {
    if (from < 1 || from > to) throw DomainError("need 1 <= from <= to");
    if (format == Format::Csv) out << "n,a_n\n";
    std::uint64_t skipped = 0;
    for (std::uint64_t n = from; n <= to; ++n) {
        if (!has_index(id, n)) {
            ++skipped;
            continue;
        }
        const BigInt v = sequence_term(id, n);
        out << n << (format == Format::Csv ? ',' : ' ') << v.get_str() << '\n';
    }
    if (skipped != 0) {
        notes << "note: skipped " << skipped << " index(es) outside " << to_string(id) << " ("
              << (id == SequenceId::DDQ ? "odd" : "even") << " n only)\n";
    }
}

std::vector<std::pair<BigInt, BigInt>> parse_bfile(std::istream& in) {
    std::vector<std::pair<BigInt, BigInt>> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string a, b;
        if (!(ls >> a >> b)) throw DomainError("malformed b-file line: " + line);
        BigInt i, v;
        if (i.set_str(a, 10) != 0 || v.set_str(b, 10) != 0) throw DomainError("malformed b-file line: " + line);
        out.emplace_back(std::move(i), std::move(v));
    }
    return out;
}

BenchRecord run_bench(SequenceId id, std::uint64_t from, std::uint64_t to, unsigned reps) {
    if (from < 1 || from > to) throw DomainError("need 1 <= from <= to");
    if (reps < 1) throw DomainError("reps must be >= 1");

    {
        BernoulliCache cache;
        for (std::uint64_t n = from; n <= to; ++n) {
            const BigInt formula = sequence_term(id, n);
            const BigInt oracle = oracle_term(cache, id, n);
            if (formula != oracle) {
                throw TheoremViolation(std::string(to_string(id)) + "_" + std::to_string(n) + ": formula " +
                                       formula.get_str() + " != direct " + oracle.get_str());
            }
        }
    }

    // Sink defeats dead-code elimination of the timed loops.
    BigInt sink = 0;
    const auto t0 = Clock::now();
    for (unsigned rep = 0; rep < reps; ++rep) {
        for (std::uint64_t n = from; n <= to; ++n) sink += sequence_term(id, n);
    }
    const auto t1 = Clock::now();
    for (unsigned rep = 0; rep < reps; ++rep) {
        BernoulliCache cache;
        for (std::uint64_t n = from; n <= to; ++n) sink += oracle_term(cache, id, n);
    }
    const auto t2 = Clock::now();
    if (sink < 0) throw TheoremViolation("negative denominator");

    const auto formula = std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0) / reps;
    const auto oracle = std::chrono::duration_cast<std::chrono::nanoseconds>(t2 - t1) / reps;
    const Rational speedup = make_rational(BigInt(static_cast<long>(oracle.count())),
                                           BigInt(static_cast<long>(std::max<long long>(1, formula.count()))));
    return BenchRecord{id, from, to, reps, formula, oracle, speedup};
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Denominators of power sums of arithmetic progressions and of Bernoulli polynomials"};
    app.require_subcommand(1);

    std::string seq_id, seq_format = "bfile";
    std::uint64_t seq_from = 1, seq_to = 0;
    auto* seq = app.add_subcommand("seq", "Emit D, DD, DB, DDQ or DBQ as CSV or OEIS b-file");
    seq->add_option("id", seq_id, "Sequence: D, DD, DB, DDQ, DBQ")->required();
    seq->add_option("from,--from", seq_from, "First index")->required();
    seq->add_option("to,--to", seq_to, "Last index")->required();
    seq->add_option("format,--format", seq_format, "csv or bfile")->capture_default_str();

    std::string ps_m, ps_r = "0";
    std::uint64_t ps_n = 1;
    std::optional<std::uint64_t> ps_x;
    auto* ps = app.add_subcommand("powersum", "Print SP_{m,r}^n(x), its denominator and integrality");
    ps->add_option("--m", ps_m, "Common difference (>= 1)")->required();
    ps->add_option("--r", ps_r, "Initial term (>= 0)")->capture_default_str();
    ps->add_option("--n", ps_n, "Exponent (>= 0)")->required();
    ps->add_option("--x", ps_x, "Evaluate at x and cross-check against direct summation");

    std::string verify_id;
    std::optional<std::uint64_t> v_max, v_m_max, v_r_max;
    unsigned v_jobs = std::max(1u, std::thread::hardware_concurrency());
    auto* verify = app.add_subcommand("verify", "Run a theorem verification sweep");
    verify->add_option("theorem", verify_id,
                       "T1-parity, T2-denominator, T3-integrality, C2-relations, T4-quotients, T5-quotients, "
                       "L1-congruence, AM-integrality")
        ->required();
    verify->add_option("--max", v_max, "Largest n (default depends on the theorem)");
    verify->add_option("--m-max", v_m_max, "Largest m");
    verify->add_option("--r-max", v_r_max, "Largest r (|r| for AM-integrality)");
    verify->add_option("--jobs", v_jobs, "Worker threads")->capture_default_str();

    std::string bench_id;
    std::uint64_t bench_from = 1, bench_to = 200, bench_chunk = 0;
    unsigned bench_reps = 3;
    auto* bench = app.add_subcommand("bench", "Time the closed-form route against the direct route");
    bench->add_option("id", bench_id, "Sequence: D, DD, DB")->required();
    bench->add_option("from,--from", bench_from, "First index")->capture_default_str();
    bench->add_option("to,--to", bench_to, "Last index")->capture_default_str();
    bench->add_option("--reps", bench_reps, "Repetitions")->capture_default_str();
    bench->add_option("--chunk", bench_chunk, "Split the range into records of this many indices (0 = one record)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*seq) return cmd_seq(seq_id, seq_from, seq_to, seq_format, out, err);
        if (*ps) return cmd_powersum(ps_m, ps_r, ps_n, ps_x, out);
        if (*verify) {
            auto id = parse_theorem_id(verify_id);
            if (!id) throw UsageError("unknown theorem id '" + verify_id + "'");
            SweepOptions opts = default_sweep_options(*id);
            if (v_max) opts.max_n = *v_max;
            if (v_m_max) opts.m_max = *v_m_max;
            if (v_r_max) opts.r_max = *v_r_max;
            opts.jobs = std::max(1u, v_jobs);
            return cmd_verify(verify_id, opts, out);
        }
        if (*bench) return cmd_bench(bench_id, bench_from, bench_to, bench_reps, bench_chunk, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const TheoremViolation& e) {
        err << "theorem violation: " << e.what() << "\n";
        return kExitTheoremViolation;
    }
    return kExitUsage;
}

}  // namespace psden::cli
