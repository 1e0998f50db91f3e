#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "seqc/aperiodic.hpp"
#include "seqc/natural.hpp"
#include "seqc/numtheory.hpp"
#include "seqc/parallel.hpp"

namespace seqc {

inline BigRational make_rational(const Natural& num, const Natural& den) {
    BigRational r(num, den);
    r.canonicalize();
    return r;
}

struct Measures {
    bool rat = false;
    bool two_adic = false;
    bool lin = false;
    bool linexp = false;

    static Measures all() { return {true, true, true, true}; }
    bool needs_rat_memo() const { return rat || two_adic; }
    bool needs_lin_memo() const { return lin || linexp; }
};

// One row of exact expected values over all 2^N words. Lambda- and L-based
// sums are exact rationals with denominator 2^N; the 2-adic (log-scale)
// means are floats, accumulated in a fixed order so rows are bit-identical
// across runs and thread counts.
struct ExpectationRow {
    unsigned N = 0;
    BigRational e_rat, e_rat_sym;
    BigRational e_linexp, e_linexp_sym;
    BigRational e_lin, e_lin_sym;
    double e_2adic = 0.0, e_2adic_sym = 0.0;
    Measures computed;
};

namespace detail {

// Lambda norms for every word value of length n, indexed by value.
inline std::vector<std::uint32_t> lambda_memo(unsigned n, unsigned threads) {
    std::vector<std::uint32_t> memo(std::size_t{1} << n);
    parallel_chunks(0, memo.size(), 1u << 14, threads,
                    [&](std::uint64_t, std::uint64_t lo, std::uint64_t hi) {
                        for (std::uint64_t v = lo; v < hi; ++v)
                            memo[v] = static_cast<std::uint32_t>(lambda_norm_u64(v, n));
                    });
    return memo;
}

// Final linear complexity for every word value of length n.
inline std::vector<std::uint8_t> lin_memo(unsigned n, unsigned threads) {
    std::vector<std::uint8_t> memo(std::size_t{1} << n);
    parallel_chunks(0, memo.size(), 1u << 14, threads,
                    [&](std::uint64_t, std::uint64_t lo, std::uint64_t hi) {
                        for (std::uint64_t v = lo; v < hi; ++v)
                            memo[v] = static_cast<std::uint8_t>(bm_final_u64(v, n));
                    });
    return memo;
}

// Deterministic float mean: per-block partial sums combined in block order.
template <class Term>
double fixed_order_mean(std::uint64_t count, Term&& term) {
    constexpr std::uint64_t kBlock = 1u << 12;
    double total = 0.0;
    for (std::uint64_t lo = 0; lo < count; lo += kBlock) {
        const std::uint64_t hi = std::min(count, lo + kBlock);
        double part = 0.0;
        for (std::uint64_t v = lo; v < hi; ++v) part += term(v);
        total += part;
    }
    return total / static_cast<double>(count);
}

} // namespace detail

// Exact expected values of the requested measures over all 2^N words.
// Symmetric companions are always computed, via bit-reversed index lookups
// into the same memo (never by recomputing the reversed word from scratch).
inline ExpectationRow enumerate_expectations(unsigned n, Measures measures, unsigned threads = 0) {
    if (n < 1 || n > 24)
        throw std::domain_error("enumerate_expectations: need 1 <= N <= 24");
    ExpectationRow row;
    row.N = n;
    row.computed = measures;
    const std::uint64_t count = std::uint64_t{1} << n;
    const Natural den = pow2(n);

    if (measures.needs_rat_memo()) {
        const auto memo = detail::lambda_memo(n, threads);
        std::uint64_t sum = 0, sum_sym = 0;
        for (std::uint64_t v = 0; v < count; ++v) {
            const std::uint32_t a = memo[v];
            const std::uint32_t b = memo[detail::reverse_low_bits(v, n)];
            sum += a;
            sum_sym += a < b ? a : b;
        }
        row.e_rat = make_rational(Natural(sum), den);
        row.e_rat_sym = make_rational(Natural(sum_sym), den);
        if (measures.two_adic) {
            row.e_2adic = detail::fixed_order_mean(count, [&](std::uint64_t v) {
                return std::log2(static_cast<double>(memo[v]));
            });
            row.e_2adic_sym = detail::fixed_order_mean(count, [&](std::uint64_t v) {
                return std::log2(static_cast<double>(
                    std::min(memo[v], memo[detail::reverse_low_bits(v, n)])));
            });
        }
    }
    if (measures.needs_lin_memo()) {
        const auto memo = detail::lin_memo(n, threads);
        std::uint64_t sum_l = 0, sum_l_sym = 0, sum_e = 0, sum_e_sym = 0;
        for (std::uint64_t v = 0; v < count; ++v) {
            const std::uint8_t a = memo[v];
            const std::uint8_t b = memo[detail::reverse_low_bits(v, n)];
            const std::uint8_t m = a < b ? a : b;
            sum_l += a;
            sum_l_sym += m;
            sum_e += std::uint64_t{1} << a;
            sum_e_sym += std::uint64_t{1} << m;
        }
        row.e_lin = make_rational(Natural(sum_l), den);
        row.e_lin_sym = make_rational(Natural(sum_l_sym), den);
        row.e_linexp = make_rational(Natural(sum_e), den);
        row.e_linexp_sym = make_rational(Natural(sum_e_sym), den);
    }
    return row;
}

// Round an exact rational half-up at 3 decimals and trim trailing zeros
// ("23.800" prints as "23.8"), matching the mixed print precision of the
// reference tables. All arithmetic stays exact.
inline std::string format_diff_3dp(const BigRational& x) {
    if (x < 0) return "-" + format_diff_3dp(BigRational(-x.get_num(), x.get_den()));
    Natural scaled = (x.get_num() * 2000 + x.get_den()) / (2 * x.get_den());
    Natural whole = scaled / 1000;
    Natural frac = scaled % 1000;
    std::string f = frac.get_str();
    f.insert(0, 3 - f.size(), '0');
    while (!f.empty() && f.back() == '0') f.pop_back();
    return f.empty() ? whole.get_str() : whole.get_str() + "." + f;
}

struct TableDiffRow {
    unsigned N = 0;
    BigRational diff;        // exact difference
    std::string rendered;    // half-up 3 decimals, trailing zeros trimmed
};

// E_N^{rat} - E_N^{rat-sym} for N = 2..N_max.
inline std::vector<TableDiffRow> table3(unsigned n_max, unsigned threads = 0) {
    if (n_max < 2 || n_max > 21) throw std::domain_error("table3: need 2 <= N_max <= 21");
    std::vector<TableDiffRow> rows;
    for (unsigned n = 2; n <= n_max; ++n) {
        Measures m;
        m.rat = true;
        const ExpectationRow row = enumerate_expectations(n, m, threads);
        TableDiffRow r;
        r.N = n;
        r.diff = row.e_rat - row.e_rat_sym;
        r.rendered = format_diff_3dp(r.diff);
        rows.push_back(std::move(r));
    }
    return rows;
}

// E_N^{lin-exp} - E_N^{lin-exp-sym} for N = 2..N_max.
inline std::vector<TableDiffRow> table4(unsigned n_max, unsigned threads = 0) {
    if (n_max < 2 || n_max > 22) throw std::domain_error("table4: need 2 <= N_max <= 22");
    std::vector<TableDiffRow> rows;
    for (unsigned n = 2; n <= n_max; ++n) {
        Measures m;
        m.linexp = true;
        const ExpectationRow row = enumerate_expectations(n, m, threads);
        TableDiffRow r;
        r.N = n;
        r.diff = row.e_linexp - row.e_linexp_sym;
        r.rendered = format_diff_3dp(r.diff);
        rows.push_back(std::move(r));
    }
    return rows;
}

// A_N(L): 1 for L = 0, else 2^{min(2L-1, 2N-2L)}.
inline Natural a_n_formula(unsigned n, unsigned l) {
    if (l > n) throw std::domain_error("a_n_formula: need 0 <= L <= N");
    if (l == 0) return Natural(1);
    const unsigned long e = std::min<unsigned long>(2ul * l - 1, 2ul * n - 2ul * l);
    return pow2(e);
}

// Empirical counts of words by final linear complexity, index L.
inline std::vector<Natural> count_by_linear_complexity(unsigned n, unsigned threads = 0) {
    if (n < 1 || n > 20)
        throw std::domain_error("count_by_linear_complexity: need 1 <= N <= 20");
    const auto memo = detail::lin_memo(n, threads);
    std::vector<std::uint64_t> counts(n + 1, 0);
    for (const std::uint8_t l : memo) ++counts[l];
    std::vector<Natural> out;
    out.reserve(counts.size());
    for (std::uint64_t c : counts) out.emplace_back(static_cast<unsigned long>(c));
    return out;
}

// M(W) = sum_{L=0}^{W} A_N(L) for W <= N/2, closed form (4^{W+1} + 2) / 6.
inline Natural m_of_w(unsigned w) {
    const Natural closed = (pow2(2 * (w + 1)) + 2) / 6;
    Natural partial = 1;
    for (unsigned l = 1; l <= w; ++l) partial += pow2(2 * l - 1);
    if (closed != partial) throw std::logic_error("m_of_w: closed form mismatch");
    return closed;
}

// Exact E_N^{lin-exp}, including the L = 0 term:
//   (1 + sum_{L=1}^{floor(N/2)} 2^{3L-1} + sum_{L=floor(N/2)+1}^{N} 2^{2N-L}) / 2^N
inline BigRational linexp_closed_form(unsigned n) {
    if (n < 1) throw std::domain_error("linexp_closed_form: need N >= 1");
    Natural sum = 1;
    for (unsigned l = 1; l <= n / 2; ++l) sum += pow2(3 * l - 1);
    for (unsigned l = n / 2 + 1; l <= n; ++l) sum += pow2(2 * n - l);
    return make_rational(sum, pow2(n));
}

// The proof's expression c*2^{N/2} - 1 - (4/7)*2^{-N} with c = 11/7 (even N)
// or 8*sqrt(2)/7 (odd N); rational in both parities. It omits the L = 0
// contribution, so linexp_closed_form(N) exceeds it by exactly 2^{-N}.
inline BigRational linexp_proof_expression(unsigned n) {
    if (n < 1) throw std::domain_error("linexp_proof_expression: need N >= 1");
    BigRational lead = (n % 2 == 0) ? make_rational(11 * pow2(n / 2), Natural(7))
                                    : make_rational(8 * pow2((n + 1) / 2), Natural(7));
    return lead - 1 - make_rational(Natural(4), 7 * pow2(n));
}

// Exact values of the proof constants M1, M2 (rational-complexity bound)
// and K1, K2 (exponential-linear bound) at a given length. The sums for M2
// and K2 run over k >= ceil((N+1)/2), the constraint of the families they
// count. M1 is asserted against its closed form
// (N-2)/4 + 2^{-ceil(N/2)-1}, and K1 against |K1 - N/2| <= 2.
struct ProofConstants {
    BigRational M1, M2, K1, K2;
};

inline ProofConstants proof_constants(unsigned n) {
    if (n < 2) throw std::domain_error("proof_constants: need N >= 2");
    const Natural den = pow2(n);
    const unsigned half_up = (n + 1) / 2;        // ceil(N/2)
    const unsigned half_up1 = (n + 2) / 2;       // ceil((N+1)/2)
    ProofConstants pc;

    Natural m1 = 0;
    for (unsigned k = half_up; k < n; ++k) m1 += pow2(k) * pow2(n - k - 1);
    {
        const Natural top = pow2(n / 2) - 1;     // sum_{f=1}^{2^{floor(N/2)}-1} f
        m1 -= top * (top + 1) / 2;
    }
    pc.M1 = make_rational(m1, den);
    const BigRational m1_closed =
        make_rational(Natural(n) - 2, Natural(4)) + make_rational(Natural(1), pow2(half_up + 1));
    if (pc.M1 != m1_closed) throw std::logic_error("proof_constants: M1 closed form mismatch");

    mpz_class m2 = 0;
    for (unsigned k = half_up1; k < n; ++k)
        m2 += pow2(n - k - 1) * (pow2(k - 1) + 1 - pow2(n - k));
    pc.M2 = make_rational(m2, den);

    mpz_class k1 = 0;
    for (unsigned k = half_up; k < n; ++k) k1 += pow2(n - 1 - k) * (pow2(k + 1) - pow2(n - k));
    pc.K1 = make_rational(k1, den);
    {
        BigRational dev = pc.K1 - make_rational(Natural(n), Natural(2));
        if (dev < 0) dev = -dev;
        if (n <= 24 && dev > 2) throw std::logic_error("proof_constants: |K1 - N/2| <= 2 violated");
    }

    mpz_class k2 = 0;
    for (unsigned k = half_up1; k < n; ++k) k2 += pow2(n - k - 1) * (pow2(k) - pow2(n - k + 1));
    pc.K2 = make_rational(k2, den);
    return pc;
}

// Report-only comparison of computed expected values with the asymptotic
// bound expressions. Asserts only the two trivial finite-N inequalities
// (symmetric <= ordinary); the last column is the fitted ratio
// (e_rat - e_rat_sym) / 2^{N/2}, printed to inform the growth conjecture,
// never asserted. log(N) is rendered base 2 by convention.
struct AsymptoticsRow {
    unsigned N = 0;
    double e_rat = 0, e_rat_sym = 0;
    double e_2adic = 0, e_2adic_sym = 0;
    double e_lin = 0, e_lin_sym = 0;
    double bound_lin = 0;   // N/2 - log2(N)
    double bound_rat = 0;   // 2^{N/2}
    double ratio = 0;       // (e_rat - e_rat_sym) / 2^{N/2}
};

inline std::vector<AsymptoticsRow> asymptotics_report(unsigned n_min, unsigned n_max,
                                                      unsigned threads = 0) {
    if (n_min < 2 || n_min > n_max || n_max > 24)
        throw std::domain_error("asymptotics_report: need 2 <= N_min <= N_max <= 24");
    std::vector<AsymptoticsRow> rows;
    for (unsigned n = n_min; n <= n_max; ++n) {
        const ExpectationRow e = enumerate_expectations(n, Measures::all(), threads);
        if (e.e_rat_sym > e.e_rat) throw std::logic_error("asymptotics_report: e_rat_sym > e_rat");
        if (e.e_lin_sym > e.e_lin) throw std::logic_error("asymptotics_report: e_lin_sym > e_lin");
        AsymptoticsRow r;
        r.N = n;
        r.e_rat = e.e_rat.get_d();
        r.e_rat_sym = e.e_rat_sym.get_d();
        r.e_2adic = e.e_2adic;
        r.e_2adic_sym = e.e_2adic_sym;
        r.e_lin = e.e_lin.get_d();
        r.e_lin_sym = e.e_lin_sym.get_d();
        r.bound_lin = n / 2.0 - std::log2(static_cast<double>(n));
        r.bound_rat = std::exp2(n / 2.0);
        r.ratio = BigRational(e.e_rat - e.e_rat_sym).get_d() / r.bound_rat;
        rows.push_back(r);
    }
    return rows;
}

} // namespace seqc
