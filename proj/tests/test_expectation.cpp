#include <catch2/catch.hpp>

#include "seqc/expectation.hpp"
#include "seqc/reference_tables.hpp"

using namespace seqc;

namespace {

Measures rat_only() {
    Measures m;
    m.rat = true;
    return m;
}

Measures linexp_only() {
    Measures m;
    m.linexp = true;
    return m;
}

} // namespace

TEST_CASE("enumerate_expectations at N = 2") {
    const ExpectationRow row = enumerate_expectations(2, Measures::all());
    CHECK(row.e_rat == make_rational(5, 4));
    CHECK(row.e_rat_sym == 1);
    CHECK(row.e_rat - row.e_rat_sym == make_rational(1, 4));
    CHECK(row.e_linexp == make_rational(9, 4));
    CHECK(row.e_linexp_sym == make_rational(7, 4));
    CHECK(row.e_linexp - row.e_linexp_sym == make_rational(1, 2));
    CHECK_THROWS_AS(enumerate_expectations(0, Measures::all()), std::domain_error);
    CHECK_THROWS_AS(enumerate_expectations(25, Measures::all()), std::domain_error);
}

TEST_CASE("table3 and table4 match the reference for small N") {
    const auto t3 = table3(12);
    for (const auto& row : t3) {
        for (const auto& ref : reference::kRatDiffs) {
            if (ref.N != row.N) continue;
            BigRational err = row.diff - reference::parse_decimal(ref.printed);
            if (err < 0) err = -err;
            INFO("N = " << row.N);
            CHECK(err <= make_rational(1, 1000));
        }
    }
    const auto t4 = table4(12);
    for (const auto& row : t4) {
        for (const auto& ref : reference::kLinExpDiffs) {
            if (ref.N != row.N) continue;
            BigRational err = row.diff - reference::parse_decimal(ref.printed);
            if (err < 0) err = -err;
            INFO("N = " << row.N);
            CHECK(err <= make_rational(1, 1000));
        }
    }
    CHECK_THROWS_AS(table3(22), std::domain_error);
    CHECK_THROWS_AS(table4(23), std::domain_error);
    CHECK_THROWS_AS(table3(1), std::domain_error);
}

TEST_CASE("rounding: half-up at 3 decimals, trailing zeros trimmed") {
    CHECK(format_diff_3dp(make_rational(1, 4)) == "0.25");
    CHECK(format_diff_3dp(make_rational(1, 2)) == "0.5");
    CHECK(format_diff_3dp(make_rational(13, 16)) == "0.813");   // 0.8125 rounds up
    CHECK(format_diff_3dp(make_rational(194973, 8192)) == "23.8");
    CHECK(format_diff_3dp(make_rational(3, 1)) == "3");
    CHECK(format_diff_3dp(make_rational(1, 1000)) == "0.001");
    CHECK(format_diff_3dp(make_rational(1, 2000)) == "0.001");  // exactly .0005 rounds up
    CHECK(format_diff_3dp(make_rational(1, 3000)) == "0");
}

TEST_CASE("reference decimal parser") {
    CHECK(reference::parse_decimal("0.25") == make_rational(1, 4));
    CHECK(reference::parse_decimal("23.8") == make_rational(238, 10));
    CHECK(reference::parse_decimal("36.5559") == make_rational(365559, 10000));
    CHECK(reference::parse_decimal("975.237") == make_rational(975237, 1000));
    CHECK_THROWS_AS(reference::parse_decimal("1.2.3"), std::invalid_argument);
}

TEST_CASE("count_by_linear_complexity matches the A_N(L) formula") {
    for (unsigned n = 1; n <= 12; ++n) {
        const auto counts = count_by_linear_complexity(n);
        REQUIRE(counts.size() == n + 1);
        CHECK(counts[0] == 1);
        Natural total = 0;
        for (unsigned l = 0; l <= n; ++l) {
            CHECK(counts[l] == a_n_formula(n, l));
            total += counts[l];
        }
        CHECK(total == pow2(n));
    }
    CHECK(a_n_formula(4, 2) == 8);
    CHECK(a_n_formula(4, 4) == 1);
    CHECK_THROWS_AS(count_by_linear_complexity(21), std::domain_error);
}

TEST_CASE("m_of_w") {
    CHECK(m_of_w(0) == 1);
    CHECK(m_of_w(1) == 3);
    CHECK(m_of_w(3) == 43);
    CHECK(m_of_w(8) == (pow2(18) + 2) / 6);
}

TEST_CASE("linexp closed form") {
    CHECK(linexp_closed_form(2) == make_rational(9, 4));
    CHECK(linexp_proof_expression(2) == 2);
    for (unsigned n = 1; n <= 14; ++n) {
        CHECK(linexp_closed_form(n) - linexp_proof_expression(n) == make_rational(1, pow2(n)));
        if (n <= 12) {
            const auto row = enumerate_expectations(n, linexp_only());
            CHECK(row.e_linexp == linexp_closed_form(n));
        }
    }
}

TEST_CASE("proof constants at N = 2") {
    const ProofConstants pc = proof_constants(2);
    CHECK(pc.M1 == make_rational(1, 4));
    CHECK(pc.M2 == 0);
    CHECK(pc.K1 == make_rational(1, 2));
    CHECK(pc.K2 == 0);
    const auto row = enumerate_expectations(2, Measures::all());
    CHECK(row.e_rat - row.e_rat_sym >= pc.M1 + pc.M2);
    CHECK(row.e_linexp - row.e_linexp_sym >= pc.K1 + pc.K2);
}

TEST_CASE("lower bounds hold for every computed N") {
    for (unsigned n = 2; n <= 12; ++n) {
        const ProofConstants pc = proof_constants(n);
        const auto row = enumerate_expectations(n, Measures::all());
        INFO("N = " << n);
        CHECK(row.e_rat - row.e_rat_sym >= pc.M1 + pc.M2);
        CHECK(row.e_linexp - row.e_linexp_sym >= pc.K1 + pc.K2);
        // e_lin stays within 1 of N/2
        BigRational dev = row.e_lin - make_rational(n, 2);
        if (dev < 0) dev = -dev;
        CHECK(dev <= 1);
    }
}

TEST_CASE("two independent routes to the table differences agree") {
    // direct per-word min versus pairing each word with its reversal and
    // counting each unordered pair once
    for (unsigned n = 2; n <= 10; ++n) {
        const std::uint64_t count = 1ull << n;
        std::vector<std::uint32_t> lam(count);
        std::vector<std::uint8_t> lin(count);
        for (std::uint64_t v = 0; v < count; ++v) {
            lam[v] = static_cast<std::uint32_t>(detail::lambda_norm_u64(v, n));
            lin[v] = static_cast<std::uint8_t>(detail::bm_final_u64(v, n));
        }
        std::uint64_t sum_min = 0, pair_route = 0;
        std::uint64_t sum_min_e = 0, pair_route_e = 0;
        for (std::uint64_t v = 0; v < count; ++v) {
            const std::uint64_t r = detail::reverse_low_bits(v, n);
            sum_min += std::min(lam[v], lam[r]);
            sum_min_e += 1ull << std::min(lin[v], lin[r]);
            if (v < r) {
                pair_route += 2 * std::min(lam[v], lam[r]);
                pair_route_e += 2ull << std::min(lin[v], lin[r]);
            } else if (v == r) {
                pair_route += lam[v];
                pair_route_e += 1ull << lin[v];
            }
        }
        CHECK(sum_min == pair_route);
        CHECK(sum_min_e == pair_route_e);
        // reversal is a bijection: plain sums are reversal-invariant
        std::uint64_t a = 0, b = 0;
        for (std::uint64_t v = 0; v < count; ++v) {
            a += lam[v];
            b += lam[detail::reverse_low_bits(v, n)];
        }
        CHECK(a == b);
    }
}

TEST_CASE("rows are identical across thread counts") {
    for (unsigned threads : {1u, 2u, 3u}) {
        const ExpectationRow row = enumerate_expectations(10, Measures::all(), threads);
        const ExpectationRow ref = enumerate_expectations(10, Measures::all(), 1);
        CHECK(row.e_rat == ref.e_rat);
        CHECK(row.e_rat_sym == ref.e_rat_sym);
        CHECK(row.e_linexp == ref.e_linexp);
        CHECK(row.e_lin == ref.e_lin);
        CHECK(row.e_2adic == ref.e_2adic);          // bit-identical floats
        CHECK(row.e_2adic_sym == ref.e_2adic_sym);
    }
}

TEST_CASE("asymptotics report") {
    const auto rows = asymptotics_report(2, 10);
    REQUIRE(rows.size() == 9);
    for (const auto& r : rows) {
        CHECK(r.e_rat_sym <= r.e_rat);
        CHECK(r.e_lin_sym <= r.e_lin);
        CHECK(r.ratio > 0.0);
        CHECK(r.bound_rat == Approx(std::exp2(r.N / 2.0)));
    }
}
