#pragma once

#include <atomic>
#include <cstdint>
#include <mutex>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "seqc/aperiodic.hpp"
#include "seqc/constructions.hpp"
#include "seqc/expectation.hpp"
#include "seqc/numtheory.hpp"
#include "seqc/parallel.hpp"
#include "seqc/periodic.hpp"
#include "seqc/reference_tables.hpp"

namespace seqc {

struct SuiteResult {
    std::string suite;
    std::uint64_t checks = 0;
    std::vector<std::string> failures;

    bool pass() const { return failures.empty(); }
    void check(bool ok, const std::string& what) {
        ++checks;
        if (!ok) failures.push_back(what);
    }
};

// L(S) == L(S^rev) for periodic sequences: exhaustive over all initial
// vectors up to t_exhaustive, plus seeded random sequences with larger T.
inline SuiteResult suite_lin_eq_sym(unsigned t_exhaustive = 10, std::uint64_t n_random = 10000,
                                    unsigned t_random_max = 128, std::uint64_t seed = 12345) {
    SuiteResult r;
    r.suite = "lin-eq-sym";
    for (unsigned t = 1; t <= t_exhaustive; ++t) {
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << t); ++v) {
            const PeriodicSequence p(FiniteWord::from_value64(v, t));
            if (!verify_reverse_linear_equality(p)) {
                r.check(false, "T=" + std::to_string(t) + " v=" + std::to_string(v));
            } else {
                ++r.checks;
            }
        }
    }
    std::mt19937_64 rng(seed);
    for (std::uint64_t i = 0; i < n_random; ++i) {
        const unsigned t = 1 + static_cast<unsigned>(rng() % t_random_max);
        FiniteWord w(t);
        for (unsigned j = 0; j < t; ++j)
            if (rng() & 1) w.set_bit(j);
        const PeriodicSequence p(w);
        if (!verify_reverse_linear_equality(p)) {
            r.check(false, "random T=" + std::to_string(t) + " i=" + std::to_string(i));
        } else {
            ++r.checks;
        }
    }
    return r;
}

// Mersenne-prime periods force the maximal connection integer.
inline SuiteResult suite_mersenne(const std::vector<unsigned>& periods = {2, 3, 5, 7, 13},
                                  unsigned threads = 0) {
    SuiteResult r;
    r.suite = "mersenne";
    for (unsigned t : periods)
        r.check(verify_mersenne_maximality(t, threads), "T=" + std::to_string(t));
    return r;
}

// The prime construction at every prime from the embedded pair tables
// (both members of a prime pair can play the role of p).
inline SuiteResult suite_theorem1_all() {
    SuiteResult r;
    r.suite = "theorem1-all";
    std::vector<Natural> primes;
    for (const auto& row : reference::kPrimePrimePairs) {
        primes.emplace_back(static_cast<unsigned long>(row.p));
        primes.emplace_back(static_cast<unsigned long>(row.q));
    }
    for (const auto& row : reference::kPrimeCompositePairs)
        primes.emplace_back(static_cast<unsigned long>(row.p));
    for (const Natural& p : primes) {
        try {
            const Natural T = find_valid_T(p);
            const Theorem1Report rep = verify_theorem1(p, T.get_ui());
            r.check(rep.ok && rep.connection == rep.q * rep.connection_rev,
                    "p=" + p.get_str() + " T=" + T.get_str());
        } catch (const StructurallyImpossible&) {
            ++r.checks;  // documented skip: no valid T exists for this prime
        }
    }
    return r;
}

// Every family's displayed claims, swept exhaustively over tails and over
// small palindromic-core instances.
inline SuiteResult suite_families(unsigned n_max = 12) {
    SuiteResult r;
    r.suite = "families";
    auto run = [&](const FamilySpec& spec) {
        const FamilyReport rep = verify_family(spec);
        for (const auto& c : rep.claims)
            r.check(c.pass, std::string(family_name(spec.family)) + ": " + c.name +
                                (c.detail.empty() ? "" : " [" + c.detail + "]"));
    };
    for (Family fam : {Family::Example1, Family::Example2, Family::Example3, Family::Example4}) {
        const bool ones = (fam == Family::Example2 || fam == Family::Example4);
        for (unsigned n = 2; n <= n_max; ++n) {
            for (unsigned k = (ones ? (n + 2) / 2 : (n + 1) / 2); k < n; ++k) {
                for (std::uint64_t tail = 0; tail < (std::uint64_t{1} << (n - k - 1)); ++tail) {
                    FamilySpec spec;
                    spec.family = fam;
                    spec.params["N"] = n;
                    spec.params["k"] = k;
                    spec.params["tail"] = Natural(static_cast<unsigned long>(tail));
                    run(spec);
                }
            }
        }
    }
    for (unsigned long T : {12ul, 24ul, 36ul}) {
        FamilySpec spec;
        spec.family = Family::Intro21;
        spec.params["T"] = T;
        run(spec);
    }
    {
        FamilySpec spec;
        spec.family = Family::Remark5;
        run(spec);
    }
    for (const auto& row : reference::kPrimePrimePairs) {
        FamilySpec spec;
        spec.family = Family::Theorem1;
        spec.params["p"] = Natural(static_cast<unsigned long>(row.p));
        run(spec);
    }
    // Remark 6: variant A over odd palindromes, variant B over window
    // palindromes (the provable family).
    for (unsigned T = 3; T <= 12; ++T) {
        for (unsigned k = 0; k + 1 < T; ++k) {
            for (std::uint64_t q = (1ull << (T - k - 1)) + 1; q < (1ull << (T - k)); q += 2) {
                const Natural qn(static_cast<unsigned long>(q));
                if (!is_palindromic(qn)) continue;
                FamilySpec spec;
                spec.family = Family::Remark6A;
                spec.params["q"] = qn;
                spec.params["k"] = k;
                spec.params["T"] = T;
                run(spec);
            }
            if (k >= 1) {
                const unsigned width = T - k;
                for (std::uint64_t q = 1; q < (1ull << (T - k - 1)); ++q) {
                    const Natural qn(static_cast<unsigned long>(q));
                    if (!seqc::detail::window_palindromic(qn, width)) continue;
                    FamilySpec spec;
                    spec.family = Family::Remark6B;
                    spec.params["q"] = qn;
                    spec.params["k"] = k;
                    spec.params["T"] = T;
                    run(spec);
                }
            }
        }
    }
    return r;
}

// rational_complexity_fast == rational_complexity, exhaustively for short
// words and on seeded random words per length after that.
inline SuiteResult suite_oracle_equivalence(unsigned n_exhaustive = 14,
                                            std::uint64_t random_per_length = 100000,
                                            unsigned len_min = 15, unsigned len_max = 40,
                                            std::uint64_t seed = 12345, unsigned threads = 0) {
    SuiteResult r;
    r.suite = "oracle-equivalence";
    std::atomic<std::uint64_t> checks{0};
    std::mutex mu;
    std::vector<std::string> failures;
    for (unsigned n = 1; n <= n_exhaustive; ++n) {
        parallel_chunks(0, std::uint64_t{1} << n, 1u << 12, threads,
                        [&](std::uint64_t, std::uint64_t lo, std::uint64_t hi) {
                            for (std::uint64_t v = lo; v < hi; ++v) {
                                const FiniteWord w = FiniteWord::from_value64(v, n);
                                const auto fast = rational_complexity_fast(w);
                                const auto slow = rational_complexity(w);
                                checks.fetch_add(1, std::memory_order_relaxed);
                                if (fast.norm != slow.norm) {
                                    std::lock_guard<std::mutex> lk(mu);
                                    failures.push_back("N=" + std::to_string(n) +
                                                       " v=" + std::to_string(v) + " fast=" +
                                                       fast.norm.get_str() + " oracle=" +
                                                       slow.norm.get_str());
                                }
                            }
                        });
    }
    for (unsigned n = len_min; n <= len_max; ++n) {
        // word values derived from a per-length seed so any word is
        // reproducible from (seed, n, i) regardless of the thread count
        parallel_chunks(0, random_per_length, 1u << 10, threads,
                        [&](std::uint64_t, std::uint64_t lo, std::uint64_t hi) {
                            for (std::uint64_t i = lo; i < hi; ++i) {
                                std::uint64_t x = seed ^ (std::uint64_t{n} << 32) ^ i;
                                std::uint64_t v = detail::splitmix64(x);
                                v = (n == 64) ? v : (v & ((std::uint64_t{1} << n) - 1));
                                const FiniteWord w = FiniteWord::from_value64(v, n);
                                const auto fast = rational_complexity_fast(w);
                                const auto slow = rational_complexity(w);
                                checks.fetch_add(1, std::memory_order_relaxed);
                                if (fast.norm != slow.norm) {
                                    std::lock_guard<std::mutex> lk(mu);
                                    failures.push_back("N=" + std::to_string(n) +
                                                       " i=" + std::to_string(i) + " fast=" +
                                                       fast.norm.get_str() + " oracle=" +
                                                       slow.norm.get_str());
                                }
                            }
                        });
    }
    r.checks = checks.load();
    r.failures = std::move(failures);
    return r;
}

// Counting identities: A_N(L) formula vs enumeration, M(W) closed form, and
// the exact E_N^{lin-exp} closed form including its 2^{-N} delta to the
// proof expression.
inline SuiteResult suite_counting(unsigned n_max = 16, unsigned threads = 0) {
    SuiteResult r;
    r.suite = "counting";
    for (unsigned n = 1; n <= n_max; ++n) {
        const auto counts = count_by_linear_complexity(n, threads);
        Natural total = 0;
        for (unsigned l = 0; l <= n; ++l) {
            r.check(counts[l] == a_n_formula(n, l),
                    "A_" + std::to_string(n) + "(" + std::to_string(l) + ") = " +
                        counts[l].get_str() + " formula " + a_n_formula(n, l).get_str());
            total += counts[l];
        }
        r.check(total == pow2(n), "sum A_N(L) == 2^N at N=" + std::to_string(n));
        // sum_L A_N(L) 2^L == 2^N * closed form
        Natural lhs = 0;
        for (unsigned l = 0; l <= n; ++l) lhs += counts[l] * pow2(l);
        r.check(make_rational(lhs, pow2(n)) == linexp_closed_form(n),
                "sum A_N(L) 2^L vs closed form at N=" + std::to_string(n));
        Measures m;
        m.linexp = true;
        const ExpectationRow row = enumerate_expectations(n, m, threads);
        r.check(row.e_linexp == linexp_closed_form(n),
                "enumerated E^linexp == closed form at N=" + std::to_string(n));
        const BigRational delta = linexp_closed_form(n) - linexp_proof_expression(n);
        r.check(delta == make_rational(1, pow2(n)),
                "closed form - proof expression == 2^-N at N=" + std::to_string(n));
    }
    for (unsigned w = 0; w <= 8; ++w) {
        const Natural m = m_of_w(w);
        // against the empirical partial sum at a length where W <= N/2
        const unsigned n = std::max(2 * w, 2u);
        if (n <= 20) {
            const auto counts = count_by_linear_complexity(n, threads);
            Natural partial = 0;
            for (unsigned l = 0; l <= w; ++l) partial += counts[l];
            r.check(partial == m, "M(" + std::to_string(w) + ") empirical");
        }
        r.check(m == (pow2(2 * (w + 1)) + 2) / 6, "M(" + std::to_string(w) + ") closed form");
    }
    return r;
}

} // namespace seqc
