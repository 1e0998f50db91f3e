#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "seqc/aperiodic.hpp"
#include "seqc/bitseq.hpp"
#include "seqc/natural.hpp"
#include "seqc/numtheory.hpp"
#include "seqc/periodic.hpp"

namespace seqc {

// Every explicit sequence family. The Example families expose their tail
// bits as an explicit parameter so sweeps can enumerate them exhaustively.
enum class Family {
    Intro21,    // T-periodic (1,1,0,1,0,...,0), S_T(2) = 11          params: T
    Theorem1,   // bits of a non-palindromic prime, zero padded        params: p, T (T optional)
    Example1,   // 0^k 1 tail, k >= N/2                                params: N, k, tail
    Example2,   // 1^k 0 tail, k >= (N+1)/2                            params: N, k, tail
    Example3,   // words of Example1, linear-complexity claims         params: N, k, tail
    Example4,   // words of Example2, linear-complexity claims         params: N, k, tail
    Remark5,    // the period-18 reversal pair                         params: reversed (0/1)
    Remark6A,   // S_T(2) = 2^k q, palindromic q                       params: q, k, T
    Remark6B,   // S_T(2) = 2^k - 1 + 2^k q                            params: q, k, T
};

inline const char* family_name(Family f) {
    switch (f) {
        case Family::Intro21: return "intro21";
        case Family::Theorem1: return "theorem1";
        case Family::Example1: return "example1";
        case Family::Example2: return "example2";
        case Family::Example3: return "example3";
        case Family::Example4: return "example4";
        case Family::Remark5: return "remark5";
        case Family::Remark6A: return "remark6A";
        case Family::Remark6B: return "remark6B";
    }
    return "?";
}

inline std::optional<Family> family_from_name(const std::string& s) {
    for (Family f : {Family::Intro21, Family::Theorem1, Family::Example1, Family::Example2,
                     Family::Example3, Family::Example4, Family::Remark5, Family::Remark6A,
                     Family::Remark6B}) {
        if (s == family_name(f)) return f;
    }
    return std::nullopt;
}

struct FamilySpec {
    Family family = Family::Example1;
    std::map<std::string, Natural> params;

    const Natural& get(const std::string& key) const {
        auto it = params.find(key);
        if (it == params.end())
            throw std::invalid_argument(std::string(family_name(family)) +
                                        ": missing parameter '" + key + "'");
        return it->second;
    }

    Natural get_or(const std::string& key, const Natural& fallback) const {
        auto it = params.find(key);
        return it == params.end() ? fallback : it->second;
    }

    unsigned long get_ul(const std::string& key) const {
        const Natural& v = get(key);
        if (v < 0 || !v.fits_ulong_p())
            throw std::invalid_argument(std::string(family_name(family)) + ": parameter '" + key +
                                        "' out of range");
        return v.get_ui();
    }
};

using BuildResult = std::variant<FiniteWord, PeriodicSequence>;

namespace detail {

inline void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

// Word value of the Example-1/2 blocks: prefix, then the fixed flip bit at
// position k, then the tail at positions k+1..N-1.
inline FiniteWord example_word(Family fam, unsigned long n, unsigned long k, const Natural& tail) {
    const bool ones = (fam == Family::Example2 || fam == Family::Example4);
    const std::string name = family_name(fam);
    require(n >= 1, name + ": need N >= 1");
    require(k < n, name + ": need k < N");
    if (ones)
        require(2 * k >= n + 1, name + ": needs k >= (N+1)/2, got k=" + std::to_string(k) +
                                    ", N=" + std::to_string(n));
    else
        require(2 * k >= n, name + ": needs k >= N/2, got k=" + std::to_string(k) +
                                ", N=" + std::to_string(n));
    require(tail >= 0 && bit_length(tail) <= n - k - 1,
            name + ": tail must fit in N-k-1 = " + std::to_string(n - k - 1) + " bits");
    Natural value = ones ? (pow2(k) - 1) : pow2(k);
    value += tail * pow2(k + 1);
    return from_natural(value, n);
}

// S_T(2) for the Remark-6 palindromic-core families, range checks included.
inline Natural remark6_value(Family fam, const Natural& q, unsigned long k, unsigned long T) {
    const std::string name = family_name(fam);
    require(q >= 1, name + ": q must be positive");
    require(T >= 1 && k < T, name + ": need 0 <= k < T");
    if (fam == Family::Remark6A) {
        require(mpz_odd_p(q.get_mpz_t()) && is_palindromic(q), name + ": q must be an odd palindrome");
        require(q > pow2(T - k - 1) && q < pow2(T - k), name + ": need 2^{T-k-1} < q < 2^{T-k}");
        return pow2(k) * q;
    }
    require(q < pow2(T - k - 1), name + ": need q < 2^{T-k-1}");
    const bool window_ok = seqc::detail::window_palindromic(q, T - k);
    const bool integer_ok = mpz_odd_p(q.get_mpz_t()) && is_palindromic(q);
    require(window_ok || integer_ok,
            name + ": q must be palindromic (as a (T-k)-bit window, or as an odd integer)");
    return pow2(k) - 1 + pow2(k) * q;
}

} // namespace detail

// Deterministic builder for every family; throws invalid_argument naming
// the violated precondition.
inline BuildResult build(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::Intro21: {
            const unsigned long T = spec.get_ul("T");
            detail::require(T >= 4, "intro21: needs T >= 4");
            return PeriodicSequence(from_natural(11, T));
        }
        case Family::Theorem1: {
            const Natural& p = spec.get("p");
            unsigned long T;
            if (spec.params.count("T")) {
                T = spec.get_ul("T");
            } else {
                const Natural t = find_valid_T(p);
                T = t.get_ui();
            }
            verify_theorem1(p, T);  // validates p and the T conditions
            return PeriodicSequence(from_natural(p, T));
        }
        case Family::Example1:
        case Family::Example3:
            return detail::example_word(spec.family, spec.get_ul("N"), spec.get_ul("k"),
                                        spec.get_or("tail", 0));
        case Family::Example2:
        case Family::Example4:
            return detail::example_word(spec.family, spec.get_ul("N"), spec.get_ul("k"),
                                        spec.get_or("tail", 0));
        case Family::Remark5: {
            const bool reversed = spec.get_or("reversed", 0) != 0;
            const FiniteWord fwd = from_natural(10731, 18);
            if (evaluate2(reverse(fwd)) != 220752)
                throw std::logic_error("remark5: reversal of 10731 is not 220752");
            return PeriodicSequence(reversed ? reverse(fwd) : fwd);
        }
        case Family::Remark6A:
        case Family::Remark6B: {
            const Natural q = spec.params.count("q_pal") ? spec.get("q_pal") : spec.get("q");
            const unsigned long k = spec.get_ul("k");
            const unsigned long T = spec.get_ul("T");
            return PeriodicSequence(from_natural(detail::remark6_value(spec.family, q, k, T), T));
        }
    }
    throw std::invalid_argument("build: unknown family");
}

struct ClaimResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct FamilyReport {
    Family family = Family::Example1;
    std::vector<ClaimResult> claims;
    bool all_pass = true;

    void add(const std::string& name, bool pass, const std::string& detail = "") {
        claims.push_back({name, pass, detail});
        all_pass = all_pass && pass;
    }
};

// Builds the family instance and checks every displayed (in)equality of the
// passage it comes from, reporting pass/fail per claim with the computed
// values.
inline FamilyReport verify_family(const FamilySpec& spec) {
    FamilyReport rep;
    rep.family = spec.family;
    const BuildResult built = build(spec);

    auto detail_str = [](const Natural& lhs, const char* rel, const Natural& rhs) {
        return lhs.get_str() + " " + rel + " " + rhs.get_str();
    };

    switch (spec.family) {
        case Family::Intro21: {
            const auto& seq = std::get<PeriodicSequence>(built);
            const unsigned long T = seq.period();
            const SymmetricAdicReport r = adic_symmetric_periodic(seq);
            rep.add("S_T(2) == 11", r.forward.value == 11, r.forward.value.get_str());
            const Natural rev_expect = 13 * pow2(T - 4);
            rep.add("S_T^rev(2) == 13*2^{T-4}", r.backward.value == rev_expect,
                    detail_str(r.backward.value, "vs", rev_expect));
            if (T % 12 == 0 && T % 10 != 0) {
                rep.add("connection == 2^T-1", r.forward.connection == r.forward.modulus,
                        r.forward.connection.get_str());
                rep.add("connection == 13 * connection_rev",
                        r.forward.connection == 13 * r.backward.connection,
                        detail_str(r.forward.connection, "vs 13*", r.backward.connection));
            }
            break;
        }
        case Family::Theorem1: {
            const auto& seq = std::get<PeriodicSequence>(built);
            const Natural p = evaluate2(seq.initial());
            const Theorem1Report t = verify_theorem1(p, seq.period());
            rep.add("connection(S) == 2^T-1", t.connection == pow2(seq.period()) - 1,
                    t.connection.get_str());
            rep.add("connection(S) == q * connection(S^rev)",
                    t.connection == t.q * t.connection_rev,
                    detail_str(t.connection, "vs q*", t.connection_rev));
            rep.add("ok", t.ok);
            break;
        }
        case Family::Example1: {
            const auto& w = std::get<FiniteWord>(built);
            const unsigned long n = spec.get_ul("N"), k = spec.get_ul("k");
            const SymmetricRational s = symmetric_rational_complexity(w);
            rep.add("Lambda(S_N) == 2^k", s.forward.norm == pow2(k), s.forward.norm.get_str());
            rep.add("2^{N/2} <= Lambda(S_N)", s.forward.norm * s.forward.norm >= pow2(n),
                    s.forward.norm.get_str());
            rep.add("Lambda(S_N^rev) < 2^{N/2}", s.backward.norm * s.backward.norm < pow2(n),
                    s.backward.norm.get_str());
            rep.add("Lambda_sym == Lambda(S_N^rev)", s.min_norm == s.backward.norm,
                    detail_str(s.min_norm, "vs", s.backward.norm));
            break;
        }
        case Family::Example2: {
            const auto& w = std::get<FiniteWord>(built);
            const unsigned long n = spec.get_ul("N"), k = spec.get_ul("k");
            const SymmetricRational s = symmetric_rational_complexity(w);
            rep.add("Lambda(S_N) >= 2^{k-1}+1", s.forward.norm >= pow2(k - 1) + 1,
                    s.forward.norm.get_str());
            rep.add("Lambda(S_N^rev) <= 2^{N-k}", s.backward.norm <= pow2(n - k),
                    s.backward.norm.get_str());
            rep.add("2^{N-k} < Lambda(S_N)", pow2(n - k) < s.forward.norm,
                    s.forward.norm.get_str());
            rep.add("Lambda_sym <= 2^{N-k}", s.min_norm <= pow2(n - k), s.min_norm.get_str());
            break;
        }
        case Family::Example3: {
            const auto& w = std::get<FiniteWord>(built);
            const unsigned long n = spec.get_ul("N"), k = spec.get_ul("k");
            const ComplexityProfile prof = bm_profile(w);
            const std::size_t l_rev = linear_complexity_N(reverse(w));
            rep.add("L(S_{k+1}) == k+1", prof.entries[k] == k + 1, std::to_string(prof.entries[k]));
            rep.add("L(S_N) >= k+1", prof.final_length() >= k + 1,
                    std::to_string(prof.final_length()));
            rep.add("L(S_N^rev) <= N-k", l_rev <= n - k, std::to_string(l_rev));
            break;
        }
        case Family::Example4: {
            const auto& w = std::get<FiniteWord>(built);
            const unsigned long n = spec.get_ul("N"), k = spec.get_ul("k");
            const ComplexityProfile prof = bm_profile(w);
            const std::size_t l_rev = linear_complexity_N(reverse(w));
            rep.add("L(S_k) == 1", prof.entries[k - 1] == 1, std::to_string(prof.entries[k - 1]));
            rep.add("L(S_N) >= k", prof.final_length() >= k, std::to_string(prof.final_length()));
            rep.add("L(S_N^rev) <= N-k+1", l_rev <= n - k + 1, std::to_string(l_rev));
            break;
        }
        case Family::Remark5: {
            // Verify the pair regardless of which member was requested.
            const PeriodicSequence fwd(from_natural(10731, 18));
            const SymmetricAdicReport r = adic_symmetric_periodic(fwd);
            rep.add("S_18(2) == 10731", r.forward.value == 10731, r.forward.value.get_str());
            rep.add("S_18^rev(2) == 220752", r.backward.value == 220752, r.backward.value.get_str());
            rep.add("connection(S) == 171", r.forward.connection == 171,
                    r.forward.connection.get_str());
            rep.add("connection(S^rev) == 19", r.backward.connection == 19,
                    r.backward.connection.get_str());
            rep.add("171 == 9 * 19", r.forward.connection == 9 * r.backward.connection);
            rep.add("connection(S) > connection(S^rev)",
                    r.forward.connection > r.backward.connection);
            rep.add("T == ord_q(2) (l-sequence property)", mult_order_2(19) == 18);
            {
                // least period is exactly 18
                bool minimal = true;
                const FiniteWord& init = fwd.initial();
                for (unsigned long d : {1ul, 2ul, 3ul, 6ul, 9ul}) {
                    bool periodic_d = true;
                    for (std::size_t i = 0; i + d < 18; ++i)
                        periodic_d &= (init.bit(i) == init.bit(i + d));
                    minimal &= !periodic_d;
                }
                rep.add("least period is 18", minimal);
            }
            break;
        }
        case Family::Remark6A:
        case Family::Remark6B: {
            const auto& seq = std::get<PeriodicSequence>(built);
            const SymmetricAdicReport r = adic_symmetric_periodic(seq);
            rep.add("lambda(S) == lambda(S^rev)", r.forward.connection == r.backward.connection,
                    detail_str(r.forward.connection, "vs", r.backward.connection));
            if (spec.family == Family::Remark6B) {
                // displayed reversal value, checked in the gcd-equivalence sense
                const Natural q = spec.params.count("q_pal") ? spec.get("q_pal") : spec.get("q");
                const unsigned long k = spec.get_ul("k"), T = spec.get_ul("T");
                const Natural displayed = q + pow2(T - k) * (pow2(k) - 1);
                const Natural g = displayed == 0 ? r.forward.modulus : gcd(r.forward.modulus, displayed);
                rep.add("gcd(2^T-1, q + 2^{T-k}(2^k-1)) == gcd(2^T-1, S^rev(2))",
                        g == r.backward.divisor, detail_str(g, "vs", r.backward.divisor));
            }
            break;
        }
    }
    return rep;
}

} // namespace seqc
