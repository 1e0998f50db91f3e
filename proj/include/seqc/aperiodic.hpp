#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "seqc/bitseq.hpp"
#include "seqc/lattice.hpp"
#include "seqc/natural.hpp"

namespace seqc {

// Witness for the Nth rational complexity: an odd positive q and an f with
// q * S_N(2) == f (mod 2^N) attaining norm = max(q, |f|) = Lambda(S_N).
// Witnesses are deterministic: smallest q first, and for each q the unique
// absolutely-least f in (-2^{N-1}, 2^{N-1}] (the boundary tie goes to
// +2^{N-1}).
struct RationalApproximation {
    Natural q;
    mpz_class f;
    Natural norm;
};

namespace detail {

// Oracle inner loop for N <= 62: iterate odd q, f = absolutely-least
// residue of q*s mod 2^N, stop once q reaches the best norm so far.
// Exact because max(q, |f|) >= q.
struct WitnessU64 {
    std::uint64_t q;
    std::int64_t f;
    std::uint64_t norm;
};

inline WitnessU64 rational_witness_u64(std::uint64_t s, unsigned n) {
    const std::uint64_t mask = (n == 64) ? ~0ull : (1ull << n) - 1;
    const std::uint64_t half = 1ull << (n - 1);
    s &= mask;
    WitnessU64 best{1, 0, 0};
    {
        const std::uint64_t r = s;
        best.f = (r > half) ? static_cast<std::int64_t>(r - mask - 1) : static_cast<std::int64_t>(r);
        const std::uint64_t af = static_cast<std::uint64_t>(best.f < 0 ? -best.f : best.f);
        best.norm = af > 1 ? af : 1;
    }
    for (std::uint64_t q = 3; q < best.norm; q += 2) {
        const std::uint64_t r = (q * s) & mask;  // exact mod 2^n
        const std::int64_t f =
            (r > half) ? static_cast<std::int64_t>(r - mask - 1) : static_cast<std::int64_t>(r);
        const std::uint64_t af = static_cast<std::uint64_t>(f < 0 ? -f : f);
        const std::uint64_t v = af > q ? af : q;
        if (v < best.norm) best = {q, f, v};
    }
    return best;
}

inline std::uint64_t lambda_norm_u64(std::uint64_t s, unsigned n) {
    const std::uint64_t mask = (n == 64) ? ~0ull : (1ull << n) - 1;
    const std::uint64_t half = 1ull << (n - 1);
    s &= mask;
    std::uint64_t best;
    {
        const std::uint64_t r = s;
        const std::uint64_t af = (r > half) ? (mask + 1 - r) : r;
        best = af > 1 ? af : 1;
    }
    for (std::uint64_t q = 3; q < best; q += 2) {
        const std::uint64_t r = (q * s) & mask;
        const std::uint64_t af = (r > half) ? (mask + 1 - r) : r;
        const std::uint64_t v = af > q ? af : q;
        if (v < best) best = v;
    }
    return best;
}

} // namespace detail

struct RationalWitnessMpz {
    Natural q;
    mpz_class f;
    Natural norm;
};

namespace detail {

// Same search as rational_witness_u64 in arbitrary precision; used for
// N > 63 and directly comparable with the 64-bit path below that.
inline RationalWitnessMpz rational_witness_mpz(const Natural& s, std::size_t n) {
    const Natural modulus = pow2(static_cast<unsigned long>(n));
    const Natural half = pow2(static_cast<unsigned long>(n - 1));
    Natural best_q = 1;
    mpz_class best_f = (s > half) ? mpz_class(s - modulus) : mpz_class(s);
    Natural best_norm;
    {
        Natural af = abs(best_f);
        best_norm = af > 1 ? af : Natural(1);
    }
    for (Natural q = 3; q < best_norm; q += 2) {
        Natural r = (q * s) % modulus;
        mpz_class f = (r > half) ? mpz_class(r - modulus) : mpz_class(r);
        Natural af = abs(f);
        Natural v = af > q ? af : q;
        if (v < best_norm) {
            best_q = q;
            best_f = f;
            best_norm = v;
        }
    }
    return {best_q, best_f, best_norm};
}

} // namespace detail

// Exact Nth rational complexity by exhaustive search over odd q (the
// oracle). Cost is O(Lambda * N / 64), i.e. about 2^{N/2} steps on random
// words; see rational_complexity_fast for the reduced-lattice path.
inline RationalApproximation rational_complexity(const FiniteWord& w) {
    const std::size_t n = w.size();
    if (n == 0) throw std::domain_error("rational_complexity: word must be non-empty");
    RationalApproximation out;
    if (n <= 63) {
        const detail::WitnessU64 b = detail::rational_witness_u64(w.value64(), static_cast<unsigned>(n));
        out.q = Natural(static_cast<unsigned long>(b.q));
        out.f = mpz_class(static_cast<long>(b.f));
        out.norm = Natural(static_cast<unsigned long>(b.norm));
        return out;
    }
    const RationalWitnessMpz b = detail::rational_witness_mpz(evaluate2(w), n);
    out.q = b.q;
    out.f = b.f;
    out.norm = b.norm;
    return out;
}

// Reduced-lattice path: Lagrange-reduce (sup norm) the lattice spanned by
// (1, s) and (0, 2^N), enumerate coefficient combinations |a|, |b| <= 8 of
// the reduced basis, keep candidates with odd positive first coordinate
// (negating when it is negative), and take the best norm; each candidate's
// second coordinate is lowered to the absolutely-least residue first ((0,
// 2^N) is a lattice vector, so that is just another basis combination). If
// nothing beats the trivial q = 1 witness, fall back to the oracle. The
// enumeration radius is a tested constant, not a proven one; the oracle
// stays the source of truth and this path is advisory above N = 64.
inline RationalApproximation rational_complexity_fast(const FiniteWord& w) {
    const std::size_t n = w.size();
    if (n == 0) throw std::domain_error("rational_complexity_fast: word must be non-empty");
    const Natural modulus = pow2(static_cast<unsigned long>(n));
    const Natural half = pow2(static_cast<unsigned long>(n - 1));
    const Natural s = evaluate2(w);

    mpz_class trivial_f = (s > half) ? mpz_class(s - modulus) : mpz_class(s);
    Natural trivial_norm = abs(trivial_f);
    if (trivial_norm < 1) trivial_norm = 1;

    LatticeVec u{1, s}, v{0, modulus};
    lagrange_reduce(u, v);

    constexpr int kRadius = 8;
    bool have = false;
    RationalApproximation best;
    for (int a = -kRadius; a <= kRadius; ++a) {
        for (int b = -kRadius; b <= kRadius; ++b) {
            mpz_class q = a * u.a + b * v.a;
            if (q < 0) q = -q;
            if (q == 0 || mpz_even_p(q.get_mpz_t())) continue;
            if (have && q >= best.norm) continue;
            // absolutely-least f for this q
            Natural r = Natural(q * s) % modulus;
            mpz_class f = (r > half) ? mpz_class(r - modulus) : mpz_class(r);
            Natural af = abs(f);
            Natural norm = af > q ? af : Natural(q);
            if (!have || norm < best.norm ||
                (norm == best.norm && (q < best.q || (q == best.q && af < abs(best.f))))) {
                best.q = q;
                best.f = f;
                best.norm = norm;
                have = true;
            }
        }
    }
    if (!have || best.norm >= trivial_norm) return rational_complexity(w);
    return best;
}

// lambda(S_N) = log2(Lambda(S_N))
inline double adic_complexity_N(const FiniteWord& w) {
    return log2_natural(rational_complexity(w).norm);
}

struct SymmetricRational {
    RationalApproximation forward;
    RationalApproximation backward;
    Natural min_norm;
};

inline SymmetricRational symmetric_rational_complexity(const FiniteWord& w) {
    if (w.size() < 2)
        throw std::domain_error("symmetric_rational_complexity: defined for N >= 2");
    SymmetricRational s;
    s.forward = rational_complexity(w);
    s.backward = rational_complexity(reverse(w));
    s.min_norm = s.forward.norm < s.backward.norm ? s.forward.norm : s.backward.norm;
    return s;
}

// Linear complexity profile L(S_1), ..., L(S_N). Entries never decrease and
// every increase at step k+1 lands exactly on k+1 - L(S_k). The shortest
// recurrence for the full word is reported alongside as c_0..c_L with
// c_L = 1 (so s_{n+L} = sum_{l<L} c_l s_{n+l}).
struct ComplexityProfile {
    std::vector<std::uint32_t> entries;
    std::vector<std::uint8_t> recurrence;

    std::uint32_t final_length() const { return entries.empty() ? 0 : entries.back(); }
};

namespace detail {

// Berlekamp-Massey over GF(2) with the connection polynomial anchored at a
// fixed bit so discrepancies are single shift-and-parity steps. N <= 62.
inline unsigned bm_final_u64(std::uint64_t w, unsigned n) {
    constexpr unsigned K = 63;
    std::uint64_t cm = 1ull << K;  // C(x) = 1, coefficient j at bit K - j
    std::uint64_t bm = 1ull << K;
    unsigned L = 0, shift = 1;
    for (unsigned i = 0; i < n; ++i) {
        const unsigned d = __builtin_parityll((cm >> (K - i)) & w);
        if (!d) {
            ++shift;
        } else if (2 * L <= i) {
            const std::uint64_t t = cm;
            cm ^= bm >> shift;
            bm = t;
            L = i + 1 - L;
            shift = 1;
        } else {
            cm ^= bm >> shift;
            ++shift;
        }
    }
    return L;
}

inline void bm_profile_u64(std::uint64_t w, unsigned n, std::uint32_t* out) {
    constexpr unsigned K = 63;
    std::uint64_t cm = 1ull << K;
    std::uint64_t bm = 1ull << K;
    unsigned L = 0, shift = 1;
    for (unsigned i = 0; i < n; ++i) {
        const unsigned d = __builtin_parityll((cm >> (K - i)) & w);
        if (!d) {
            ++shift;
        } else if (2 * L <= i) {
            const std::uint64_t t = cm;
            cm ^= bm >> shift;
            bm = t;
            L = i + 1 - L;
            shift = 1;
        } else {
            cm ^= bm >> shift;
            ++shift;
        }
        out[i] = L;
    }
}

} // namespace detail

inline ComplexityProfile bm_profile(const FiniteWord& w) {
    const std::size_t n = w.size();
    if (n == 0) throw std::domain_error("bm_profile: word must be non-empty");
    ComplexityProfile out;
    out.entries.resize(n);

    // gamma convention: C(x) = sum_j gamma_j x^j, gamma_0 = 1, and
    // sum_j gamma_j s_{i-j} = 0 for L <= i < N.
    std::vector<std::uint8_t> bits(n);
    for (std::size_t i = 0; i < n; ++i) bits[i] = static_cast<std::uint8_t>(w.bit(i));
    std::vector<std::uint8_t> c(n + 1, 0), b(n + 1, 0), t;
    c[0] = b[0] = 1;
    std::size_t L = 0, shift = 1;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint8_t d = bits[i];
        for (std::size_t j = 1; j <= L; ++j) d ^= static_cast<std::uint8_t>(c[j] & bits[i - j]);
        if (d == 0) {
            ++shift;
        } else if (2 * L <= i) {
            t.assign(c.begin(), c.end());
            for (std::size_t j = 0; j + shift <= n; ++j) c[j + shift] ^= b[j];
            b.swap(t);
            L = i + 1 - L;
            shift = 1;
        } else {
            for (std::size_t j = 0; j + shift <= n; ++j) c[j + shift] ^= b[j];
            ++shift;
        }
        out.entries[i] = static_cast<std::uint32_t>(L);
    }
    // report in the leading-coefficient-1 orientation: c_l = gamma_{L-l}
    out.recurrence.resize(L + 1);
    for (std::size_t l = 0; l <= L; ++l) out.recurrence[l] = c[L - l];
    return out;
}

inline std::size_t linear_complexity_N(const FiniteWord& w) {
    if (w.size() == 0) throw std::domain_error("linear_complexity_N: word must be non-empty");
    if (w.size() <= 62) return detail::bm_final_u64(w.value64(), static_cast<unsigned>(w.size()));
    return bm_profile(w).final_length();
}

inline std::size_t symmetric_linear_complexity_N(const FiniteWord& w) {
    const std::size_t a = linear_complexity_N(w);
    const std::size_t b = linear_complexity_N(reverse(w));
    return a < b ? a : b;
}

} // namespace seqc
