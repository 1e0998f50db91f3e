#pragma once

#include <atomic>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "seqc/bitseq.hpp"
#include "seqc/gf2poly.hpp"
#include "seqc/natural.hpp"
#include "seqc/numtheory.hpp"
#include "seqc/parallel.hpp"

namespace seqc {

// Periodic 2-adic complexity report. Invariants: divisor * connection ==
// modulus == 2^T - 1, divisor == gcd(modulus, value), lambda_bits ==
// log2(connection). The connection integer is the denominator of the
// rational number whose 2-adic expansion is the sequence; comparisons
// should use it, the float is display-only.
struct PeriodicAdicReport {
    unsigned long T = 0;
    Natural value;       // S_T(2)
    Natural modulus;     // 2^T - 1
    Natural divisor;     // gcd(2^T - 1, S_T(2))
    Natural connection;  // (2^T - 1) / divisor
    double lambda_bits = 0.0;
};

inline PeriodicAdicReport adic_periodic(const PeriodicSequence& p) {
    PeriodicAdicReport r;
    r.T = static_cast<unsigned long>(p.period());
    r.value = evaluate2(p.initial());
    r.modulus = pow2(r.T) - 1;
    r.divisor = (r.value == 0) ? r.modulus : gcd(r.modulus, r.value);
    r.connection = r.modulus / r.divisor;
    r.lambda_bits = log2_natural(r.connection);
    return r;
}

struct SymmetricAdicReport {
    PeriodicAdicReport forward;
    PeriodicAdicReport backward;  // for the reversed initial vector
    double min_lambda = 0.0;
};

inline SymmetricAdicReport adic_symmetric_periodic(const PeriodicSequence& p) {
    SymmetricAdicReport s;
    s.forward = adic_periodic(p);
    s.backward = adic_periodic(PeriodicSequence(reverse(p.initial())));
    // min on the exact connection integers, then take the matching float
    s.min_lambda = (s.backward.connection < s.forward.connection) ? s.backward.lambda_bits
                                                                  : s.forward.lambda_bits;
    return s;
}

// L(S) = deg((x^T - 1) / gcd(x^T - 1, S_T(x))); 0 for the all-zero sequence.
inline std::size_t linear_complexity_periodic(const PeriodicSequence& p) {
    const Gf2Poly s = Gf2Poly::from_word(p.initial());
    if (s.is_zero()) return 0;
    const Gf2Poly mod = Gf2Poly::x_pow_plus_one(p.period());
    const Gf2Poly g = gf2_gcd(mod, s);
    return p.period() - static_cast<std::size_t>(g.degree());
}

// L(S) == L(S^rev) for every periodic sequence; false marks a defect.
inline bool verify_reverse_linear_equality(const PeriodicSequence& p) {
    return linear_complexity_periodic(p) ==
           linear_complexity_periodic(PeriodicSequence(reverse(p.initial())));
}

struct Theorem1Report {
    double lambda = 0.0;
    double lambda_rev = 0.0;
    Natural q;
    Natural connection;
    Natural connection_rev;
    bool ok = false;
};

// The non-palindromic prime construction: initial vector = bits of p padded
// with zeros to length T, where T is a multiple of ord_q(2) but not of
// ord_p(2). Orders are recomputed here rather than taken from the caller.
inline Theorem1Report verify_theorem1(const Natural& p_prime, unsigned long T) {
    if (p_prime < 3 || mpz_even_p(p_prime.get_mpz_t()))
        throw std::domain_error("verify_theorem1: p must be an odd prime > 2");
    if (!is_prime(p_prime)) throw std::domain_error("verify_theorem1: p is composite");
    if (is_palindromic(p_prime)) throw std::domain_error("verify_theorem1: p is palindromic");
    const std::size_t t = bit_length(p_prime);
    if (T < t)
        throw std::domain_error("verify_theorem1: T must be at least the bit length of p");
    const Natural q = reverse_bits(p_prime);
    const Natural ord_q = mult_order_2(q);
    const Natural ord_p = mult_order_2(p_prime);
    if (Natural(T) % ord_q != 0)
        throw std::domain_error("verify_theorem1: condition T == 0 (mod ord_q(2)) fails: ord_q = " +
                                ord_q.get_str());
    if (Natural(T) % ord_p == 0)
        throw std::domain_error("verify_theorem1: condition T != 0 (mod ord_p(2)) fails: ord_p = " +
                                ord_p.get_str());
    const PeriodicSequence seq(from_natural(p_prime, T));
    const SymmetricAdicReport rep = adic_symmetric_periodic(seq);

    Theorem1Report out;
    out.lambda = rep.forward.lambda_bits;
    out.lambda_rev = rep.backward.lambda_bits;
    out.q = q;
    out.connection = rep.forward.connection;
    out.connection_rev = rep.backward.connection;
    out.ok = (out.connection == rep.forward.modulus) &&
             (out.connection_rev * q == rep.forward.modulus);
    return out;
}

// Raised by find_valid_T when ord_p(2) divides ord_q(2): every multiple of
// ord_q is then a multiple of ord_p and no valid T exists at all.
class StructurallyImpossible : public std::domain_error {
    using std::domain_error::domain_error;
};

// Smallest T = k * ord_q(2), 1 <= k <= k_max, with ord_p(2) not dividing T.
inline Natural find_valid_T(const Natural& p_prime, unsigned long k_max = 64) {
    if (p_prime < 3 || mpz_even_p(p_prime.get_mpz_t()) || !is_prime(p_prime))
        throw std::domain_error("find_valid_T: p must be an odd prime > 2");
    if (is_palindromic(p_prime)) throw std::domain_error("find_valid_T: p is palindromic");
    const Natural q = reverse_bits(p_prime);
    const Natural ord_q = mult_order_2(q);
    const Natural ord_p = mult_order_2(p_prime);
    if (ord_q % ord_p == 0)
        throw StructurallyImpossible(
            "find_valid_T: ord_p(2) = " + ord_p.get_str() + " divides ord_q(2) = " +
            ord_q.get_str() + "; every multiple of ord_q is divisible by ord_p");
    for (unsigned long k = 1; k <= k_max; ++k) {
        const Natural T = ord_q * static_cast<unsigned long>(k);
        if (T % ord_p != 0) return T;
    }
    throw std::domain_error("find_valid_T: no valid T with k <= " + std::to_string(k_max));
}

enum class Remark6Variant { A, B };

namespace detail {

// Palindromic as a fixed-width window: bit j == bit (width-1-j) for all j.
inline bool window_palindromic(const Natural& q, std::size_t width) {
    if (q < 0 || bit_length(q) > width) return false;
    for (std::size_t j = 0; 2 * j < width; ++j)
        if (mpz_tstbit(q.get_mpz_t(), j) != mpz_tstbit(q.get_mpz_t(), width - 1 - j)) return false;
    return true;
}

} // namespace detail

// Palindromic-core families with lambda(S) == lambda(S^rev).
//   A: S_T(2) = 2^k * q,          2^{T-k-1} < q < 2^{T-k}, q palindromic
//   B: S_T(2) = 2^k - 1 + 2^k*q,  q < 2^{T-k-1}
// For B the reversal identity S^rev(2) = q + 2^{T-k}(2^k - 1) holds exactly
// when q is palindromic as a (T-k)-bit window (then S^rev(2) == 2^{T-k} *
// S_T(2) mod 2^T-1, which forces the lambda equality). Odd integer
// palindromes are also accepted for B and evaluated honestly; the equality
// is not guaranteed for them.
inline bool verify_remark6(const Natural& q_pal, unsigned long k, unsigned long T,
                           Remark6Variant variant) {
    if (q_pal < 1) throw std::domain_error("verify_remark6: q must be positive");
    if (T < 1 || k >= T) throw std::domain_error("verify_remark6: need 0 <= k < T");
    Natural value;
    if (variant == Remark6Variant::A) {
        if (mpz_even_p(q_pal.get_mpz_t()) || !is_palindromic(q_pal))
            throw std::domain_error("verify_remark6: variant A needs an odd palindromic q");
        if (!(q_pal > pow2(T - k - 1) && q_pal < pow2(T - k)))
            throw std::domain_error("verify_remark6: variant A needs 2^{T-k-1} < q < 2^{T-k}");
        value = pow2(k) * q_pal;
    } else {
        if (!(q_pal < pow2(T - k - 1)))
            throw std::domain_error("verify_remark6: variant B needs q < 2^{T-k-1}");
        const bool window_ok = detail::window_palindromic(q_pal, T - k);
        const bool integer_ok = mpz_odd_p(q_pal.get_mpz_t()) && is_palindromic(q_pal);
        if (!window_ok && !integer_ok)
            throw std::domain_error(
                "verify_remark6: variant B needs q palindromic (as a (T-k)-bit window, or as an odd integer)");
        value = pow2(k) - 1 + pow2(k) * q_pal;
    }
    const PeriodicSequence seq(from_natural(value, T));
    const SymmetricAdicReport rep = adic_symmetric_periodic(seq);
    return rep.forward.connection == rep.backward.connection;
}

// When 2^T - 1 is a Mersenne prime, every non-constant T-periodic sequence
// has the maximal connection integer 2^T - 1. Checked exhaustively over all
// 2^T - 2 non-constant initial vectors.
inline bool verify_mersenne_maximality(unsigned long T, unsigned threads = 0) {
    if (T < 2 || T > 31)
        throw std::domain_error("verify_mersenne_maximality: exhaustive mode supports 2 <= T <= 31");
    if (!detail::is_prime_u64(T) || !detail::is_prime_u64((1ull << T) - 1))
        throw std::domain_error("verify_mersenne_maximality: 2^T - 1 is not a Mersenne prime");
    const std::uint64_t modulus = (1ull << T) - 1;
    std::atomic<bool> all_max{true};
    parallel_chunks(1, modulus, 1u << 16, threads, [&](std::uint64_t, std::uint64_t lo, std::uint64_t hi) {
        bool ok = true;
        for (std::uint64_t v = lo; v < hi; ++v)
            ok &= (std::gcd(v, modulus) == 1);
        if (!ok) all_max.store(false, std::memory_order_relaxed);
    });
    return all_max.load();
}

} // namespace seqc
