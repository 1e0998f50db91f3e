#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "seqc/bitseq.hpp"
#include "seqc/natural.hpp"

namespace seqc {

// Raised when mult_order_2 cannot finish within its work budget.
class OrderComputationError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, b, m);
        b = mulmod_u64(b, b, m);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin below 2^64: the first twelve primes form a
// valid base set for this range.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) {
        std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Pollard rho (Brent) for 64-bit composites.
inline std::uint64_t pollard_rho_u64(std::uint64_t n) {
    if ((n & 1) == 0) return 2;
    std::uint64_t state = 0x243f6a8885a308d3ULL ^ n;
    while (true) {
        std::uint64_t c = splitmix64(state) % (n - 1) + 1;
        std::uint64_t x = splitmix64(state) % n;
        std::uint64_t y = x, d = 1;
        while (d == 1) {
            x = (mulmod_u64(x, x, n) + c) % n;
            y = (mulmod_u64(y, y, n) + c) % n;
            y = (mulmod_u64(y, y, n) + c) % n;
            d = gcd_u64(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

inline void factor_u64_into(std::uint64_t n, std::vector<std::uint64_t>& primes) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        primes.push_back(n);
        return;
    }
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) {
            primes.push_back(p);
            factor_u64_into(n / p, primes);
            return;
        }
    }
    std::uint64_t d = pollard_rho_u64(n);
    factor_u64_into(d, primes);
    factor_u64_into(n / d, primes);
}

inline std::vector<std::uint64_t> factor_u64(std::uint64_t n) {
    std::vector<std::uint64_t> primes;
    factor_u64_into(n, primes);
    return primes;
}

} // namespace detail

// gcd(a, b) with gcd(a, 0) = a; the pair (0, 0) is rejected.
inline Natural gcd(const Natural& a, const Natural& b) {
    if (a < 0 || b < 0) throw std::domain_error("gcd: arguments must be non-negative");
    if (a == 0 && b == 0) throw std::domain_error("gcd: gcd(0, 0) is undefined");
    Natural r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Primality. Deterministic below 2^64 (fixed Miller-Rabin base set); above,
// 64 Miller-Rabin rounds with bases drawn from a fixed-seed stream, so the
// answer is reproducible. is_prime_certain tells the two regimes apart.
inline bool is_prime(const Natural& n) {
    if (n < 2) return false;
    if (fits_u64(n)) return detail::is_prime_u64(to_u64(n));
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    Natural nm1 = n - 1;
    Natural d = nm1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    std::uint64_t seed = 0xda3e39cb94b95bdbULL;
    Natural a, x;
    for (int round = 0; round < 64; ++round) {
        a = 2 + Natural(static_cast<unsigned long>(detail::splitmix64(seed) >> 1)) % (n - 3);
        mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (x == 1 || x == nm1) continue;
        bool composite = true;
        for (unsigned long r = 1; r < s; ++r) {
            mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
            if (x == nm1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// True when is_prime(n) is a deterministic statement rather than a
// probabilistic one (error < 2^-128).
inline bool primality_is_certain(const Natural& n) { return n < 2 || fits_u64(n); }

// Base-2 digit reversal of an odd positive integer. Oddness guarantees
// s_0 = 1, so the digit count is preserved and the map is an involution.
inline Natural reverse_bits(const Natural& p) {
    if (p < 1 || mpz_even_p(p.get_mpz_t()))
        throw std::domain_error("reverse_bits: argument must be odd and positive");
    const std::size_t t = bit_length(p);
    if (fits_u64(p))
        return Natural(static_cast<unsigned long>(detail::reverse_low_bits(to_u64(p), static_cast<unsigned>(t))));
    Natural r = 0;
    for (std::size_t i = 0; i < t; ++i)
        if (mpz_tstbit(p.get_mpz_t(), i)) mpz_setbit(r.get_mpz_t(), t - 1 - i);
    return r;
}

inline bool is_palindromic(const Natural& p) { return reverse_bits(p) == p; }

// Smallest o >= 1 with 2^o == 1 (mod m); m odd, m >= 3. Small moduli use a
// doubling loop; larger ones factor the group exponent and strip prime
// factors. A blown factoring budget falls back to a capped loop and raises
// OrderComputationError past the cap.
namespace detail {

inline std::uint64_t order2_loop_u64(std::uint64_t m, std::uint64_t cap) {
    std::uint64_t o = 1, x = 2 % m;
    while (x != 1) {
        x = (x * 2) % m;  // m < 2^63 here, no overflow
        if (++o > cap) return 0;
    }
    return o;
}

} // namespace detail

inline Natural mult_order_2(const Natural& m) {
    if (m < 3 || mpz_even_p(m.get_mpz_t()))
        throw std::domain_error("mult_order_2: modulus must be odd and >= 3");
    if (m < (1 << 20)) {
        std::uint64_t o = detail::order2_loop_u64(to_u64(m), to_u64(m));
        return Natural(static_cast<unsigned long>(o));
    }
    // Group exponent: m-1 when m is prime, else lcm of lambda(p^e) over the
    // factorization of m.
    Natural exponent = 0;
    bool have_exponent = false;
    if (is_prime(m)) {
        exponent = m - 1;
        have_exponent = true;
    } else if (fits_u64(m)) {
        std::uint64_t mm = to_u64(m);
        auto primes = detail::factor_u64(mm);
        Natural lam = 1;
        std::uint64_t prev = 0;
        std::uint64_t pe = 1;
        auto fold = [&](std::uint64_t p, std::uint64_t power) {
            Natural lpe = Natural(static_cast<unsigned long>(power / p)) * Natural(static_cast<unsigned long>(p - 1));
            Natural l;
            mpz_lcm(l.get_mpz_t(), lam.get_mpz_t(), lpe.get_mpz_t());
            lam = l;
        };
        std::sort(primes.begin(), primes.end());
        for (std::uint64_t p : primes) {
            if (p == prev) {
                pe *= p;
            } else {
                if (prev) fold(prev, pe);
                prev = p;
                pe = p;
            }
        }
        if (prev) fold(prev, pe);
        exponent = lam;
        have_exponent = true;
    }
    if (have_exponent) {
        // Descend: divide out prime factors of the exponent while 2^(o/r) stays 1.
        Natural o = exponent;
        std::vector<Natural> primes;
        if (fits_u64(exponent)) {
            for (std::uint64_t p : detail::factor_u64(to_u64(exponent))) primes.emplace_back(static_cast<unsigned long>(p));
        } else {
            // Exponent too large to factor exactly: trial-divide a budgeted range,
            // then fall through to the capped loop if anything is left over.
            Natural rest = exponent;
            for (std::uint64_t p = 2; p < (1u << 20); p = (p == 2 ? 3 : p + 2)) {
                while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
                    primes.emplace_back(static_cast<unsigned long>(p));
                    mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
                }
            }
            if (rest != 1) {
                if (is_prime(rest)) {
                    primes.push_back(rest);
                } else {
                    have_exponent = false;  // give up on the factor route
                }
            }
        }
        if (have_exponent) {
            Natural two = 2, x;
            mpz_powm(x.get_mpz_t(), two.get_mpz_t(), o.get_mpz_t(), m.get_mpz_t());
            if (x != 1) throw OrderComputationError("mult_order_2: 2 is not a unit of the expected exponent");
            std::sort(primes.begin(), primes.end());
            primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
            for (const Natural& r : primes) {
                while (mpz_divisible_p(o.get_mpz_t(), r.get_mpz_t())) {
                    Natural cand = o / r;
                    mpz_powm(x.get_mpz_t(), two.get_mpz_t(), cand.get_mpz_t(), m.get_mpz_t());
                    if (x != 1) break;
                    o = cand;
                }
            }
            return o;
        }
    }
    // Fallback: capped doubling loop.
    const std::uint64_t cap = 1ull << 26;
    if (fits_u64(m) && to_u64(m) < (1ull << 62)) {
        std::uint64_t o = detail::order2_loop_u64(to_u64(m), cap);
        if (o) return Natural(static_cast<unsigned long>(o));
    } else {
        Natural x = 2;  // x == 2^o at the top of each iteration
        for (std::uint64_t o = 1; o <= cap; ++o) {
            if (x == 1) return Natural(static_cast<unsigned long>(o));
            x = (x * 2) % m;
            if (x == 1) return Natural(static_cast<unsigned long>(o + 1));
        }
    }
    throw OrderComputationError("mult_order_2: work budget exceeded");
}

// A base-2 reversible pair with the orders of 2 modulo both members.
struct ReversiblePair {
    Natural p;
    Natural q;
    Natural ord_p;
    Natural ord_q;
    bool q_is_prime = false;
};

enum class PairMode { PrimePrime, PrimeComposite };

// All reversible pairs keyed on p with 2^{t-1} < p < 2^t for t in
// [t_min, t_max], sorted by p.
//   PrimePrime: p and q both prime, p < q (so palindromes are excluded).
//   PrimeComposite: p prime, q composite, q != p (q may be smaller than p).
inline std::vector<ReversiblePair> enumerate_reversible_pairs(unsigned t_min, unsigned t_max,
                                                              PairMode mode) {
    if (t_min < 2 || t_min > t_max || t_max > 64)
        throw std::domain_error("enumerate_reversible_pairs: need 2 <= t_min <= t_max <= 64");
    std::vector<ReversiblePair> out;
    for (unsigned t = t_min; t <= t_max; ++t) {
        const std::uint64_t lo = (1ull << (t - 1)) + 1;
        const std::uint64_t hi_last = (t == 64) ? ~0ull : (1ull << t) - 1;
        for (std::uint64_t p = lo; p <= hi_last && p >= lo; p += 2) {
            if (!detail::is_prime_u64(p)) continue;
            const std::uint64_t q = detail::reverse_low_bits(p, t);
            const bool qp = detail::is_prime_u64(q);
            if (mode == PairMode::PrimePrime) {
                if (!(q > p && qp)) continue;
            } else {
                if (q == p || qp) continue;
            }
            ReversiblePair pair;
            pair.p = Natural(static_cast<unsigned long>(p));
            pair.q = Natural(static_cast<unsigned long>(q));
            pair.ord_p = mult_order_2(pair.p);
            pair.ord_q = mult_order_2(pair.q);
            pair.q_is_prime = qp;
            out.push_back(std::move(pair));
        }
    }
    return out;
}

// Number of palindromic primes p with 2^{t-1} < p < 2^t, found by direct
// construction of the palindromes (the low half determines the high half).
inline Natural count_palindromic_primes(unsigned t) {
    if (t < 2 || t > 40) throw std::domain_error("count_palindromic_primes: need 2 <= t <= 40");
    std::uint64_t count = 0;
    const unsigned mid = t - 2;              // freely mirrored positions 1..t-2
    const unsigned h = (mid + 1) / 2;        // independent bits
    for (std::uint64_t m = 0; m < (1ull << h); ++m) {
        std::uint64_t p = 1ull | (1ull << (t - 1));
        for (unsigned j = 0; j < h; ++j) {
            if ((m >> j) & 1u) {
                p |= 1ull << (1 + j);
                p |= 1ull << (t - 2 - j);
            }
        }
        if (detail::is_prime_u64(p)) ++count;
    }
    // count <= 2^{t/2}, checked exactly as count^2 <= 2^t
    if (!(static_cast<unsigned __int128>(count) * count <= (static_cast<unsigned __int128>(1) << t)))
        throw std::logic_error("count_palindromic_primes: bound 2^{t/2} violated");
    return Natural(static_cast<unsigned long>(count));
}

struct ThetaResult {
    Natural count;       // primes p in (2^{t-1}, 2^t) whose reverse is prime
    double heuristic;    // conjectured reference value 3*2^{t-1}/t^2 (heuristic only)
};

// Counts every prime p once, palindromic primes included, so a reversible
// prime pair (p, q) with p != q contributes 2.
inline ThetaResult theta(unsigned t) {
    if (t < 2 || t > 40) throw std::domain_error("theta: need 2 <= t <= 40");
    std::uint64_t count = 0;
    const std::uint64_t lo = (1ull << (t - 1)) + 1;
    const std::uint64_t hi = (1ull << t) - 1;
    for (std::uint64_t p = lo; p <= hi; p += 2) {
        if (detail::is_prime_u64(p) && detail::is_prime_u64(detail::reverse_low_bits(p, t)))
            ++count;
    }
    ThetaResult r;
    r.count = Natural(static_cast<unsigned long>(count));
    r.heuristic = 3.0 * std::ldexp(1.0, static_cast<int>(t) - 1) / (static_cast<double>(t) * t);
    return r;
}

} // namespace seqc
