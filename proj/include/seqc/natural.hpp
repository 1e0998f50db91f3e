#pragma once

#include <cstdint>
#include <cmath>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace seqc {

// Arbitrary-precision non-negative integer. GMP underneath; every seqc
// operation keeps its Natural arguments and results >= 0.
using Natural = mpz_class;

// Exact rational, reduced form maintained by GMP.
using BigRational = mpq_class;

inline Natural pow2(unsigned long e) {
    Natural r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

inline std::size_t bit_length(const Natural& n) {
    if (n == 0) return 0;
    return mpz_sizeinbase(n.get_mpz_t(), 2);
}

// log2 of a positive Natural as a double, good to an ulp even when the
// value itself does not fit a double.
inline double log2_natural(const Natural& n) {
    if (n <= 0) throw std::domain_error("log2_natural: argument must be positive");
    signed long exp;
    double d = mpz_get_d_2exp(&exp, n.get_mpz_t());
    return std::log2(d) + static_cast<double>(exp);
}

inline bool fits_u64(const Natural& n) {
    return n >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64 && mpz_fits_ulong_p(n.get_mpz_t());
}

inline std::uint64_t to_u64(const Natural& n) {
    return mpz_get_ui(n.get_mpz_t());
}

} // namespace seqc
