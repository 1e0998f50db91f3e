#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "seqc/bitseq.hpp"

namespace seqc {

// Polynomial over GF(2), coefficients packed 64 per limb (bit j of the
// array = coefficient of x^j). Canonical form: no stored limbs above the
// degree. The zero polynomial reports degree -1.
class Gf2Poly {
public:
    Gf2Poly() = default;

    static Gf2Poly zero() { return Gf2Poly(); }

    static Gf2Poly one() {
        Gf2Poly p;
        p.limbs_.push_back(1);
        return p;
    }

    // x^e
    static Gf2Poly monomial(std::size_t e) {
        Gf2Poly p;
        p.limbs_.assign(e / 64 + 1, 0);
        p.limbs_[e / 64] = std::uint64_t{1} << (e % 64);
        return p;
    }

    // x^t + 1 (== x^t - 1 over GF(2))
    static Gf2Poly x_pow_plus_one(std::size_t t) {
        Gf2Poly p = monomial(t);
        p.limbs_[0] |= 1;
        return p;
    }

    // S_T(x) = sum_n s_n x^n for a finite word.
    static Gf2Poly from_word(const FiniteWord& w) {
        Gf2Poly p;
        p.limbs_ = w.limbs();
        p.trim();
        return p;
    }

    bool is_zero() const { return limbs_.empty(); }

    // Degree; -1 for the zero polynomial.
    long degree() const {
        if (limbs_.empty()) return -1;
        const std::uint64_t top = limbs_.back();
        return static_cast<long>((limbs_.size() - 1) * 64 + (63 - __builtin_clzll(top)));
    }

    int coeff(std::size_t j) const {
        if (j / 64 >= limbs_.size()) return 0;
        return static_cast<int>((limbs_[j / 64] >> (j % 64)) & 1u);
    }

    bool operator==(const Gf2Poly& o) const { return limbs_ == o.limbs_; }
    bool operator!=(const Gf2Poly& o) const { return !(*this == o); }

    Gf2Poly& operator^=(const Gf2Poly& o) {
        if (o.limbs_.size() > limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
        for (std::size_t i = 0; i < o.limbs_.size(); ++i) limbs_[i] ^= o.limbs_[i];
        trim();
        return *this;
    }

    // this ^= o << sh
    void xor_shifted(const Gf2Poly& o, std::size_t sh) {
        const std::size_t limb_sh = sh / 64;
        const unsigned bit_sh = static_cast<unsigned>(sh % 64);
        const std::size_t need = o.limbs_.size() + limb_sh + 1;
        if (limbs_.size() < need) limbs_.resize(need, 0);
        for (std::size_t i = 0; i < o.limbs_.size(); ++i) {
            limbs_[i + limb_sh] ^= o.limbs_[i] << bit_sh;
            if (bit_sh) limbs_[i + limb_sh + 1] ^= o.limbs_[i] >> (64 - bit_sh);
        }
        trim();
    }

private:
    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    }

    std::vector<std::uint64_t> limbs_;
};

// Euclidean gcd by degree-aligned xor reduction. gcd(a, 0) = a.
inline Gf2Poly gf2_gcd(Gf2Poly a, Gf2Poly b) {
    if (a.is_zero() && b.is_zero())
        throw std::domain_error("gf2_gcd: gcd(0, 0) is undefined");
    while (!b.is_zero()) {
        // a mod b
        while (a.degree() >= b.degree() && !a.is_zero())
            a.xor_shifted(b, static_cast<std::size_t>(a.degree() - b.degree()));
        std::swap(a, b);
    }
    return a;
}

} // namespace seqc
