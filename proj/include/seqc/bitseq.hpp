#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "seqc/natural.hpp"

namespace seqc {

// Thrown by the text parsers; position is the zero-based offset of the
// offending character in the input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

namespace detail {

inline std::uint64_t reverse_u64(std::uint64_t x) {
    x = ((x & 0x5555555555555555ULL) << 1) | ((x >> 1) & 0x5555555555555555ULL);
    x = ((x & 0x3333333333333333ULL) << 2) | ((x >> 2) & 0x3333333333333333ULL);
    x = ((x & 0x0f0f0f0f0f0f0f0fULL) << 4) | ((x >> 4) & 0x0f0f0f0f0f0f0f0fULL);
    return __builtin_bswap64(x);
}

// Reverse the low `width` bits of x (the rest must be zero).
inline std::uint64_t reverse_low_bits(std::uint64_t x, unsigned width) {
    return width == 0 ? 0 : reverse_u64(x) >> (64 - width);
}

} // namespace detail

// A finite binary word (s_0, s_1, ..., s_{N-1}). Bits are packed 64 per
// limb, s_0 in the least significant position of limb 0. Length is stored
// explicitly: leading and trailing zeros are significant, and the empty
// word (N = 0) is a legal value. Immutable after construction.
class FiniteWord {
public:
    FiniteWord() = default;

    explicit FiniteWord(std::size_t n) : size_(n), limbs_((n + 63) / 64, 0) {}

    FiniteWord(std::initializer_list<int> bits) : FiniteWord(bits.size()) {
        std::size_t i = 0;
        for (int b : bits) {
            if (b != 0 && b != 1) throw std::invalid_argument("FiniteWord: bits must be 0 or 1");
            if (b) set_bit(i);
            ++i;
        }
    }

    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }

    int bit(std::size_t i) const {
        if (i >= size_) throw std::out_of_range("FiniteWord::bit: index out of range");
        return static_cast<int>((limbs_[i >> 6] >> (i & 63)) & 1u);
    }

    void set_bit(std::size_t i, int value = 1) {
        if (i >= size_) throw std::out_of_range("FiniteWord::set_bit: index out of range");
        std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value)
            limbs_[i >> 6] |= mask;
        else
            limbs_[i >> 6] &= ~mask;
    }

    // Word value as an integer, valid for N <= 64 only.
    std::uint64_t value64() const {
        if (size_ > 64) throw std::domain_error("FiniteWord::value64: word longer than 64 bits");
        return limbs_.empty() ? 0 : limbs_[0];
    }

    static FiniteWord from_value64(std::uint64_t v, std::size_t n) {
        if (n > 64) throw std::domain_error("FiniteWord::from_value64: length > 64");
        if (n < 64 && (v >> n) != 0)
            throw std::domain_error("FiniteWord::from_value64: value does not fit length");
        FiniteWord w(n);
        if (n > 0) w.limbs_[0] = v;
        return w;
    }

    bool operator==(const FiniteWord& o) const {
        return size_ == o.size_ && limbs_ == o.limbs_;
    }
    bool operator!=(const FiniteWord& o) const { return !(*this == o); }

    // Bit string s_0 s_1 ... s_{N-1}, s_0 leftmost.
    std::string to_string() const {
        std::string s;
        s.reserve(size_);
        for (std::size_t i = 0; i < size_; ++i) s.push_back(bit(i) ? '1' : '0');
        return s;
    }

    const std::vector<std::uint64_t>& limbs() const { return limbs_; }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> limbs_;
};

// (s_0,...,s_{N-1}) -> (s_{N-1},...,s_0)
inline FiniteWord reverse(const FiniteWord& w) {
    const std::size_t n = w.size();
    FiniteWord r(n);
    for (std::size_t i = 0; i < n; ++i)
        if (w.bit(i)) r.set_bit(n - 1 - i);
    return r;
}

// S_N(2) = sum_n s_n 2^n. The empty word evaluates to 0.
inline Natural evaluate2(const FiniteWord& w) {
    if (w.size() == 0) return Natural(0);
    Natural r;
    mpz_import(r.get_mpz_t(), w.limbs().size(), -1 /* LSW first */, sizeof(std::uint64_t),
               0 /* native endian */, 0, w.limbs().data());
    return r;
}

// Inverse of evaluate2: the length-N word whose value is v. Requires v < 2^N.
inline FiniteWord from_natural(const Natural& v, std::size_t n) {
    if (v < 0) throw std::domain_error("from_natural: value must be non-negative");
    if (bit_length(v) > n) throw std::domain_error("from_natural: value >= 2^N");
    FiniteWord w(n);
    if (v == 0) return w;
    std::size_t count = 0;
    std::vector<std::uint64_t> buf((bit_length(v) + 63) / 64);
    mpz_export(buf.data(), &count, -1, sizeof(std::uint64_t), 0, 0, v.get_mpz_t());
    for (std::size_t i = 0; i < count * 64 && i < n; ++i)
        if ((buf[i >> 6] >> (i & 63)) & 1u) w.set_bit(i);
    return w;
}

// A T-periodic binary sequence, defined by its initial vector of length
// exactly T. The implied infinite sequence satisfies s_{n+T} = s_n.
class PeriodicSequence {
public:
    explicit PeriodicSequence(FiniteWord initial) : initial_(std::move(initial)) {
        if (initial_.size() == 0)
            throw std::invalid_argument("PeriodicSequence: period must be >= 1");
    }

    PeriodicSequence(std::size_t period, FiniteWord initial) : initial_(std::move(initial)) {
        if (period == 0)
            throw std::invalid_argument("PeriodicSequence: period must be >= 1");
        if (initial_.size() != period)
            throw std::invalid_argument("PeriodicSequence: initial vector length must equal the period");
    }

    std::size_t period() const { return initial_.size(); }
    const FiniteWord& initial() const { return initial_; }

private:
    FiniteWord initial_;
};

// Materialize s_0..s_{N-1} of the periodic extension.
inline FiniteWord expand(const PeriodicSequence& p, std::size_t n) {
    const FiniteWord& init = p.initial();
    const std::size_t t = p.period();
    FiniteWord w(n);
    for (std::size_t i = 0; i < n; ++i)
        if (init.bit(i % t)) w.set_bit(i);
    return w;
}

// Text formats accepted everywhere the CLI takes a sequence:
//   bits:  a line of '0'/'1' characters, s_0 first
//   nat:   "v/N" or "nat:v/N", decimal value plus explicit length
inline FiniteWord parse_word(std::string_view text) {
    if (text.empty()) throw ParseError("empty sequence", 0);
    std::string_view body = text;
    std::size_t offset = 0;
    if (body.substr(0, 4) == "nat:") {
        body = body.substr(4);
        offset = 4;
        if (body.empty()) throw ParseError("missing value after 'nat:'", offset);
    }
    const std::size_t slash = body.find('/');
    if (slash == std::string_view::npos && offset == 0) {
        const std::size_t bad = body.find_first_not_of("01");
        if (bad != std::string_view::npos)
            throw ParseError("invalid character in bit string", bad);
        FiniteWord w(body.size());
        for (std::size_t i = 0; i < body.size(); ++i)
            if (body[i] == '1') w.set_bit(i);
        return w;
    }
    if (slash == std::string_view::npos)
        throw ParseError("expected 'v/N' after 'nat:'", offset + body.size());
    const std::string_view vpart = body.substr(0, slash);
    const std::string_view npart = body.substr(slash + 1);
    if (vpart.empty()) throw ParseError("missing value before '/'", offset);
    if (npart.empty()) throw ParseError("missing length after '/'", offset + slash + 1);
    for (std::size_t i = 0; i < vpart.size(); ++i)
        if (vpart[i] < '0' || vpart[i] > '9')
            throw ParseError("invalid character in value", offset + i);
    for (std::size_t i = 0; i < npart.size(); ++i)
        if (npart[i] < '0' || npart[i] > '9')
            throw ParseError("invalid character in length", offset + slash + 1 + i);
    Natural v(std::string(vpart), 10);
    unsigned long n = 0;
    try {
        n = std::stoul(std::string(npart));
    } catch (const std::exception&) {
        throw ParseError("length out of range", offset + slash + 1);
    }
    if (n > (1ul << 26))
        throw ParseError("length too large", offset + slash + 1);
    if (bit_length(v) > n)
        throw ParseError("value does not fit in the stated length", offset);
    return from_natural(v, n);
}

} // namespace seqc
