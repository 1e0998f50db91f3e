#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "seqc/natural.hpp"

namespace seqc::reference {

// Published reference values used by --check-paper. Embedded as data so the
// comparison needs no files or network. Values are stored exactly as
// printed; see check routines for how mismatches are reported.

struct PairRow {
    std::uint64_t p, q, ord_p, ord_q;
};

// Reversible prime pairs (p, q), p < q, with the printed orders of 2.
inline constexpr std::array<PairRow, 15> kPrimePrimePairs{{
    {11, 13, 10, 12},
    {23, 29, 11, 28},
    {37, 41, 36, 20},
    {43, 53, 14, 52},
    {47, 61, 23, 60},
    {67, 97, 66, 48},
    {71, 113, 35, 28},
    {83, 101, 82, 100},
    {131, 193, 130, 96},
    {151, 233, 15, 29},
    {163, 197, 162, 196},
    {167, 229, 83, 76},
    {173, 181, 172, 180},
    {199, 227, 99, 226},
    {223, 251, 37, 50},
}};

// Reversible pairs with prime p and composite q, as printed. Note: the
// printed ord_p column is known to disagree with the true multiplicative
// orders in 11 of these rows (e.g. the 239 row prints 7, yet 2^7 - 1 = 127
// is prime, so ord_239(2) cannot be 7; it is 119). The check routine
// reports such rows instead of hiding them.
inline constexpr std::array<PairRow, 14> kPrimeCompositePairs{{
    {19, 25, 18, 20},
    {59, 55, 58, 20},
    {79, 121, 13, 110},
    {89, 77, 11, 30},
    {103, 115, 17, 44},
    {109, 91, 108, 12},
    {137, 145, 8, 28},
    {139, 209, 23, 90},
    {149, 169, 25, 156},
    {157, 185, 39, 36},
    {179, 205, 60, 20},
    {191, 253, 30, 110},
    {211, 203, 70, 84},
    {239, 247, 7, 36},
}};

struct DiffRow {
    unsigned N;
    const char* printed;  // decimal string, exactly as printed
};

// E_N^{rat} - E_N^{rat-sym}
inline constexpr std::array<DiffRow, 20> kRatDiffs{{
    {2, "0.25"},    {3, "0.5"},     {4, "0.813"},   {5, "1.344"},   {6, "1.922"},
    {7, "2.813"},   {8, "3.992"},   {9, "5.75"},    {10, "8.168"},  {11, "11.716"},
    {12, "16.706"}, {13, "23.8"},   {14, "34.142"}, {15, "49.254"}, {16, "70.972"},
    {17, "102.296"}, {18, "147.746"}, {19, "213.142"}, {20, "307.238"}, {21, "441.608"},
}};

// E_N^{lin-exp} - E_N^{lin-exp-sym}
inline constexpr std::array<DiffRow, 21> kLinExpDiffs{{
    {2, "0.5"},      {3, "0.75"},    {4, "1.625"},   {5, "2.063"},   {6, "3.656"},
    {7, "4.453"},    {8, "7.539"},   {9, "9.082"},   {10, "15.197"}, {11, "18.255"},
    {12, "30.456"},  {13, "36.5559"}, {14, "60.942"}, {15, "73.135"}, {16, "121.9"},
    {17, "146.282"}, {18, "243.807"}, {19, "292.57"}, {20, "487.618"}, {21, "585.142"},
    {22, "975.237"},
}};

// Exact rational from a plain decimal string like "23.8" or "36.5559".
inline BigRational parse_decimal(const std::string& text) {
    const auto dot = text.find('.');
    const std::string digits =
        dot == std::string::npos ? text : text.substr(0, dot) + text.substr(dot + 1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("parse_decimal: bad literal '" + text + "'");
    const std::size_t frac = dot == std::string::npos ? 0 : text.size() - dot - 1;
    Natural num(digits, 10);
    Natural den = 1;
    for (std::size_t i = 0; i < frac; ++i) den *= 10;
    BigRational r(num, den);
    r.canonicalize();
    return r;
}

} // namespace seqc::reference
