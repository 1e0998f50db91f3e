#include <catch2/catch.hpp>

#include <random>

#include "seqc/aperiodic.hpp"
#include "seqc/gf2poly.hpp"
#include "seqc/periodic.hpp"

using namespace seqc;

TEST_CASE("gf2 gcd basics") {
    const Gf2Poly a = Gf2Poly::x_pow_plus_one(4);  // x^4+1 = (x+1)^4
    const Gf2Poly b = Gf2Poly::x_pow_plus_one(2);  // (x+1)^2
    CHECK(gf2_gcd(a, b) == b);
    CHECK(gf2_gcd(a, Gf2Poly::zero()) == a);
    CHECK(gf2_gcd(Gf2Poly::one(), a) == Gf2Poly::one());
    CHECK_THROWS_AS(gf2_gcd(Gf2Poly::zero(), Gf2Poly::zero()), std::domain_error);
    CHECK(Gf2Poly::zero().degree() == -1);
    CHECK(Gf2Poly::monomial(7).degree() == 7);
}

TEST_CASE("linear_complexity_periodic") {
    CHECK(linear_complexity_periodic(PeriodicSequence(FiniteWord(9))) == 0);
    for (unsigned long t : {1ul, 2ul, 5ul, 12ul, 31ul}) {
        FiniteWord impulse(t);
        impulse.set_bit(0);
        CHECK(linear_complexity_periodic(PeriodicSequence(impulse)) == t);
        FiniteWord ones(t);
        for (unsigned long i = 0; i < t; ++i) ones.set_bit(i);
        CHECK(linear_complexity_periodic(PeriodicSequence(ones)) == 1);
    }
}

TEST_CASE("periodic linear complexity equals Nth complexity of 2T terms") {
    std::mt19937_64 rng(21);
    for (int it = 0; it < 200; ++it) {
        const std::size_t t = 1 + rng() % 40;
        FiniteWord init(t);
        for (std::size_t i = 0; i < t; ++i)
            if (rng() & 1) init.set_bit(i);
        const PeriodicSequence p(init);
        const FiniteWord w = expand(p, 2 * t);
        CHECK(linear_complexity_periodic(p) == linear_complexity_N(w));
    }
}

TEST_CASE("adic_periodic") {
    SECTION("remark 5 pair") {
        const auto fwd = adic_periodic(PeriodicSequence(from_natural(10731, 18)));
        CHECK(fwd.connection == 171);
        CHECK(fwd.lambda_bits == Approx(std::log2(171.0)));
        const auto rev = adic_periodic(PeriodicSequence(from_natural(220752, 18)));
        CHECK(rev.connection == 19);
        CHECK(fwd.divisor * fwd.connection == fwd.modulus);
        CHECK(rev.divisor * rev.connection == rev.modulus);
    }
    SECTION("intro example at T = 12") {
        const auto rep = adic_periodic(PeriodicSequence(from_natural(11, 12)));
        CHECK(rep.value == 11);
        CHECK(rep.connection == 4095);
        CHECK(rep.modulus == 4095);
    }
    SECTION("all ones") {
        FiniteWord ones(10);
        for (int i = 0; i < 10; ++i) ones.set_bit(i);
        const auto rep = adic_periodic(PeriodicSequence(ones));
        CHECK(rep.connection == 1);
        CHECK(rep.lambda_bits == 0.0);
    }
    SECTION("all zeros") {
        const auto rep = adic_periodic(PeriodicSequence(FiniteWord(6)));
        CHECK(rep.connection == 1);
    }
}

TEST_CASE("adic_symmetric_periodic") {
    SECTION("intro example: min lambda = log2(315)") {
        const auto s = adic_symmetric_periodic(PeriodicSequence(from_natural(11, 12)));
        CHECK(s.forward.connection == 4095);
        CHECK(s.backward.connection == 315);
        CHECK(s.forward.connection == 13 * s.backward.connection);
        CHECK(s.min_lambda == Approx(std::log2(315.0)));
    }
    SECTION("palindromic initial vector gives equal reports") {
        const auto s = adic_symmetric_periodic(PeriodicSequence(FiniteWord{1, 0, 1, 1, 0, 1}));
        CHECK(s.forward.connection == s.backward.connection);
        CHECK(s.forward.value == s.backward.value);
    }
    SECTION("remark 5: min lambda = log2(19)") {
        const auto s = adic_symmetric_periodic(PeriodicSequence(from_natural(10731, 18)));
        CHECK(s.min_lambda == Approx(std::log2(19.0)));
    }
}

TEST_CASE("report invariants over random sequences") {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 300; ++it) {
        const std::size_t t = 1 + rng() % 80;
        FiniteWord init(t);
        for (std::size_t i = 0; i < t; ++i)
            if (rng() & 1) init.set_bit(i);
        const auto rep = adic_periodic(PeriodicSequence(init));
        CHECK(rep.divisor * rep.connection == rep.modulus);
        CHECK(rep.modulus == pow2(t) - 1);
        if (rep.value != 0) CHECK(rep.divisor == gcd(rep.modulus, rep.value));
        CHECK(rep.lambda_bits == Approx(log2_natural(rep.connection)));
    }
}

TEST_CASE("verify_reverse_linear_equality") {
    CHECK(verify_reverse_linear_equality(PeriodicSequence(FiniteWord(5))));
    CHECK(verify_reverse_linear_equality(PeriodicSequence(from_natural(11, 12))));
    std::mt19937_64 rng(33);
    for (int it = 0; it < 1000; ++it) {
        const std::size_t t = 1 + rng() % 64;
        FiniteWord init(t);
        for (std::size_t i = 0; i < t; ++i)
            if (rng() & 1) init.set_bit(i);
        CHECK(verify_reverse_linear_equality(PeriodicSequence(init)));
    }
}

TEST_CASE("verify_theorem1") {
    SECTION("worked example p=11, T=12") {
        const auto rep = verify_theorem1(11, 12);
        CHECK(rep.ok);
        CHECK(rep.q == 13);
        CHECK(rep.connection == 4095);
        CHECK(rep.connection == rep.q * rep.connection_rev);
        CHECK(rep.lambda == Approx(std::log2(4095.0)));
        CHECK(rep.lambda - rep.lambda_rev == Approx(std::log2(13.0)));
    }
    SECTION("p=19, T=20 (composite q=25)") {
        const auto rep = verify_theorem1(19, 20);
        CHECK(rep.ok);
        CHECK(rep.q == 25);
        CHECK(rep.connection == pow2(20) - 1);
        CHECK(rep.connection == 25 * rep.connection_rev);
    }
    SECTION("roles interchanged: p=13, T=10") {
        const auto rep = verify_theorem1(13, 10);
        CHECK(rep.ok);
        CHECK(rep.q == 11);
        CHECK(rep.connection == 1023);
        CHECK(rep.connection == 11 * rep.connection_rev);
    }
    SECTION("rejections name the failed condition") {
        CHECK_THROWS_AS(verify_theorem1(9, 12), std::domain_error);    // composite
        CHECK_THROWS_AS(verify_theorem1(7, 12), std::domain_error);    // palindromic
        CHECK_THROWS_AS(verify_theorem1(11, 3), std::domain_error);    // T < bit length
        CHECK_THROWS_WITH(verify_theorem1(11, 11), Catch::Contains("ord_q"));  // 11 not mult of 12
        CHECK_THROWS_WITH(verify_theorem1(11, 60), Catch::Contains("ord_p"));  // 60 mult of 10
    }
}

TEST_CASE("find_valid_T") {
    CHECK(find_valid_T(11) == 12);
    CHECK(find_valid_T(13) == 10);
    CHECK(find_valid_T(83) == 100);
    // ord_307(2) = 102 divides ord_409(2) = 204: no valid T exists
    CHECK_THROWS_AS(find_valid_T(307), StructurallyImpossible);
    CHECK_THROWS_AS(find_valid_T(7), std::domain_error);  // palindromic
}

TEST_CASE("verify_remark6") {
    SECTION("variant A") {
        CHECK(verify_remark6(5, 3, 6, Remark6Variant::A));
        CHECK(verify_remark6(27, 0, 5, Remark6Variant::A));  // k = 0, palindrome 11011
        CHECK_THROWS_AS(verify_remark6(5, 0, 6, Remark6Variant::A), std::domain_error);  // range
        CHECK_THROWS_AS(verify_remark6(11, 1, 5, Remark6Variant::A), std::domain_error);  // not pal
    }
    SECTION("variant B, odd integer palindrome from the worked example") {
        CHECK(verify_remark6(7, 2, 8, Remark6Variant::B));
    }
    SECTION("variant B, window palindromes always give equality") {
        for (unsigned T = 3; T <= 13; ++T) {
            for (unsigned k = 1; k < T - 1; ++k) {
                for (std::uint64_t q = 1; q < (1ull << (T - k - 1)); ++q) {
                    if (!seqc::detail::window_palindromic(Natural(static_cast<unsigned long>(q)),
                                                          T - k))
                        continue;
                    CHECK(verify_remark6(Natural(static_cast<unsigned long>(q)), k, T,
                                         Remark6Variant::B));
                }
            }
        }
    }
    SECTION("variant B rejects out-of-range q") {
        CHECK_THROWS_AS(verify_remark6(9, 1, 5, Remark6Variant::B), std::domain_error);
    }
}

TEST_CASE("verify_mersenne_maximality") {
    CHECK(verify_mersenne_maximality(5));
    CHECK(verify_mersenne_maximality(7));
    CHECK_THROWS_AS(verify_mersenne_maximality(11), std::domain_error);  // 2047 composite
    CHECK_THROWS_AS(verify_mersenne_maximality(4), std::domain_error);
}
