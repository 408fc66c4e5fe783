#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kdiv/zeta_q.hpp"
#include "oracles.hpp"

using namespace kdiv;

TEST_CASE("bernoulli examples") {
    CHECK(bernoulli(0) == Rat(1));
    CHECK(bernoulli(1) == Rat(Int(-1), Int(2)));
    CHECK(bernoulli(2) == Rat(Int(1), Int(6)));
    CHECK(bernoulli(4) == Rat(Int(-1), Int(30)));
    CHECK(bernoulli(12) == Rat(Int(-691), Int(2730)));
    CHECK(bernoulli(16) == Rat(Int(-3617), Int(510)));
}

TEST_CASE("bernoulli agrees with the Akiyama-Tanigawa oracle up to 60") {
    for (unsigned long m = 0; m <= 60; ++m)
        CHECK(bernoulli(m) == oracles::bernoulli_akiyama_tanigawa(m));
}

TEST_CASE("odd Bernoulli numbers vanish from 3 on") {
    for (unsigned long m = 3; m <= 59; m += 2)
        CHECK(bernoulli(m) == Rat(0));
}

TEST_CASE("von Staudt-Clausen: denominator of B_m is the product of primes with (p-1) | m") {
    for (unsigned long m = 2; m <= 60; m += 2) {
        Int expected = 1;
        for (std::uint64_t p : oracles::primes_upto(m + 1))
            if (m % (p - 1) == 0)
                expected *= static_cast<unsigned long>(p);
        CHECK(bernoulli(m).den() == expected);
    }
}

TEST_CASE("zeta_q_neg examples") {
    CHECK(zeta_q_neg(2) == Rat(0));
    CHECK(zeta_q_neg(11) == Rat(Int(691), Int(32760)));
    CHECK(zeta_q_neg(3) == Rat(Int(1), Int(120)));
    CHECK(zeta_q_neg(1) == Rat(Int(-1), Int(12)));
    for (unsigned long n = 2; n <= 40; n += 2)
        CHECK(zeta_q_neg(n) == Rat(0));
    CHECK_THROWS_AS(zeta_q_neg(0), HypothesisViolation);
}

TEST_CASE("wn_q examples with factorizations") {
    WnInvariant w12 = wn_q(12);
    CHECK(w12.value == 65520);
    CHECK(w12.factors == std::map<unsigned long, unsigned long>{
                             {2, 4}, {3, 2}, {5, 1}, {7, 1}, {13, 1}});

    WnInvariant w16 = wn_q(16);
    CHECK(w16.value == 16320);
    CHECK(w16.factors ==
          std::map<unsigned long, unsigned long>{{2, 6}, {3, 1}, {5, 1}, {17, 1}});

    CHECK(wn_q(1).value == 2);
    CHECK(wn_q(2).value == 24);
    CHECK(wn_q(4).value == 240);
}

TEST_CASE("wn_q matches the brute-force unit-group-exponent oracle") {
    oracles::CarmichaelTable table(1000000);
    for (unsigned long n = 1; n <= 16; ++n) {
        Int value = wn_q(n).value;
        REQUIRE(value.fits_ulong_p());
        CHECK(value.get_ui() == table.largest_wn(n));
    }
}

TEST_CASE("wn_q factor exponents equal the valuations of the value") {
    for (unsigned long n = 1; n <= 30; ++n) {
        WnInvariant w = wn_q(n);
        for (std::uint64_t l : oracles::primes_upto(n + 2)) {
            auto it = w.factors.find(static_cast<unsigned long>(l));
            unsigned long expected = it == w.factors.end() ? 0 : it->second;
            CHECK(lval(Rat(w.value), Int(static_cast<unsigned long>(l))) ==
                  static_cast<long>(expected));
            if (it != w.factors.end())
                CHECK(it->second >= 1);
        }
    }
}

TEST_CASE("wn_ql examples") {
    CHECK(wn_ql(11, 691) == LPower(691, 0));
    CHECK(wn_ql(4, 5) == LPower(5, 1));
    CHECK(wn_ql(2, 7) == LPower(7, 0));
    CHECK(wn_ql(10, 11) == LPower(11, 1));
    CHECK(wn_ql(6, 3) == LPower(3, 2)); // (3-1) | 6 and v_3(6) = 1
    CHECK_THROWS_AS(wn_ql(3, Int(2)), HypothesisViolation);
    CHECK_THROWS_AS(wn_ql(3, Int(9)), NotPrime);
}

TEST_CASE("wn_ql is trivial for n odd, l odd") {
    int cases = 0;
    for (unsigned long n = 1; n <= 39; n += 2)
        for (std::uint64_t l : oracles::primes_upto(101)) {
            if (l == 2)
                continue;
            CHECK(wn_ql(n, Int(static_cast<unsigned long>(l))).exponent == 0);
            ++cases;
        }
    CHECK(cases >= 100);
}

TEST_CASE("wn_ql equals the global l-part") {
    // The local and global l-parts coincide for odd l.
    for (unsigned long n = 1; n <= 24; ++n) {
        WnInvariant w = wn_q(n);
        for (std::uint64_t l : oracles::primes_upto(n + 2)) {
            if (l == 2)
                continue;
            auto it = w.factors.find(static_cast<unsigned long>(l));
            unsigned long global = it == w.factors.end() ? 0 : it->second;
            CHECK(wn_ql(n, Int(static_cast<unsigned long>(l))).exponent == global);
        }
    }
}
