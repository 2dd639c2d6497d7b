#include "doctest.h"
#include "quatrace/embeddings.hpp"

using namespace quatrace;

namespace {
Discriminant dd(long long d) { return Discriminant::decompose(Int(d)); }
} // namespace

TEST_CASE("quaternion spec validation") {
    QuaternionSpec s = QuaternionSpec::make(6, 1);
    CHECK(s.D.value() == 6);
    CHECK(s.N.value() == 1);
    CHECK(s.dn() == 6);
    CHECK(QuaternionSpec::make(10, 3).dn() == 30);
    CHECK(QuaternionSpec::make(22, 7).dn() == 154);

    CHECK_THROWS_AS(QuaternionSpec::make(4, 1), std::invalid_argument);  // not squarefree
    CHECK_THROWS_AS(QuaternionSpec::make(15, 1), std::invalid_argument); // odd
    CHECK_THROWS_AS(QuaternionSpec::make(2, 1), std::invalid_argument);  // one prime factor
    CHECK_THROWS_AS(QuaternionSpec::make(30, 1), std::invalid_argument); // three prime factors
    CHECK_THROWS_AS(QuaternionSpec::make(6, 2), std::invalid_argument);  // N even
    CHECK_THROWS_AS(QuaternionSpec::make(6, 9), std::invalid_argument);  // N not squarefree
    CHECK_THROWS_AS(QuaternionSpec::make(6, 3), std::invalid_argument);  // not coprime
    CHECK_THROWS_AS(QuaternionSpec::make(0, 1), std::invalid_argument);
}

TEST_CASE("eichler symbol") {
    CHECK(eichler_symbol(dd(-12), 2) == 1); // 2 divides the conductor
    CHECK(eichler_symbol(dd(-3), 3) == 0);
    CHECK(eichler_symbol(dd(-4), 3) == -1);
    CHECK(eichler_symbol(dd(-4), 2) == 0);
    CHECK(eichler_symbol(dd(-7), 2) == 1);
    CHECK(eichler_symbol(dd(-63), 3) == 1); // f = 3
    CHECK(eichler_symbol(dd(-63), 7) == 0); // (−7/7) = 0
}

TEST_CASE("local embedding counts") {
    CHECK(e_ramified(dd(-4), 2) == 1);
    CHECK(e_ramified(dd(-3), 3) == 1);
    CHECK(e_ramified(dd(-7), 2) == 0);
    CHECK(e_level_exact(dd(-4), 5) == 2);
    CHECK(e_level_exact(dd(-3), 2) == 0);
    CHECK(e_level_exact(dd(-12), 3) == 1);
}

TEST_CASE("local counts at 2 for level shape 4m") {
    CHECK(e_two_ogg(dd(-4)) == 0);
    CHECK(e_two_ogg(dd(-16)) == 3);
    CHECK(e_two_ogg(dd(-7)) == 2);
    CHECK(e_two_ogg(dd(-3)) == 0);  // 1 + (-3/2) = 1 - 1
    CHECK(e_two_ogg(dd(-12)) == 2); // 3 + (-3/2)
    CHECK(e_two_ogg(dd(-48)) == 3); // 4 | f

    CHECK(e_two_tilde(dd(-4)) == 1);
    CHECK(e_two_tilde(dd(-12)) == 1);
    CHECK(e_two_tilde(dd(-3)) == -1);
    CHECK(e_two_tilde(dd(-16)) == 0);
    CHECK(e_two_tilde(dd(-7)) == 1);
    CHECK(e_two_tilde(dd(-48)) == 0);
}

TEST_CASE("cm counts on X0") {
    CHECK(cm_count_x0(dd(-4), FactoredInt::of_long(1)) == 1);
    CHECK(cm_count_x0(dd(-4), FactoredInt::of_long(5)) == 2);
    CHECK(cm_count_x0(dd(-3), FactoredInt::of_long(2)) == 0);
    CHECK(cm_count_x0(dd(-3), FactoredInt::of_long(3)) == 1);
    CHECK(cm_count_x0(dd(-4), FactoredInt::of_long(12)) == 0);
    CHECK(cm_count_x0(dd(-16), FactoredInt::of_long(4)) == 3);

    CHECK_THROWS_WITH_AS(cm_count_x0(dd(-4), FactoredInt::of_long(8)),
                         "unsupported level shape", std::invalid_argument);
    CHECK_THROWS_AS(cm_count_x0(dd(-4), FactoredInt::of_long(9)), std::invalid_argument);
    CHECK_THROWS_AS(cm_count_x0(dd(-4), FactoredInt::of_long(36)), std::invalid_argument);
    CHECK_THROWS_AS(cm_count_x0(dd(-4), FactoredInt::of_long(50)), std::invalid_argument);
}

TEST_CASE("cm counts on X(D,N)") {
    QuaternionSpec s61 = QuaternionSpec::make(6, 1);
    CHECK(cm_count_xDN(dd(-3), s61) == 2);
    CHECK(cm_count_xDN(dd(-4), s61) == 2);
    CHECK(cm_count_xDN(dd(-7), s61) == 0);
    QuaternionSpec s65 = QuaternionSpec::make(6, 5);
    CHECK(cm_count_xDN(dd(-4), s65) == cm_count_xDN(dd(-4), s61) * e_level_exact(dd(-4), 5));
}

TEST_CASE("cm counts on X'(D,N)") {
    QuaternionSpec s61 = QuaternionSpec::make(6, 1);
    CHECK(cm_count_xprime(dd(-3), s61) == 0);
    CHECK(cm_count_xprime(dd(-12), s61) == 2);
    CHECK(cm_count_xprime(dd(-4), s61) == 6);
    CHECK(cm_count_xprime(dd(-16), s61) == 0); // 2 divides the conductor of -16
    CHECK(cm_count_xprime(dd(-76), s61) == 12); // -76/4 = -19, h(-19) = 1, both primes inert
    CHECK(cm_count_xprime(dd(-8), s61) == 3 * cm_count_xDN(dd(-8), s61));
    QuaternionSpec s101 = QuaternionSpec::make(10, 1);
    CHECK(cm_count_xprime(dd(-20), s101) == 6); // -20/4 = -5 is 3 mod 4, so 3*h(-20)*1*1
    for (long long d = -3; d >= -200; --d) {
        if (!is_discriminant(d)) continue;
        if (mod_floor(Int(d), 4) == 1) CHECK(cm_count_xprime(dd(d), s61) == 0);
        CHECK(cm_count_xprime(dd(d), s61) >= 0);
    }
}
