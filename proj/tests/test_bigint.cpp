#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>

#include "eqkl/bigint.hpp"

using eqkl::BigInt;

TEST_CASE("small arithmetic matches long long") {
    for (long long a : {-37LL, -1LL, 0LL, 1LL, 99LL, 123456789LL}) {
        for (long long b : {-41LL, -2LL, 0LL, 7LL, 1000003LL}) {
            CHECK(BigInt(a) + BigInt(b) == BigInt(a + b));
            CHECK(BigInt(a) - BigInt(b) == BigInt(a - b));
            CHECK(BigInt(a) * BigInt(b) == BigInt(a * b));
            CHECK((BigInt(a) < BigInt(b)) == (a < b));
        }
    }
}

TEST_CASE("carries across limbs") {
    BigInt x(0xffffffffLL);
    CHECK((x + BigInt(1)).to_decimal() == "4294967296");
    CHECK((x * x).to_decimal() == "18446744065119617025");
    CHECK((x * x - x * x).is_zero());
}

TEST_CASE("decimal round trip") {
    for (const char* s : {"0", "-1", "12345678901234567890123456789",
                          "-340282366920938463463374607431768211456"}) {
        CHECK(BigInt::from_decimal(s).to_decimal() == s);
    }
    CHECK_THROWS_AS(BigInt::from_decimal(""), std::invalid_argument);
    CHECK_THROWS_AS(BigInt::from_decimal("12x"), std::invalid_argument);
}

TEST_CASE("factorials and binomials") {
    CHECK(BigInt::factorial(0) == BigInt(1));
    CHECK(BigInt::factorial(10) == BigInt(3628800));
    CHECK(BigInt::factorial(25).to_decimal() == "15511210043330985984000000");
    CHECK(BigInt::binomial(16, 8) == BigInt(12870));
    CHECK(BigInt::binomial(5, 9).is_zero());
    CHECK(BigInt::binomial(60, 30).to_decimal() == "118264581564861424");
    // Pascal identity on a grid.
    for (unsigned n = 1; n <= 20; ++n) {
        for (unsigned k = 1; k <= n; ++k) {
            CHECK(BigInt::binomial(n, k) ==
                  BigInt::binomial(n - 1, k - 1) + BigInt::binomial(n - 1, k));
        }
    }
}

TEST_CASE("exact division") {
    BigInt x = BigInt::factorial(30);
    CHECK(x.div_exact(30).to_decimal() == BigInt::factorial(29).to_decimal());
    CHECK_THROWS_AS(BigInt(7).div_exact(2), std::logic_error);
    CHECK_THROWS_AS(BigInt(7).div_exact(0), std::logic_error);
    CHECK((-BigInt(42)).div_exact(6) == BigInt(-7));
}

TEST_CASE("to_ll bounds") {
    CHECK(BigInt(-5).to_ll() == -5);
    CHECK(BigInt::from_decimal("9223372036854775807").to_ll() == 9223372036854775807LL);
    CHECK_THROWS_AS(BigInt::from_decimal("9223372036854775808").to_ll(), std::overflow_error);
    CHECK(BigInt::from_decimal("-9223372036854775808").to_ll() ==
          std::numeric_limits<long long>::min());
}
