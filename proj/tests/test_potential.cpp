#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fgsym/errors.hpp"
#include "fgsym/potential.hpp"

using fgsym::Errc;
using fgsym::FgError;
using fgsym::Potential;

TEST_CASE("normalization collapses equivalent spellings") {
    CHECK(Potential("1.50").text() == "1.5");
    CHECK(Potential("0.500").text() == "0.5");
    CHECK(Potential(".5").text() == "0.5");
    CHECK(Potential("007").text() == "7");
    CHECK(Potential("2.").text() == "2");
    CHECK(Potential("+3").text() == "3");
    CHECK(Potential("10").text() == "10");
    CHECK(Potential("0.001000").text() == "0.001");
}

TEST_CASE("equality is exact on the normalized form") {
    CHECK(Potential("1.50") == Potential("1.5"));
    CHECK(Potential("0.5") == Potential(".500"));
    CHECK_FALSE(Potential("1.5") == Potential("1.51"));
    CHECK_FALSE(Potential("2") == Potential("20"));
}

TEST_CASE("zero and negatives are rejected") {
    CHECK_THROWS_AS(Potential("0"), FgError);
    CHECK_THROWS_AS(Potential("0.000"), FgError);
    CHECK_THROWS_AS(Potential("-1"), FgError);
    try {
        Potential("0");
        FAIL("expected throw");
    } catch (const FgError& e) {
        CHECK(e.code() == Errc::NonPositivePotential);
    }
}

TEST_CASE("malformed decimals are rejected") {
    CHECK_THROWS_AS(Potential(""), FgError);
    CHECK_THROWS_AS(Potential("."), FgError);
    CHECK_THROWS_AS(Potential("1.2.3"), FgError);
    CHECK_THROWS_AS(Potential("1e3"), FgError);
    CHECK_THROWS_AS(Potential("abc"), FgError);
    CHECK_THROWS_AS(Potential(" 1"), FgError);
}
