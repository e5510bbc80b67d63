#include <doctest.h>

#include <orbichern/rational.hpp>

#include <stdexcept>

using namespace orbichern;

TEST_CASE("rationals are stored in lowest terms")
{
    const Rat q = make_rat(6, -4);
    CHECK(q.get_num() == -3);
    CHECK(q.get_den() == 2);
    CHECK(to_string(make_rat(0, 7)) == "0");
    CHECK(make_rat(0, -7).get_den() == 1);
}

TEST_CASE("zero denominators are rejected")
{
    CHECK_THROWS_AS(make_rat(1, 0), std::domain_error);
    CHECK_THROWS_AS(parse_rat("3/0"), std::domain_error);
}

TEST_CASE("parse_rat")
{
    CHECK(parse_rat("1/2") == Rat(1, 2));
    CHECK(parse_rat("-10/4") == Rat(-5, 2));
    CHECK(parse_rat("7") == Rat(7));
    CHECK(parse_rat(" +3 ") == Rat(3));
    CHECK_THROWS_AS(parse_rat("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
}

TEST_CASE("exact integer helpers")
{
    CHECK(factorial(0) == 1);
    CHECK(factorial(20) == Integer("2432902008176640000"));
    CHECK(factorial(25) == Integer("15511210043330985984000000"));
    CHECK(binomial(10, 3) == 120);
    CHECK(pow(Rat(-2, 3), 3) == Rat(-8, 27));
    CHECK(pow(Rat(5, 7), 0) == 1);
}
