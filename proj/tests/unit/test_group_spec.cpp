#include <doctest.h>

#include <orbichern/group_spec.hpp>

#include <stdexcept>

using namespace orbichern;

TEST_CASE("built-in group specs")
{
    CHECK(GroupSpec::parse("Z").get_if<FreeAbelian>()->rank == 1);
    CHECK(GroupSpec::parse("Z^3").get_if<FreeAbelian>()->rank == 3);
    CHECK(GroupSpec::parse("Z/4").get_if<Cyclic>()->order == 4);
    CHECK(GroupSpec::parse("Zp(5)").get_if<PAdic>()->prime == 5);
    CHECK(GroupSpec::parse("1").get_if<TrivialGroup>() != nullptr);
    CHECK(GroupSpec::parse("Z^2").is_abelian_builtin());

    CHECK_THROWS_AS(GroupSpec::parse("Z^0"), std::invalid_argument);
    CHECK_THROWS_AS(GroupSpec::parse("Z/0"), std::invalid_argument);
    CHECK_THROWS_AS(GroupSpec::parse("Zp(4)"), std::invalid_argument);
    CHECK_THROWS_AS(GroupSpec::parse("Q"), std::invalid_argument);
}

TEST_CASE("to_string round trips")
{
    for (const char *s : {"1", "Z", "Z^2", "Z^4", "Z/6", "Zp(3)", "<a,b | abAB>", "<a | aaa>", "<x,y | xxYY, xyXy>"}) {
        const GroupSpec g = GroupSpec::parse(s);
        CHECK(GroupSpec::parse(g.to_string()).to_string() == g.to_string());
    }
    CHECK(GroupSpec::parse("Z^2").to_string() == "Z^2");
    CHECK(GroupSpec::parse("Z^1").to_string() == "Z");
}

TEST_CASE("presentation text")
{
    const Presentation p = parse_presentation("<a,b | [a,b]>");
    REQUIRE(p.generators.size() == 2);
    REQUIRE(p.relators.size() == 1);
    CHECK(word_to_string(p, p.relators[0]) == "abAB");

    const Presentation q = parse_presentation("<a,b | a^2, b^3, (ab)^2>");
    CHECK(word_to_string(q, q.relators[0]) == "aa");
    CHECK(word_to_string(q, q.relators[1]) == "bbb");
    CHECK(word_to_string(q, q.relators[2]) == "abab");

    const Presentation r = parse_presentation("<a,b | a^-2, ab=ba>");
    CHECK(word_to_string(r, r.relators[0]) == "AA");
    CHECK(word_to_string(r, r.relators[1]) == "abAB");

    CHECK(parse_presentation("<a | >").relators.empty());
    CHECK_THROWS_AS(parse_presentation("<a | b>"), std::invalid_argument);
    CHECK_THROWS_AS(parse_presentation("<a,a | a>"), std::invalid_argument);
    CHECK_THROWS_AS(parse_presentation("<ab | a>"), std::invalid_argument);
    CHECK_THROWS_AS(parse_presentation("a,b | ab"), std::invalid_argument);
}

TEST_CASE("built-ins convert to presentations")
{
    const Presentation z3 = to_presentation(GroupSpec::free_abelian(3));
    CHECK(z3.generators.size() == 3);
    CHECK(z3.relators.size() == 3);
    const Presentation c4 = to_presentation(GroupSpec::cyclic(4));
    REQUIRE(c4.relators.size() == 1);
    CHECK(c4.relators[0].size() == 4);
    CHECK(to_presentation(GroupSpec::trivial()).generators.empty());
    CHECK_THROWS_AS(to_presentation(GroupSpec::padic(2)), std::invalid_argument);
}
