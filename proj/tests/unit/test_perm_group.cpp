#include <doctest.h>

#include "oracles.hpp"

#include <orbichern/group.hpp>
#include <orbichern/perm.hpp>

#include <set>

using namespace orbichern;

TEST_CASE("cycle notation round trip")
{
    const Perm p = Perm::parse_cycles("(1 2 3)(4 5)");
    CHECK(p.degree() == 5);
    CHECK(p(0) == 1);
    CHECK(p(2) == 0);
    CHECK(p.to_string() == "(1 2 3)(4 5)");
    CHECK(Perm::parse_cycles("()", 3).is_identity());
    CHECK(Perm(3).to_string() == "()");
    CHECK(Perm::parse_cycles("(2 3)", 4).degree() == 4);
    CHECK_THROWS_AS(Perm::parse_cycles("(1 2)(2 3)"), std::invalid_argument);
    CHECK_THROWS_AS(Perm::parse_cycles("(0 1)"), std::invalid_argument);
    CHECK_THROWS_AS(Perm::parse_cycles("1 2"), std::invalid_argument);
    CHECK_THROWS_AS(Perm::parse_cycles("(1 5)", 3), std::invalid_argument);
}

TEST_CASE("products compose right to left")
{
    const Perm a = Perm::parse_cycles("(1 2)", 3);
    const Perm b = Perm::parse_cycles("(2 3)", 3);
    // (a*b)(1) = a(b(1)) = a(1) = 2
    CHECK((a * b)(0) == 1);
    CHECK((a * b).to_string() == "(1 2 3)");
    CHECK((a * a.inverse()).is_identity());
    CHECK_THROWS_AS(a * Perm(4), std::invalid_argument);
    CHECK(a.extended(5).degree() == 5);
}

TEST_CASE("parse_perm_list pads to a common degree")
{
    const auto gens = parse_perm_list("(1 2 3),(1 2)");
    REQUIRE(gens.size() == 2);
    CHECK(gens[0].degree() == 3);
    CHECK(gens[1].degree() == 3);
}

TEST_CASE("close_group")
{
    CHECK(close_group(parse_perm_list("(1 2)")).order() == 2);
    CHECK(close_group(parse_perm_list("(1 2),(1 2 3)")).order() == 6);
    const FiniteGroup d4 = close_group(parse_perm_list("(1 2 3 4),(1 3)"));
    CHECK(d4.order() == 8);
    CHECK_FALSE(d4.is_abelian());
    CHECK_THROWS_AS(close_group(parse_perm_list("(1 2 3 4 5 6 7),(1 2)"), 1000), GroupTooLarge);
}

TEST_CASE("named groups")
{
    CHECK(trivial_group().order() == 1);
    CHECK(cyclic_group(5).order() == 5);
    CHECK(cyclic_group(5).is_abelian());
    CHECK(symmetric_group(4).order() == 24);
    CHECK(dihedral_group(5).order() == 10);
    CHECK(parse_finite_group("S_3").order() == 6);
    CHECK(parse_finite_group("S3").name() == "S3");
    CHECK(parse_finite_group("Z/4").order() == 4);
    CHECK(parse_finite_group("1").order() == 1);
    CHECK(parse_finite_group("D4").order() == 8);
    CHECK(parse_finite_group("(1 2)(3 4),(1 3)(2 4)").order() == 4);
    CHECK_THROWS_AS(parse_finite_group("Q8"), std::invalid_argument);
}

TEST_CASE("group tables agree with permutation composition")
{
    const FiniteGroup g = symmetric_group(4);
    for (std::size_t a = 0; a < g.order(); ++a) {
        CHECK(g.element(g.inv(a)) == g.element(a).inverse());
        for (std::size_t b = 0; b < g.order(); b += 5)
            CHECK(g.element(g.mul(a, b)) == g.element(a) * g.element(b));
    }
    CHECK(g.element(g.identity()).is_identity());
}

TEST_CASE("FiniteGroup validates its element list")
{
    std::vector<Perm> not_closed{Perm(3), Perm::parse_cycles("(1 2 3)", 3)};
    CHECK_THROWS_AS(FiniteGroup(3, not_closed, {}), std::invalid_argument);
    std::vector<Perm> no_identity{Perm::parse_cycles("(1 2)", 2)};
    CHECK_THROWS_AS(FiniteGroup(2, no_identity, {}), std::invalid_argument);
}

TEST_CASE("subgroups, centralizers and classes")
{
    const FiniteGroup s4 = symmetric_group(4);
    CHECK(conjugacy_classes(s4).size() == 5);
    CHECK(conjugacy_classes(s4).size() == oracle::class_count(oracle::all_perms(4)));
    CHECK(conjugacy_classes(symmetric_group(5)).size() == oracle::class_count(oracle::all_perms(5)));

    const std::size_t t = s4.index_of(Perm::parse_cycles("(1 2)", 4));
    const FiniteGroup c = centralizer(s4, t);
    CHECK(c.order() == 4);
    for (const Perm &p : c.elements())
        CHECK(p * s4.element(t) == s4.element(t) * p);

    std::vector<std::size_t> a4;
    for (std::size_t i = 0; i < s4.order(); ++i) {
        std::size_t inversions = 0;
        const auto im = s4.element(i).images();
        for (std::size_t x = 0; x < 4; ++x)
            for (std::size_t y = x + 1; y < 4; ++y)
                inversions += im[x] > im[y];
        if (inversions % 2 == 0)
            a4.push_back(i);
    }
    CHECK(subgroup(s4, a4).order() == 12);
    std::vector<std::size_t> bad{s4.identity(), t, s4.index_of(Perm::parse_cycles("(2 3)", 4))};
    CHECK_THROWS_AS(subgroup(s4, bad), std::invalid_argument);
}
