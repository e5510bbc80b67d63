#include <doctest.h>

#include "oracles.hpp"

#include <orbichern/census.hpp>
#include <orbichern/finmodel.hpp>
#include <orbichern/gset.hpp>

using namespace orbichern;

namespace {

GSet swap2()
{
    return GSet::natural(cyclic_group(2));
}

// The G-sets used across the property tests.
std::vector<GSet> sample_gsets()
{
    std::vector<GSet> out;
    out.push_back(GSet::trivial(trivial_group(), 2));
    out.push_back(swap2());
    out.push_back(GSet::from_generator_action(cyclic_group(2), 3, {{1, 0, 2}}));
    out.push_back(GSet::natural(cyclic_group(3)));
    out.push_back(GSet::natural(symmetric_group(3)));
    out.push_back(GSet::trivial(symmetric_group(3), 2));
    return out;
}

ConstrFn random_fn(oracle::Random &rng, std::size_t points, std::size_t arity)
{
    ConstrFn f(points, arity);
    for (std::size_t i = 0; i < f.size(); ++i)
        f[i] = rng.rat();
    return f;
}

std::size_t find_element(const PowerSet &p, bool (*pred)(const WreathElement &, const FiniteGroup &))
{
    const WreathProduct &w = p.wreath();
    for (std::size_t k = 0; k < w.order(); ++k)
        if (pred(w.decode(k), w.base()))
            return k;
    FAIL("no matching element");
    return 0;
}

} // namespace

TEST_CASE("G-set construction")
{
    const GSet x = swap2();
    CHECK(x.size() == 2);
    CHECK(x.orbits().size() == 1);
    const GSet y = GSet::from_generator_action(cyclic_group(2), 3, {{1, 0, 2}});
    CHECK(y.orbits() == std::vector<std::vector<Point>>{{0, 1}, {2}});
    CHECK(y.orbit_index() == std::vector<std::size_t>{0, 0, 1});
    CHECK(y.stabilizer(2).size() == 2);
    CHECK(y.stabilizer_group(0).order() == 1);

    // A 3-cycle cannot act through a transposition.
    CHECK_THROWS_AS(GSet::from_generator_action(cyclic_group(3), 2, {{1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(GSet::from_generator_action(cyclic_group(2), 2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(GSet::from_generator_action(cyclic_group(2), 2, {}), std::invalid_argument);

    const GSet j = GSet::from_json(nlohmann::json::parse(R"j({"points":3,"group":"(1 2)","action":[[2,1,3]]})j"));
    CHECK(j.orbits().size() == 2);
    const GSet t = GSet::from_json(nlohmann::json::parse(R"j({"points":2,"group":"S3"})j"));
    CHECK(t.orbits().size() == 2);
    const auto zero_based = nlohmann::json::parse(R"j({"points":2,"group":"(1 2)","action":[[0,1]]})j");
    CHECK_THROWS_AS(GSet::from_json(zero_based), std::invalid_argument);
}

TEST_CASE("constructible functions")
{
    ConstrFn f(3, 2);
    const Point t[] = {2, 1};
    CHECK(f.encode(t) == 5);
    CHECK(f.decode(5) == std::vector<Point>{2, 1});
    f[5] = Rat(3, 2);
    CHECK(f.at(t) == Rat(3, 2));
    CHECK(f.integral() == Rat(3, 2));
    CHECK(ConstrFn::constant(3, 2, Rat(1)).integral() == 9);
    const std::size_t support[] = {0, 4, 8};
    CHECK(ConstrFn::indicator(3, 2, support).integral() == 3);
    CHECK(tuple_to_string(t) == "(3,2)");
    CHECK_THROWS_AS(f + ConstrFn(3, 1), std::invalid_argument);
    const Point bad[] = {3, 0};
    CHECK_THROWS_AS(f.at(bad), std::out_of_range);
}

TEST_CASE("fixed sets")
{
    const GSet x = swap2();
    CHECK(fixed_set(x, {}) == std::vector<std::size_t>{0, 1});
    const std::size_t g[] = {1 - cyclic_group(2).identity()};
    CHECK(fixed_set(x, g).empty());

    const PowerSet p(GSet::trivial(trivial_group(), 2), 2);
    const std::size_t swap = find_element(p, [](const WreathElement &e, const FiniteGroup &) {
        return !e.sigma.is_identity();
    });
    const std::size_t el[] = {swap};
    CHECK(fixed_set(p.as_gset(), el) == std::vector<std::size_t>{0, 3});
}

TEST_CASE("power sets carry the wreath action")
{
    const PowerSet p(GSet::natural(cyclic_group(3)), 2);
    const WreathProduct &w = p.wreath();
    const GSet &xs = p.as_gset();
    CHECK(xs.size() == 9);
    CHECK(p.permutation_part().size() == 2);
    CHECK(p.base_part().size() == 9);
    for (std::size_t k = 0; k < w.order(); ++k) {
        const WreathElement &e = w.decode(k);
        for (Point t = 0; t < 9; ++t) {
            const Point x[2] = {static_cast<Point>(t % 3), static_cast<Point>(t / 3)};
            Point y[2];
            for (std::size_t i = 0; i < 2; ++i)
                y[i] = w.base().element(e.gbar[i])(x[e.sigma.inverse()(static_cast<Point>(i))]);
            CHECK(xs.act(k, t) == y[0] + 3 * y[1]);
        }
    }
}

TEST_CASE("canonical functions")
{
    for (const GSet &x : sample_gsets()) {
        const Rat inv_order = Rat(1) / Rat(static_cast<unsigned long>(x.group().order()));
        CHECK(canonical_function(x, GroupSpec::trivial()) == ConstrFn::constant(x.size(), 1, inv_order));
        for (const char *s : {"Z", "Z^2", "Z/2", "Z/3"}) {
            INFO(s);
            CHECK(canonical_function(x, GroupSpec::parse(s)) ==
                  canonical_function_by_stabilizers(x, GroupSpec::parse(s)));
        }
        const ConstrFn one = pushforward(orbit_projection(x), canonical_function(x, GroupSpec::parse("Z")));
        CHECK(one == ConstrFn::constant(x.orbits().size(), 1, Rat(1)));
    }
    const ConstrFn half = canonical_function(swap2(), GroupSpec::parse("Z/2"));
    CHECK(half == ConstrFn::constant(2, 1, Rat(1, 2)));
}

TEST_CASE("orbifold Euler characteristics")
{
    for (const GSet &x : sample_gsets()) {
        const Rat g(static_cast<unsigned long>(x.group().order()));
        CHECK(orbifold_euler_characteristic(x, 0) == Rat(static_cast<unsigned long>(x.size())) / g);
        CHECK(orbifold_euler_characteristic(x, 1) == Rat(static_cast<unsigned long>(x.orbits().size())));
        for (unsigned m = 1; m <= 3; ++m)
            CHECK(orbifold_euler_characteristic(x, m) ==
                  canonical_function(x, GroupSpec::free_abelian(m)).integral());
    }
    // S3 on 3 points is S3/S2, so chi_2 is the class number of Z/2.
    CHECK(orbifold_euler_characteristic(GSet::natural(symmetric_group(3)), 2) == 2);
}

TEST_CASE("symmetrized products")
{
    oracle::Random rng(7);
    for (const GSet &x : sample_gsets()) {
        PowerCache cache(x);
        const std::size_t k = x.size();
        CHECK(odot_concrete(ConstrFn::constant(k, 1, Rat(1)), ConstrFn::constant(k, 1, Rat(1)), cache,
                            Symmetrization::plain) == ConstrFn::constant(k, 2, Rat(1)));
        const ConstrFn unit = ConstrFn::constant(k, 0, Rat(1));
        const ConstrFn a0 = random_fn(rng, k, 1);
        CHECK(odot_concrete(unit, a0, cache, Symmetrization::plain) == a0);
        for (int i = 0; i < 3; ++i) {
            const ConstrFn a = random_fn(rng, k, 1);
            const ConstrFn b = random_fn(rng, k, 2);
            for (auto mode : {Symmetrization::plain, Symmetrization::wreath}) {
                const ConstrFn ab = odot_concrete(a, b, cache, mode);
                CHECK(ab == odot_concrete(b, a, cache, mode));
                CHECK(ab.integral() == a.integral() * b.integral());
            }
        }
    }
    PowerCache cache(swap2());
    CHECK_THROWS_AS(odot_concrete(ConstrFn(3, 1), ConstrFn(3, 1), cache, Symmetrization::plain),
                    std::invalid_argument);
}

TEST_CASE("diagonal operators")
{
    PowerCache triv(GSet::trivial(trivial_group(), 3));
    oracle::Random rng(13);
    const ConstrFn a = random_fn(rng, 3, 1);
    CHECK(diagonal_concrete(a, 1, triv, DiagonalMode::plain) == a);
    CHECK(diagonal_concrete(a, 1, triv, DiagonalMode::wreath) == a);
    const std::size_t diag[] = {0, 4, 8};
    CHECK(diagonal_concrete(ConstrFn::constant(3, 1, Rat(1)), 2, triv, DiagonalMode::plain) ==
          ConstrFn::indicator(3, 2, diag));

    for (const GSet &x : {swap2(), GSet::from_generator_action(cyclic_group(2), 3, {{1, 0, 2}})}) {
        PowerCache cache(x);
        for (std::size_t n = 1; n <= 3; ++n)
            for (int i = 0; i < 3; ++i) {
                const ConstrFn b = random_fn(rng, x.size(), 1);
                const ConstrFn full = diagonal_concrete(b, n, cache, DiagonalMode::wreath);
                CHECK(full == diagonal_concrete(b, n, cache, DiagonalMode::base_only));
                CHECK(full.integral() == b.integral());
            }
    }
    CHECK_THROWS_AS(diagonal_concrete(a, 0, triv, DiagonalMode::plain), std::invalid_argument);
    CHECK_THROWS_AS(diagonal_concrete(ConstrFn(3, 2), 2, triv, DiagonalMode::plain), std::invalid_argument);
}

TEST_CASE("pushforwards")
{
    oracle::Random rng(19);
    const GSet x = GSet::natural(symmetric_group(3));
    const ConstrFn a = random_fn(rng, 3, 1);
    CHECK(pushforward(FiniteMap::identity(3), a) == a);
    CHECK(pushforward(FiniteMap::to_point(3), a)[0] == a.integral());

    const GSet y = GSet::from_generator_action(cyclic_group(2), 3, {{1, 0, 2}});
    const ConstrFn b = random_fn(rng, 3, 1);
    const ConstrFn orb = pushforward(orbit_projection(y), b);
    CHECK(orb[0] == b[0] + b[1]);
    CHECK(orb[1] == b[2]);

    const FiniteMap f{2, {1, 0, 1}};
    const FiniteMap g{2, {1, 1}};
    CHECK(pushforward(g, pushforward(f, b)) == pushforward(f.then(g), b));
    CHECK(is_equivariant(FiniteMap::identity(3), y, y));
    CHECK_FALSE(is_equivariant(FiniteMap{3, {0, 2, 1}}, y, y));
    CHECK_THROWS_AS(f.then(FiniteMap::identity(3)), std::invalid_argument);
    CHECK_THROWS_AS(pushforward(f, ConstrFn(2, 1)), std::invalid_argument);
}

TEST_CASE("fixed-set sums by cycle type")
{
    const GSet pt = GSet::trivial(cyclic_group(2), 1);
    for (std::size_t n = 1; n <= 3; ++n) {
        const PowerSet p(pt, n);
        const auto sums = fixed_sums_by_type(p, GroupSpec::parse("Z^2"));
        const HomCensus c = census_wreath(GroupSpec::parse("Z^2"), cyclic_group(2), n);
        Rat total = 0;
        for (const auto &[type, f] : sums) {
            CHECK(f.integral() == Rat(static_cast<unsigned long>(c.count(type))));
            total += f.integral();
        }
        CHECK(total == Rat(static_cast<unsigned long>(c.total)));
    }
}

TEST_CASE("concrete evaluation")
{
    PowerCache cache(swap2());
    oracle::Random rng(31);
    const ConstrFn a = random_fn(rng, 2, 1);
    const std::map<std::string, ConstrFn> bases{{"c", a}};
    const DiagElement d1 = DiagElement::generator(3, 1, "c");
    CHECK(evaluate_concrete(d1, 1, bases, cache, DiagonalMode::plain, Symmetrization::plain) == a);
    CHECK(evaluate_concrete(DiagElement::unit(3), 0, bases, cache, DiagonalMode::plain, Symmetrization::plain) ==
          ConstrFn::constant(2, 0, Rat(1)));
    const DiagElement sq = odot(d1, d1);
    CHECK(evaluate_concrete(sq, 2, bases, cache, DiagonalMode::plain, Symmetrization::plain) ==
          odot_concrete(a, a, cache, Symmetrization::plain));
    CHECK(evaluate_concrete(sq, 1, bases, cache, DiagonalMode::plain, Symmetrization::plain) == ConstrFn(2, 1));
    CHECK_THROWS_AS(evaluate_concrete(DiagElement::generator(3, 1, "e"), 1, bases, cache, DiagonalMode::plain,
                                      Symmetrization::plain),
                    std::invalid_argument);
}
