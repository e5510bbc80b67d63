#include "orbichern/gset.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace orbichern {

GSet::GSet(FiniteGroup group, std::size_t points, std::vector<Point> tables)
    : group_(std::move(group)), points_(points), tables_(std::move(tables))
{
}

GSet GSet::from_generator_action(FiniteGroup group, std::size_t points,
                                 const std::vector<std::vector<Point>> &generator_tables)
{
    const auto gens = group.generators();
    if (generator_tables.size() != gens.size())
        throw std::invalid_argument("action needs one image table per group generator (" +
                                    std::to_string(gens.size()) + " expected)");
    for (const auto &t : generator_tables) {
        if (t.size() != points)
            throw std::invalid_argument("action table has the wrong number of points");
        std::vector<bool> seen(points);
        for (Point p : t) {
            if (p >= points || seen[p])
                throw std::invalid_argument("action table is not a permutation of the points");
            seen[p] = true;
        }
    }

    const std::size_t order = group.order();
    std::vector<Point> tables(order * points);
    std::vector<bool> known(order);
    const std::size_t e = group.identity();
    for (std::size_t x = 0; x < points; ++x)
        tables[e * points + x] = static_cast<Point>(x);
    known[e] = true;

    // Every edge h -> g_i h of the Cayley graph must satisfy table(g_i h) = t_i o table(h).
    std::deque<std::size_t> queue{e};
    std::vector<Point> candidate(points);
    while (!queue.empty()) {
        const std::size_t h = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < gens.size(); ++i) {
            const std::size_t f = group.mul(gens[i], h);
            for (std::size_t x = 0; x < points; ++x)
                candidate[x] = generator_tables[i][tables[h * points + x]];
            if (known[f]) {
                if (!std::equal(candidate.begin(), candidate.end(), tables.begin() + f * points))
                    throw std::invalid_argument("generator tables do not define a group action");
                continue;
            }
            std::copy(candidate.begin(), candidate.end(), tables.begin() + f * points);
            known[f] = true;
            queue.push_back(f);
        }
    }
    if (!std::all_of(known.begin(), known.end(), [](bool b) { return b; }))
        throw std::invalid_argument("group generators do not generate the group");
    return GSet(std::move(group), points, std::move(tables));
}

GSet GSet::natural(FiniteGroup group)
{
    std::vector<std::vector<Point>> gen_tables;
    for (std::size_t g : group.generators())
        {
        const auto im = group.element(g).images();
        gen_tables.emplace_back(im.begin(), im.end());
    }
    const std::size_t deg = group.degree();
    return from_generator_action(std::move(group), deg, gen_tables);
}

GSet GSet::trivial(FiniteGroup group, std::size_t points)
{
    std::vector<Point> id(points);
    std::iota(id.begin(), id.end(), Point{0});
    const std::vector<std::vector<Point>> gen_tables(group.generators().size(), id);
    return from_generator_action(std::move(group), points, gen_tables);
}

GSet GSet::from_json(const nlohmann::json &j)
{
    const auto points = j.at("points").get<std::size_t>();
    if (points == 0)
        throw std::invalid_argument("a G-set needs at least one point");
    FiniteGroup group = parse_finite_group(j.value("group", std::string("1")));
    if (!j.contains("action"))
        return trivial(std::move(group), points);
    std::vector<std::vector<Point>> gen_tables;
    for (const auto &row : j.at("action")) {
        std::vector<Point> t;
        for (const auto &v : row) {
            const auto p = v.get<std::int64_t>();
            if (p < 1 || static_cast<std::size_t>(p) > points)
                throw std::invalid_argument("action images are 1-based point numbers");
            t.push_back(static_cast<Point>(p - 1));
        }
        gen_tables.push_back(std::move(t));
    }
    return from_generator_action(std::move(group), points, gen_tables);
}

std::vector<std::size_t> GSet::stabilizer(Point x) const
{
    std::vector<std::size_t> out;
    for (std::size_t g = 0; g < group_.order(); ++g)
        if (act(g, x) == x)
            out.push_back(g);
    return out;
}

FiniteGroup GSet::stabilizer_group(Point x) const
{
    const auto idx = stabilizer(x);
    return subgroup(group_, idx);
}

std::vector<std::size_t> GSet::orbit_index() const
{
    std::vector<std::size_t> id(points_, points_);
    std::size_t next = 0;
    for (std::size_t x = 0; x < points_; ++x) {
        if (id[x] != points_)
            continue;
        for (std::size_t g = 0; g < group_.order(); ++g)
            id[act(g, static_cast<Point>(x))] = next;
        ++next;
    }
    return id;
}

std::vector<std::vector<Point>> GSet::orbits() const
{
    const auto id = orbit_index();
    std::vector<std::vector<Point>> out;
    for (std::size_t x = 0; x < points_; ++x) {
        if (id[x] >= out.size())
            out.resize(id[x] + 1);
        out[id[x]].push_back(static_cast<Point>(x));
    }
    return out;
}

// ConstrFn

namespace {

std::size_t checked_power(std::size_t base, std::size_t exp)
{
    std::size_t out = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && out > (std::size_t{1} << 26) / base)
            throw std::length_error("tuple space too large for a dense function");
        out *= base;
    }
    return out;
}

} // namespace

ConstrFn::ConstrFn(std::size_t points, std::size_t arity)
    : points_(points), arity_(arity), values_(checked_power(points, arity))
{
}

ConstrFn ConstrFn::constant(std::size_t points, std::size_t arity, const Rat &value)
{
    ConstrFn f(points, arity);
    std::fill(f.values_.begin(), f.values_.end(), value);
    return f;
}

ConstrFn ConstrFn::indicator(std::size_t points, std::size_t arity, std::span<const std::size_t> support)
{
    ConstrFn f(points, arity);
    for (std::size_t i : support)
        f.values_.at(i) = 1;
    return f;
}

const Rat &ConstrFn::at(std::span<const Point> tuple) const
{
    return values_[encode(tuple)];
}

std::size_t ConstrFn::encode(std::span<const Point> tuple) const
{
    if (tuple.size() != arity_)
        throw std::invalid_argument("tuple length does not match the function's arity");
    std::size_t idx = 0;
    for (std::size_t i = arity_; i-- > 0;) {
        if (tuple[i] >= points_)
            throw std::out_of_range("tuple entry out of range");
        idx = idx * points_ + tuple[i];
    }
    return idx;
}

std::vector<Point> ConstrFn::decode(std::size_t index) const
{
    std::vector<Point> t(arity_);
    for (std::size_t i = 0; i < arity_; ++i) {
        t[i] = static_cast<Point>(index % points_);
        index /= points_;
    }
    return t;
}

Rat ConstrFn::integral() const
{
    Rat s = 0;
    for (const Rat &v : values_)
        s += v;
    return s;
}

ConstrFn &ConstrFn::operator+=(const ConstrFn &rhs)
{
    if (rhs.points_ != points_ || rhs.arity_ != arity_)
        throw std::invalid_argument("adding functions on different spaces");
    for (std::size_t i = 0; i < values_.size(); ++i)
        values_[i] += rhs.values_[i];
    return *this;
}

ConstrFn &ConstrFn::operator*=(const Rat &s)
{
    for (Rat &v : values_)
        v *= s;
    return *this;
}

std::string tuple_to_string(std::span<const Point> tuple)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < tuple.size(); ++i)
        os << (i ? "," : "") << tuple[i] + 1;
    os << ')';
    return os.str();
}

// PowerSet

namespace {

std::vector<Point> tuple_action(const GSet &base, const WreathElement &w, std::size_t n)
{
    const std::size_t k = base.size();
    const std::size_t total = checked_power(k, n);
    std::vector<Point> table(total);
    const Perm sigma_inv = w.sigma.inverse();
    std::vector<Point> x(n);
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t c = idx;
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = static_cast<Point>(c % k);
            c /= k;
        }
        std::size_t out = 0;
        for (std::size_t i = n; i-- > 0;)
            out = out * k + base.act(w.gbar[i], x[sigma_inv(static_cast<Point>(i))]);
        table[idx] = static_cast<Point>(out);
    }
    return table;
}

GSet power_gset(const GSet &base, const WreathProduct &wr)
{
    const FiniteGroup &g = wr.as_permutation_group();
    std::vector<std::vector<Point>> gen_tables;
    for (std::size_t gen : g.generators())
        gen_tables.push_back(tuple_action(base, wr.decode(gen), wr.n()));
    return GSet::from_generator_action(g, checked_power(base.size(), wr.n()), gen_tables);
}

} // namespace

PowerSet::PowerSet(const GSet &base, std::size_t n)
    : base_(base), n_(n), wreath_(std::make_shared<const WreathProduct>(base.group(), n)),
      gset_(power_gset(base_, *wreath_))
{
    const FiniteGroup &g = wreath_->as_permutation_group();
    for (std::size_t k = 0; k < g.order(); ++k) {
        const WreathElement &w = wreath_->decode(k);
        if (std::all_of(w.gbar.begin(), w.gbar.end(), [&](std::size_t x) { return x == base_.group().identity(); }))
            sym_.push_back(k);
        if (w.sigma.is_identity())
            base_group_.push_back(k);
    }
}

} // namespace orbichern
