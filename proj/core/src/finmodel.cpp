#include "orbichern/finmodel.hpp"

#include "orbichern/subgroup_growth.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbichern {

std::vector<std::size_t> fixed_set(const GSet &x, std::span<const std::size_t> elements)
{
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p < x.size(); ++p) {
        bool fixed = true;
        for (std::size_t g : elements)
            if (x.act(g, static_cast<Point>(p)) != p) {
                fixed = false;
                break;
            }
        if (fixed)
            out.push_back(p);
    }
    return out;
}

namespace {

Rat as_rat(std::uint64_t v)
{
    return Rat(static_cast<unsigned long>(v));
}

} // namespace

ConstrFn canonical_function_by_stabilizers(const GSet &x, const GroupSpec &a, const SearchOptions &opts)
{
    const Presentation pres = to_presentation(a);
    const Rat order = as_rat(x.group().order());
    ConstrFn f(x.size(), 1);
    // Stabilizers along an orbit are conjugate, but every point is evaluated on its own.
    for (std::size_t p = 0; p < x.size(); ++p)
        f[p] = as_rat(count_homs(pres, x.stabilizer_group(static_cast<Point>(p)), opts)) / order;
    return f;
}

ConstrFn canonical_function(const GSet &x, const GroupSpec &a, const SearchOptions &opts)
{
    const Presentation pres = to_presentation(a);
    using Counts = std::vector<std::uint64_t>;
    const Counts counts = fold_homs(
        pres, x.group(), opts, Counts(x.size(), 0),
        [&](Counts &acc, std::span<const std::size_t> images) {
            for (std::size_t p : fixed_set(x, images))
                ++acc[p];
        },
        [](Counts &acc, Counts &&other) {
            for (std::size_t i = 0; i < acc.size(); ++i)
                acc[i] += other[i];
        });
    const Rat order = as_rat(x.group().order());
    ConstrFn f(x.size(), 1);
    for (std::size_t p = 0; p < x.size(); ++p)
        f[p] = as_rat(counts[p]) / order;
    const ConstrFn by_stab = canonical_function_by_stabilizers(x, a, opts);
    for (std::size_t p = 0; p < x.size(); ++p)
        if (f[p] != by_stab[p])
            throw std::logic_error("canonical function disagrees with the stabilizer formula at point " +
                                   std::to_string(p + 1));
    return f;
}

Rat orbifold_euler_characteristic(const GSet &x, unsigned m)
{
    const FiniteGroup &g = x.group();
    const std::size_t order = g.order();
    std::vector<std::size_t> tuple(m, 0);
    std::uint64_t total = 0;
    while (true) {
        bool commuting = true;
        for (unsigned i = 0; i < m && commuting; ++i)
            for (unsigned j = i + 1; j < m; ++j)
                if (g.mul(tuple[i], tuple[j]) != g.mul(tuple[j], tuple[i])) {
                    commuting = false;
                    break;
                }
        if (commuting)
            total += fixed_set(x, tuple).size();
        unsigned i = 0;
        while (i < m && ++tuple[i] == order)
            tuple[i++] = 0;
        if (i == m)
            break;
    }
    return as_rat(total) / as_rat(order);
}

const PowerSet &PowerCache::power(std::size_t n)
{
    if (n == 0)
        throw std::invalid_argument("X^0 carries no group action here");
    auto &slot = powers_[n];
    if (!slot)
        slot = std::make_unique<PowerSet>(base_, n);
    return *slot;
}

namespace {

std::size_t int_power(std::size_t base, std::size_t exp)
{
    std::size_t out = 1;
    for (std::size_t i = 0; i < exp; ++i)
        out *= base;
    return out;
}

// (1/|H|) sum_{h in H} f(h.y) for the listed subgroup H of G_n.
ConstrFn average(const PowerSet &p, std::span<const std::size_t> elements, const ConstrFn &f)
{
    const GSet &xs = p.as_gset();
    ConstrFn out(f.points(), f.arity());
    for (std::size_t y = 0; y < f.size(); ++y) {
        Rat s = 0;
        for (std::size_t h : elements) {
            const Rat &v = f[xs.act(h, static_cast<Point>(y))];
            if (v != 0)
                s += v;
        }
        out[y] = s / as_rat(elements.size());
    }
    return out;
}

std::vector<std::size_t> all_elements(const PowerSet &p)
{
    std::vector<std::size_t> out(p.as_gset().group().order());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = i;
    return out;
}

} // namespace

ConstrFn odot_concrete(const ConstrFn &a, const ConstrFn &b, PowerCache &cache, Symmetrization mode)
{
    const std::size_t k = cache.base().size();
    if (a.points() != k || b.points() != k)
        throw std::invalid_argument("odot_concrete: functions on different base sets");
    const std::size_t arity = a.arity() + b.arity();
    ConstrFn product(k, arity);
    const std::size_t split = int_power(k, a.arity());
    for (std::size_t t = 0; t < product.size(); ++t)
        product[t] = a[t % split] * b[t / split];
    if (arity == 0)
        return product;
    const PowerSet &p = cache.power(arity);
    if (mode == Symmetrization::plain)
        return average(p, p.permutation_part(), product);
    return average(p, all_elements(p), product);
}

ConstrFn diagonal_concrete(const ConstrFn &alpha, std::size_t n, PowerCache &cache, DiagonalMode mode)
{
    const std::size_t k = cache.base().size();
    if (alpha.points() != k || alpha.arity() != 1)
        throw std::invalid_argument("diagonal_concrete: argument must be a function on X");
    if (n == 0)
        throw std::invalid_argument("diagonal_concrete: n >= 1");
    ConstrFn pushed(k, n);
    std::size_t step = 0;
    for (std::size_t i = 0; i < n; ++i)
        step = step * k + 1;
    for (std::size_t x = 0; x < k; ++x)
        pushed[x * step] = alpha[x];
    if (mode == DiagonalMode::plain)
        return pushed;
    const PowerSet &p = cache.power(n);
    if (mode == DiagonalMode::base_only)
        return average(p, p.base_part(), pushed);
    return average(p, all_elements(p), pushed);
}

FiniteMap FiniteMap::identity(std::size_t size)
{
    FiniteMap f{size, std::vector<std::size_t>(size)};
    for (std::size_t i = 0; i < size; ++i)
        f.images[i] = i;
    return f;
}

FiniteMap FiniteMap::to_point(std::size_t size)
{
    return FiniteMap{1, std::vector<std::size_t>(size, 0)};
}

FiniteMap FiniteMap::then(const FiniteMap &g) const
{
    if (g.images.size() != target_size)
        throw std::invalid_argument("maps do not compose");
    FiniteMap out{g.target_size, std::vector<std::size_t>(images.size())};
    for (std::size_t i = 0; i < images.size(); ++i)
        out.images[i] = g.images[images[i]];
    return out;
}

FiniteMap orbit_projection(const GSet &x)
{
    const auto id = x.orbit_index();
    std::size_t count = 0;
    for (std::size_t v : id)
        count = std::max(count, v + 1);
    return FiniteMap{count, id};
}

bool is_equivariant(const FiniteMap &f, const GSet &source, const GSet &target)
{
    if (source.group().order() != target.group().order() || f.images.size() != source.size() ||
        f.target_size != target.size())
        return false;
    for (std::size_t g = 0; g < source.group().order(); ++g)
        for (std::size_t x = 0; x < source.size(); ++x)
            if (f.images[source.act(g, static_cast<Point>(x))] != target.act(g, static_cast<Point>(f.images[x])))
                return false;
    return true;
}

ConstrFn pushforward(const FiniteMap &f, const ConstrFn &alpha)
{
    if (alpha.size() != f.images.size())
        throw std::invalid_argument("pushforward: map and function have different domains");
    ConstrFn out(f.target_size, 1);
    for (std::size_t i = 0; i < f.images.size(); ++i) {
        if (f.images[i] >= f.target_size)
            throw std::out_of_range("pushforward: image outside the target");
        out[f.images[i]] += alpha[i];
    }
    return out;
}

std::map<CycleType, ConstrFn> fixed_sums_by_type(const PowerSet &p, const GroupSpec &a, const SearchOptions &opts)
{
    const Presentation pres = to_presentation(a);
    const GSet &xs = p.as_gset();
    const std::size_t n = p.n();
    using Sums = std::map<CycleType, std::vector<std::uint64_t>>;
    const Sums sums = fold_homs(
        pres, xs.group(), opts, Sums{},
        [&](Sums &acc, std::span<const std::size_t> images) {
            std::vector<const Perm *> sigmas;
            sigmas.reserve(images.size());
            for (std::size_t i : images)
                sigmas.push_back(&p.wreath().decode(i).sigma);
            auto &slot = acc[CycleType::from_orbit_sizes(n, orbit_sizes(sigmas, n))];
            if (slot.empty())
                slot.assign(xs.size(), 0);
            for (std::size_t t : fixed_set(xs, images))
                ++slot[t];
        },
        [](Sums &acc, Sums &&other) {
            for (auto &[c, v] : other) {
                auto &slot = acc[c];
                if (slot.empty())
                    slot.assign(v.size(), 0);
                for (std::size_t i = 0; i < v.size(); ++i)
                    slot[i] += v[i];
            }
        });
    std::map<CycleType, ConstrFn> out;
    for (const auto &[c, v] : sums) {
        ConstrFn f(p.base().size(), n);
        for (std::size_t i = 0; i < v.size(); ++i)
            f[i] = as_rat(v[i]);
        out.emplace(c, std::move(f));
    }
    return out;
}

ConstrFn evaluate_concrete(const DiagElement &a, std::size_t n, const std::map<std::string, ConstrFn> &bases,
                           PowerCache &cache, DiagonalMode diagonal, Symmetrization product)
{
    const std::size_t k = cache.base().size();
    ConstrFn out(k, n);
    std::map<std::pair<unsigned, std::string>, ConstrFn> diag_cache;
    auto diag_of = [&](unsigned kk, const std::string &base) -> const ConstrFn & {
        auto key = std::make_pair(kk, base);
        auto it = diag_cache.find(key);
        if (it != diag_cache.end())
            return it->second;
        auto b = bases.find(base);
        if (b == bases.end())
            throw std::invalid_argument("evaluate_concrete: no function for base class '" + base + "'");
        return diag_cache.emplace(key, diagonal_concrete(b->second, kk, cache, diagonal)).first->second;
    };
    for (const auto &[mono, coeff] : a.terms()) {
        if (mono.weight() != n)
            continue;
        ConstrFn term = ConstrFn::constant(k, 0, Rat(1));
        for (const DiagFactor &f : mono.factors())
            for (unsigned p = 0; p < f.power; ++p)
                term = odot_concrete(term, diag_of(f.k, f.base), cache, product);
        out += coeff * term;
    }
    return out;
}

} // namespace orbichern
