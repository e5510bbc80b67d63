#include "orbichern/subgroup_growth.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace orbichern {

const Integer &JSequence::j(std::size_t r) const
{
    if (r < 1 || r > values.size())
        throw std::out_of_range("j_r requested outside 1..rmax");
    return values[r - 1];
}

const char *to_string(Provenance p)
{
    return p == Provenance::closed_form ? "closed-form" : "enumerated";
}

Integer free_abelian_subgroup_count(unsigned m, std::size_t k)
{
    if (k == 0)
        throw std::invalid_argument("subgroup index must be >= 1");
    // row[d] = j(level; d) for d = 1..k, built up from level 0.
    std::vector<Integer> row(k + 1);
    row[1] = 1;
    for (unsigned level = 1; level <= m; ++level) {
        std::vector<Integer> next(k + 1);
        for (std::size_t n = 1; n <= k; ++n)
            for (std::size_t d = 1; d <= n; ++d)
                if (n % d == 0)
                    next[n] += Integer(static_cast<unsigned long>(d)) * row[d];
        row = std::move(next);
    }
    return row[k];
}

std::vector<std::size_t> orbit_sizes(std::span<const Perm *const> gens, std::size_t degree)
{
    std::vector<std::size_t> parent(degree);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const Perm *g : gens)
        for (std::size_t x = 0; x < degree; ++x) {
            std::size_t a = find(x), b = find((*g)(static_cast<Point>(x)));
            if (a != b)
                parent[std::max(a, b)] = std::min(a, b);
        }
    std::vector<std::size_t> size(degree);
    for (std::size_t x = 0; x < degree; ++x)
        ++size[find(x)];
    std::vector<std::size_t> out;
    for (std::size_t s : size)
        if (s)
            out.push_back(s);
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t transitive_centralizer_order(std::span<const Perm *const> gens, std::size_t degree)
{
    // A centralizing permutation is fixed by the image of point 0.
    std::size_t count = 0;
    std::vector<long> pi(degree);
    std::vector<std::size_t> queue;
    for (std::size_t q = 0; q < degree; ++q) {
        std::fill(pi.begin(), pi.end(), -1);
        pi[0] = static_cast<long>(q);
        queue.assign(1, 0);
        bool ok = true;
        for (std::size_t head = 0; ok && head < queue.size(); ++head) {
            const std::size_t x = queue[head];
            const Point y = static_cast<Point>(pi[x]);
            for (const Perm *g : gens) {
                const Point gx = (*g)(static_cast<Point>(x));
                const long gy = (*g)(y);
                if (pi[gx] == -1) {
                    pi[gx] = gy;
                    queue.push_back(gx);
                } else if (pi[gx] != gy) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok && queue.size() == degree)
            ++count;
    }
    return count;
}

namespace {

struct TransitiveTally {
    std::uint64_t homs = 0;
    std::uint64_t centralizer_sum = 0;
};

TransitiveTally tally_transitive(const GroupSpec &a, std::size_t r, const SearchOptions &opts,
                                 bool with_centralizers)
{
    if (r == 0)
        throw std::invalid_argument("action degree must be >= 1");
    const Presentation pres = to_presentation(a);
    const FiniteGroup sym = symmetric_group(r);
    return fold_homs(
        pres, sym, opts, TransitiveTally{},
        [&](TransitiveTally &acc, std::span<const std::size_t> images) {
            std::vector<const Perm *> gens;
            gens.reserve(images.size());
            for (std::size_t i : images)
                gens.push_back(&sym.element(i));
            if (orbit_sizes(gens, r).size() != 1)
                return;
            ++acc.homs;
            if (with_centralizers)
                acc.centralizer_sum += transitive_centralizer_order(gens, r);
        },
        [](TransitiveTally &x, TransitiveTally y) {
            x.homs += y.homs;
            x.centralizer_sum += y.centralizer_sum;
        });
}

} // namespace

std::uint64_t count_transitive_homs(const GroupSpec &a, std::size_t r, const SearchOptions &opts)
{
    if (a.get_if<PAdic>())
        throw std::invalid_argument("Zp(p) is profinite with no finite presentation; "
                                    "its subgroup counts are closed-form only");
    return tally_transitive(a, r, opts, false).homs;
}

JSequence j_sequence(const GroupSpec &a, std::size_t rmax, const SearchOptions &opts)
{
    if (rmax < 1)
        throw std::invalid_argument("j_sequence needs rmax >= 1");
    JSequence out;
    out.source = a;
    out.values.resize(rmax);
    out.provenance.assign(rmax, Provenance::closed_form);
    for (std::size_t r = 1; r <= rmax; ++r) {
        Integer &v = out.values[r - 1];
        if (a.get_if<TrivialGroup>()) {
            v = r == 1 ? 1 : 0;
        } else if (auto *c = a.get_if<Cyclic>()) {
            v = c->order % r == 0 ? 1 : 0;
        } else if (auto *p = a.get_if<PAdic>()) {
            std::size_t x = r;
            while (x % p->prime == 0)
                x /= p->prime;
            v = x == 1 ? 1 : 0;
        } else if (auto *f = a.get_if<FreeAbelian>()) {
            v = free_abelian_subgroup_count(f->rank, r);
        } else {
            const std::uint64_t t = count_transitive_homs(a, r, opts);
            const Integer fact = factorial(r - 1);
            const Integer total(std::to_string(t), 10);
            if (total % fact != 0)
                throw std::logic_error("transitive action count " + std::to_string(t) +
                                       " not divisible by (r-1)! at r=" + std::to_string(r));
            v = total / fact;
            out.provenance[r - 1] = Provenance::enumerated;
        }
    }
    return out;
}

std::vector<Integer> u_sequence(const GroupSpec &a, std::size_t dmax, const SearchOptions &opts)
{
    if (a.is_abelian_builtin())
        return j_sequence(a, dmax, opts).values;
    std::vector<Integer> out(dmax);
    for (std::size_t d = 1; d <= dmax; ++d) {
        const TransitiveTally t = tally_transitive(a, d, opts, true);
        const Integer sum(std::to_string(t.centralizer_sum), 10);
        const Integer fact = factorial(d);
        if (sum % fact != 0)
            throw std::logic_error("conjugation orbit count is not an integer at d=" + std::to_string(d));
        out[d - 1] = sum / fact;
    }
    return out;
}

std::vector<SubgroupClass> index_subgroup_classes(const GroupSpec &a, std::size_t r)
{
    if (r < 1)
        throw std::invalid_argument("subgroup index must be >= 1");
    if (a.get_if<TrivialGroup>())
        return r == 1 ? std::vector<SubgroupClass>{{GroupSpec::trivial(), 1}} : std::vector<SubgroupClass>{};
    if (auto *f = a.get_if<FreeAbelian>())
        return {{a, free_abelian_subgroup_count(f->rank, r)}};
    if (auto *c = a.get_if<Cyclic>()) {
        if (c->order % r != 0)
            return {};
        const unsigned q = c->order / static_cast<unsigned>(r);
        return {{q == 1 ? GroupSpec::trivial() : GroupSpec::cyclic(q), 1}};
    }
    throw std::invalid_argument("subgroup types unknown for " + a.to_string() +
                                " (supported: Z^m, Z/d, 1)");
}

} // namespace orbichern
