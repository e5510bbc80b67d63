#include "orbichern/group.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <unordered_map>

namespace orbichern {

struct FiniteGroup::State {
    std::size_t degree = 0;
    std::string name;
    std::vector<Perm> elements;
    std::vector<std::size_t> generators;
    std::size_t identity = 0;
    std::unordered_map<Perm, std::size_t, PermHash> index;
    std::vector<std::size_t> inverses;

    mutable std::once_flag table_once;
    mutable std::vector<std::uint32_t> table;

    void build_table() const
    {
        const std::size_t n = elements.size();
        table.resize(n * n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                table[a * n + b] = static_cast<std::uint32_t>(index.at(elements[a] * elements[b]));
    }
};

FiniteGroup::FiniteGroup(std::size_t degree, std::vector<Perm> elements,
                         std::vector<std::size_t> generators, std::string name)
{
    auto s = std::make_shared<State>();
    s->degree = degree;
    s->name = std::move(name);
    s->elements = std::move(elements);
    s->generators = std::move(generators);
    if (s->elements.empty())
        throw std::invalid_argument("a group has at least one element");
    s->index.reserve(s->elements.size());
    bool have_identity = false;
    for (std::size_t i = 0; i < s->elements.size(); ++i) {
        const Perm &p = s->elements[i];
        if (p.degree() != degree)
            throw std::invalid_argument("group element of wrong degree");
        if (!s->index.emplace(p, i).second)
            throw std::invalid_argument("duplicate group element");
        if (p.is_identity()) {
            s->identity = i;
            have_identity = true;
        }
    }
    if (!have_identity)
        throw std::invalid_argument("group element list lacks the identity");
    for (std::size_t g : s->generators)
        if (g >= s->elements.size())
            throw std::invalid_argument("generator index out of range");
    s->inverses.resize(s->elements.size());
    for (std::size_t i = 0; i < s->elements.size(); ++i) {
        auto it = s->index.find(s->elements[i].inverse());
        if (it == s->index.end())
            throw std::invalid_argument("element list not closed under inverse");
        s->inverses[i] = it->second;
    }
    // Closure under the generators implies closure of the set it spans.
    for (std::size_t g : s->generators)
        for (const Perm &p : s->elements)
            if (!s->index.count(s->elements[g] * p))
                throw std::invalid_argument("element list not closed under composition");
    state_ = std::move(s);
}

std::size_t FiniteGroup::degree() const { return state_->degree; }
std::size_t FiniteGroup::order() const { return state_->elements.size(); }
const std::string &FiniteGroup::name() const { return state_->name; }
const Perm &FiniteGroup::element(std::size_t i) const { return state_->elements.at(i); }
std::span<const Perm> FiniteGroup::elements() const { return state_->elements; }
std::size_t FiniteGroup::identity() const { return state_->identity; }
std::span<const std::size_t> FiniteGroup::generators() const { return state_->generators; }

std::optional<std::size_t> FiniteGroup::find(const Perm &p) const
{
    auto it = state_->index.find(p);
    if (it == state_->index.end())
        return std::nullopt;
    return it->second;
}

std::size_t FiniteGroup::index_of(const Perm &p) const
{
    auto found = find(p);
    if (!found)
        throw std::invalid_argument("permutation " + p.to_string() + " is not in the group");
    return *found;
}

std::size_t FiniteGroup::mul(std::size_t a, std::size_t b) const
{
    const State &s = *state_;
    const std::size_t n = s.elements.size();
    if (n <= kMaxTableOrder) {
        std::call_once(s.table_once, [&s] { s.build_table(); });
        return s.table[a * n + b];
    }
    return s.index.at(s.elements[a] * s.elements[b]);
}

std::size_t FiniteGroup::inv(std::size_t a) const { return state_->inverses.at(a); }

bool FiniteGroup::is_abelian() const
{
    const auto &els = state_->elements;
    std::vector<std::size_t> span = state_->generators;
    if (span.empty() && els.size() > 1)
        for (std::size_t i = 0; i < els.size(); ++i)
            span.push_back(i);
    for (std::size_t g : span)
        for (std::size_t h : span)
            if (els[g] * els[h] != els[h] * els[g])
                return false;
    return true;
}

FiniteGroup close_group(std::span<const Perm> generators, std::size_t max_order, std::string name)
{
    std::size_t degree = 1;
    for (const Perm &g : generators)
        degree = std::max(degree, g.degree());
    std::vector<Perm> gens;
    for (const Perm &g : generators) {
        if (g.degree() != generators[0].degree())
            throw std::invalid_argument("generators must share one degree");
        gens.push_back(g);
    }

    std::vector<Perm> elements{Perm(degree)};
    std::unordered_map<Perm, std::size_t, PermHash> seen{{elements[0], 0}};
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        const std::size_t cur = queue.front();
        queue.pop_front();
        for (const Perm &g : gens) {
            Perm next = g * elements[cur];
            if (seen.count(next))
                continue;
            if (elements.size() >= max_order)
                throw GroupTooLarge("group closure exceeds " + std::to_string(max_order) + " elements");
            seen.emplace(next, elements.size());
            queue.push_back(elements.size());
            elements.push_back(std::move(next));
        }
    }
    std::vector<std::size_t> gen_idx;
    for (const Perm &g : gens)
        gen_idx.push_back(seen.at(g));
    return FiniteGroup(degree, std::move(elements), std::move(gen_idx), std::move(name));
}

FiniteGroup trivial_group()
{
    return FiniteGroup(1, {Perm(1)}, {}, "1");
}

FiniteGroup cyclic_group(std::size_t d)
{
    if (d == 0)
        throw std::invalid_argument("cyclic group order must be positive");
    if (d == 1)
        return trivial_group();
    std::vector<Point> images(d);
    for (std::size_t i = 0; i < d; ++i)
        images[i] = static_cast<Point>((i + 1) % d);
    Perm c(std::move(images));
    return close_group(std::span<const Perm>(&c, 1), kDefaultMaxGroupOrder, "Z/" + std::to_string(d));
}

FiniteGroup symmetric_group(std::size_t n)
{
    if (n == 0)
        throw std::invalid_argument("symmetric group degree must be positive");
    if (n == 1)
        return FiniteGroup(1, {Perm(1)}, {}, "S1");
    // Lexicographic element order.
    std::vector<Point> images(n);
    for (std::size_t i = 0; i < n; ++i)
        images[i] = static_cast<Point>(i);
    std::vector<Perm> elements;
    do {
        elements.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));

    std::vector<Point> t(n), c(n);
    for (std::size_t i = 0; i < n; ++i) {
        t[i] = static_cast<Point>(i);
        c[i] = static_cast<Point>((i + 1) % n);
    }
    std::swap(t[0], t[1]);
    FiniteGroup tmp(n, elements, {}, "S" + std::to_string(n));
    std::vector<std::size_t> gens{tmp.index_of(Perm(t))};
    if (n > 2)
        gens.push_back(tmp.index_of(Perm(c)));
    return FiniteGroup(n, std::move(elements), std::move(gens), "S" + std::to_string(n));
}

FiniteGroup dihedral_group(std::size_t n)
{
    if (n < 3)
        throw std::invalid_argument("dihedral group needs n >= 3");
    std::vector<Point> rot(n), ref(n);
    for (std::size_t i = 0; i < n; ++i) {
        rot[i] = static_cast<Point>((i + 1) % n);
        ref[i] = static_cast<Point>((n - i) % n);
    }
    std::vector<Perm> gens{Perm(rot), Perm(ref)};
    return close_group(gens, kDefaultMaxGroupOrder, "D" + std::to_string(n));
}

FiniteGroup subgroup(const FiniteGroup &g, std::span<const std::size_t> element_indices)
{
    std::vector<bool> listed(g.order());
    for (std::size_t i : element_indices)
        listed.at(i) = true;

    // Greedy generating set: add listed elements not yet spanned, re-close.
    std::vector<std::size_t> gens;
    std::vector<bool> spanned(g.order());
    std::size_t spanned_count = 0;
    auto reclose = [&] {
        std::fill(spanned.begin(), spanned.end(), false);
        std::vector<std::size_t> queue{g.identity()};
        spanned[g.identity()] = true;
        for (std::size_t head = 0; head < queue.size(); ++head)
            for (std::size_t s : gens) {
                const std::size_t y = g.mul(s, queue[head]);
                if (!spanned[y]) {
                    if (!listed[y])
                        throw std::invalid_argument("element list is not a subgroup");
                    spanned[y] = true;
                    queue.push_back(y);
                }
            }
        spanned_count = queue.size();
    };
    reclose();
    for (std::size_t i : element_indices)
        if (!spanned[i]) {
            gens.push_back(i);
            reclose();
        }
    if (spanned_count != element_indices.size())
        throw std::invalid_argument("element list is not a subgroup");

    std::vector<Perm> elements;
    elements.reserve(element_indices.size());
    std::vector<std::size_t> position(g.order());
    for (std::size_t k = 0; k < element_indices.size(); ++k) {
        position[element_indices[k]] = k;
        elements.push_back(g.element(element_indices[k]));
    }
    std::vector<std::size_t> gen_positions;
    for (std::size_t s : gens)
        gen_positions.push_back(position[s]);
    return FiniteGroup(g.degree(), std::move(elements), std::move(gen_positions));
}

FiniteGroup centralizer(const FiniteGroup &g, std::size_t element)
{
    std::vector<std::size_t> members;
    for (std::size_t h = 0; h < g.order(); ++h)
        if (g.mul(h, element) == g.mul(element, h))
            members.push_back(h);
    return subgroup(g, members);
}

std::vector<std::vector<std::size_t>> conjugacy_classes(const FiniteGroup &g)
{
    std::vector<bool> assigned(g.order());
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t x = 0; x < g.order(); ++x) {
        if (assigned[x])
            continue;
        std::vector<std::size_t> cls;
        for (std::size_t h = 0; h < g.order(); ++h) {
            const std::size_t y = g.mul(g.mul(h, x), g.inv(h));
            if (!assigned[y]) {
                assigned[y] = true;
                cls.push_back(y);
            }
        }
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    return classes;
}

FiniteGroup parse_finite_group(std::string_view text)
{
    std::string s;
    for (char ch : text)
        if (ch != ' ')
            s += ch;
    auto number_after = [&](std::size_t pos) -> std::size_t {
        if (pos >= s.size())
            throw std::invalid_argument("group '" + s + "': missing number");
        std::size_t v = 0;
        for (std::size_t i = pos; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("group '" + s + "': malformed number");
            v = v * 10 + static_cast<std::size_t>(s[i] - '0');
        }
        return v;
    };
    if (s == "1" || s == "{e}")
        return trivial_group();
    if (s.rfind("Z/", 0) == 0)
        return cyclic_group(number_after(2));
    if (s.rfind("S_", 0) == 0)
        return symmetric_group(number_after(2));
    if (s.size() > 1 && s[0] == 'S')
        return symmetric_group(number_after(1));
    if (s.rfind("D_", 0) == 0)
        return dihedral_group(number_after(2));
    if (s.size() > 1 && s[0] == 'D')
        return dihedral_group(number_after(1));
    if (!s.empty() && s[0] == '(') {
        auto gens = parse_perm_list(text);
        return close_group(gens, kDefaultMaxGroupOrder, std::string(text));
    }
    throw std::invalid_argument("unrecognised finite group '" + std::string(text) + "'");
}

} // namespace orbichern
