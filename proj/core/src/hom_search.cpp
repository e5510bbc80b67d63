#include "orbichern/hom_search.hpp"

#include <cmath>
#include <cstdlib>

namespace orbichern {

BudgetExceeded::BudgetExceeded(std::uint64_t budget)
    : std::runtime_error("search budget of " + std::to_string(budget) + " candidates exhausted"),
      budget_(budget)
{
}

std::uint64_t parse_budget(std::string_view text)
{
    const std::string s(text);
    char *end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || !(v >= 1) || v > 1e18 || std::floor(v) != v)
        throw std::invalid_argument("malformed budget '" + s + "'");
    return static_cast<std::uint64_t>(v);
}

std::uint64_t default_budget()
{
    if (const char *env = std::getenv("ORBICHERN_BUDGET"); env && *env)
        return parse_budget(env);
    return kDefaultBudget;
}

namespace detail {

namespace {

struct Relator {
    // Letters as (generator, inverse) pairs, to be applied right to left.
    std::vector<Letter> letters;
};

class Searcher {
public:
    Searcher(const Presentation &source, const FiniteGroup &target, const SearchOptions &opts,
             unsigned worker, unsigned workers, NodeBudget &budget, const HomVisitor &visit)
        : target_(target), worker_(worker), workers_(workers), budget_(budget), visit_(visit),
          gens_(source.generators.size()), images_(gens_), checks_(gens_)
    {
        const std::size_t last = gens_ ? gens_ - 1 : 0;
        for (const Word &w : source.relators) {
            if (w.empty())
                continue;
            std::uint32_t top = 0;
            for (const Letter &l : w)
                top = std::max(top, l.generator);
            checks_[opts.prune ? top : last].push_back(Relator{w});
        }
        inverse_of_.resize(target.order());
        raw_.resize(target.order());
        for (std::size_t i = 0; i < target.order(); ++i) {
            inverse_of_[i] = target.inv(i);
            raw_[i] = target.element(i).images().data();
        }
    }

    void run()
    {
        if (gens_ == 0) {
            if (worker_ == 0)
                visit_(images_);
            return;
        }
        descend(0);
        flush();
    }

private:
    void descend(std::size_t level)
    {
        const std::size_t order = target_.order();
        const std::size_t start = level == 0 ? worker_ : 0;
        const std::size_t step = level == 0 ? workers_ : 1;
        for (std::size_t e = start; e < order; e += step) {
            if (++pending_ == 4096)
                flush();
            images_[level] = e;
            if (!relators_hold(level))
                continue;
            if (level + 1 == gens_)
                visit_(images_);
            else
                descend(level + 1);
        }
    }

    bool relators_hold(std::size_t level) const
    {
        for (const Relator &r : checks_[level])
            if (!is_identity(r))
                return false;
        return true;
    }

    bool is_identity(const Relator &r) const
    {
        const std::size_t degree = target_.degree();
        for (Point p = 0; p < degree; ++p) {
            Point q = p;
            for (auto it = r.letters.rbegin(); it != r.letters.rend(); ++it) {
                std::size_t el = images_[it->generator];
                if (it->inverse)
                    el = inverse_of_[el];
                q = raw_[el][q];
            }
            if (q != p)
                return false;
        }
        return true;
    }

    void flush()
    {
        budget_.charge(pending_);
        pending_ = 0;
    }

    const FiniteGroup &target_;
    unsigned worker_, workers_;
    NodeBudget &budget_;
    const HomVisitor &visit_;
    std::size_t gens_;
    std::vector<std::size_t> images_;
    std::vector<std::vector<Relator>> checks_;
    std::vector<std::size_t> inverse_of_;
    std::vector<const Point *> raw_;
    std::uint64_t pending_ = 0;
};

} // namespace

void search_homs(const Presentation &source, const FiniteGroup &target, const SearchOptions &opts,
                 unsigned worker, unsigned workers, NodeBudget &budget, const HomVisitor &visit)
{
    Searcher(source, target, opts, worker, workers, budget, visit).run();
}

} // namespace detail

void for_each_hom(const Presentation &source, const FiniteGroup &target, const SearchOptions &opts,
                  const HomVisitor &visit)
{
    detail::NodeBudget budget(opts.budget);
    detail::search_homs(source, target, opts, 0, 1, budget, visit);
}

std::uint64_t count_homs(const Presentation &source, const FiniteGroup &target, const SearchOptions &opts)
{
    return fold_homs(
        source, target, opts, std::uint64_t{0}, [](std::uint64_t &acc, std::span<const std::size_t>) { ++acc; },
        [](std::uint64_t &a, std::uint64_t b) { a += b; });
}

std::uint64_t count_free_abelian_homs(unsigned m, const FiniteGroup &target)
{
    if (m == 0)
        return 1;
    if (m == 1)
        return target.order();
    if (target.is_abelian()) {
        std::uint64_t r = 1;
        for (unsigned i = 0; i < m; ++i)
            r *= target.order();
        return r;
    }
    // Elements of one conjugacy class have conjugate, isomorphic centralizers.
    std::uint64_t total = 0;
    for (const auto &cls : conjugacy_classes(target))
        total += cls.size() * count_free_abelian_homs(m - 1, centralizer(target, cls.front()));
    return total;
}

} // namespace orbichern
