#pragma once

#include "orbichern/group.hpp"
#include "orbichern/group_spec.hpp"

#include <atomic>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <thread>
#include <vector>

namespace orbichern {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// Default search budget: ORBICHERN_BUDGET if set (accepts "1e7"), else kDefaultBudget.
std::uint64_t default_budget();
/// Parses "100000" or "1e7" style budgets.
std::uint64_t parse_budget(std::string_view text);

/// Resource exhaustion: the search was abandoned and no partial count exists.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(std::uint64_t budget);
    std::uint64_t budget() const { return budget_; }

private:
    std::uint64_t budget_;
};

struct SearchOptions {
    /// Cap on search nodes, one node per tentative image of one generator.
    std::uint64_t budget = default_budget();
    /// Workers partition the images of the first generator.
    unsigned threads = 1;
    /// Check each relator as soon as its last generator is assigned.
    bool prune = true;
};

/// Receives the generator images (element indices of the target) of one homomorphism.
using HomVisitor = std::function<void(std::span<const std::size_t>)>;

namespace detail {

class NodeBudget {
public:
    explicit NodeBudget(std::uint64_t limit) : limit_(limit) {}
    void charge(std::uint64_t nodes)
    {
        if (used_.fetch_add(nodes, std::memory_order_relaxed) + nodes > limit_)
            throw BudgetExceeded(limit_);
    }
    std::uint64_t used() const { return used_.load(); }

private:
    std::uint64_t limit_;
    std::atomic<std::uint64_t> used_{0};
};

/// Backtracking over generator images; this worker takes first-generator
/// images congruent to `worker` modulo `workers`.
void search_homs(const Presentation &source, const FiniteGroup &target, const SearchOptions &opts,
                 unsigned worker, unsigned workers, NodeBudget &budget, const HomVisitor &visit);

} // namespace detail

/// Calls `visit` once per homomorphism, single-threaded, in a fixed order.
void for_each_hom(const Presentation &source, const FiniteGroup &target, const SearchOptions &opts,
                  const HomVisitor &visit);

std::uint64_t count_homs(const Presentation &source, const FiniteGroup &target,
                         const SearchOptions &opts = {});

/// Parallel reduction over all homomorphisms. Each worker folds into its own
/// copy of `init`; partial results are merged in worker order, so the result
/// is schedule-independent whenever `merge` is associative and commutative.
template <class Acc, class Visit, class Merge>
Acc fold_homs(const Presentation &source, const FiniteGroup &target, const SearchOptions &opts, Acc init,
              Visit visit, Merge merge)
{
    const unsigned workers = std::max(1u, opts.threads);
    detail::NodeBudget budget(opts.budget);
    if (workers == 1) {
        detail::search_homs(source, target, opts, 0, 1, budget,
                            [&](std::span<const std::size_t> images) { visit(init, images); });
        return init;
    }
    std::vector<Acc> partial(workers, init);
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                try {
                    detail::search_homs(source, target, opts, w, workers, budget,
                                        [&](std::span<const std::size_t> images) { visit(partial[w], images); });
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
    }
    for (auto &e : errors)
        if (e)
            std::rethrow_exception(e);
    Acc out = std::move(partial[0]);
    for (unsigned w = 1; w < workers; ++w)
        merge(out, std::move(partial[w]));
    return out;
}

/// |Hom(Z^m, H)| by the centralizer recursion sum_{h in H} |Hom(Z^{m-1}, C_H(h))|.
std::uint64_t count_free_abelian_homs(unsigned m, const FiniteGroup &target);

} // namespace orbichern
