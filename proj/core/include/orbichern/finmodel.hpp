#pragma once

#include "orbichern/cycle_type.hpp"
#include "orbichern/diag.hpp"
#include "orbichern/group_spec.hpp"
#include "orbichern/gset.hpp"
#include "orbichern/hom_search.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace orbichern {

/// Points of `x` fixed by every listed group element (sorted).
std::vector<std::size_t> fixed_set(const GSet &x, std::span<const std::size_t> elements);

/// (1/|G|) sum over rho: A -> G of the indicator of X^{rho(A)}. Each value is
/// also recomputed as |Hom(A, Stab(x))|/|G|; a mismatch throws std::logic_error.
ConstrFn canonical_function(const GSet &x, const GroupSpec &a, const SearchOptions &opts = {});
/// The stabilizer formula alone.
ConstrFn canonical_function_by_stabilizers(const GSet &x, const GroupSpec &a, const SearchOptions &opts = {});

/// chi_m(X;G) = (1/|G|) sum over commuting m-tuples of |X^{g_1..g_m}|, by direct enumeration of G^m.
Rat orbifold_euler_characteristic(const GSet &x, unsigned m);

/// Lazily built X^n for n = 1, 2, ... over one base G-set.
class PowerCache {
public:
    explicit PowerCache(GSet base) : base_(std::move(base)) {}
    const GSet &base() const { return base_; }
    const PowerSet &power(std::size_t n);

private:
    GSet base_;
    std::map<std::size_t, std::unique_ptr<PowerSet>> powers_;
};

enum class Symmetrization {
    plain,  // average over S_n only
    wreath, // average over G wr S_n
};

/// Symmetrized exterior product of functions on X^m and X^n.
ConstrFn odot_concrete(const ConstrFn &a, const ConstrFn &b, PowerCache &cache, Symmetrization mode);

enum class DiagonalMode {
    plain,     // (Delta^n)_* alpha
    wreath,    // average of (g; sigma)_* (Delta^n)_* alpha over G wr S_n
    base_only, // average of g_* (Delta^n)_* alpha over G^n
};

ConstrFn diagonal_concrete(const ConstrFn &alpha, std::size_t n, PowerCache &cache, DiagonalMode mode);

/// A map between finite sets {0..s-1} -> {0..t-1}.
struct FiniteMap {
    std::size_t target_size = 0;
    std::vector<std::size_t> images;

    static FiniteMap identity(std::size_t size);
    static FiniteMap to_point(std::size_t size);
    /// g o f
    FiniteMap then(const FiniteMap &g) const;
};

/// x -> orbit number of x (orbits numbered as in GSet::orbits()).
FiniteMap orbit_projection(const GSet &x);
/// f(g.x) = g.f(x) for every group element; both sets must carry the same group.
bool is_equivariant(const FiniteMap &f, const GSet &source, const GSet &target);

/// Fiberwise sums; the result is a function of arity 1 on the target set.
ConstrFn pushforward(const FiniteMap &f, const ConstrFn &alpha);

/// For each cycle type c of the S_n part, the sum over rho in Hom(A, G_n; c)
/// of the indicator of (X^n)^{rho(A)}.
std::map<CycleType, ConstrFn> fixed_sums_by_type(const PowerSet &p, const GroupSpec &a,
                                                 const SearchOptions &opts = {});

/// Evaluates the weight-n slice of `a` as a function on X^n: base symbols by
/// `bases`, D^k by diagonal_concrete and products by odot_concrete.
ConstrFn evaluate_concrete(const DiagElement &a, std::size_t n, const std::map<std::string, ConstrFn> &bases,
                           PowerCache &cache, DiagonalMode diagonal, Symmetrization product);

} // namespace orbichern
