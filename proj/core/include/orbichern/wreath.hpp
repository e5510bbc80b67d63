#pragma once

#include "orbichern/group.hpp"

#include <cstddef>
#include <vector>

namespace orbichern {

/// Element (g_1..g_n; sigma) of G wr S_n; gbar holds element indices of G.
struct WreathElement {
    std::vector<std::size_t> gbar;
    Perm sigma;
    auto operator<=>(const WreathElement &) const = default;
};

/// (h, sigma)(g, tau) = (h . sigma(g), sigma tau) with sigma(g)_i = g_{sigma^-1(i)}.
WreathElement wreath_mul(const WreathElement &x, const WreathElement &y, const FiniteGroup &base);

/// G wr S_n with a faithful realisation as a permutation group on n * deg(G)
/// points: (g; sigma) sends (block j, point p) to (block sigma(j), g_{sigma(j)}(p)).
class WreathProduct {
public:
    WreathProduct(FiniteGroup base, std::size_t n);

    const FiniteGroup &base() const { return base_; }
    std::size_t n() const { return n_; }
    /// |G|^n n!
    std::size_t order() const;

    WreathElement identity() const;
    WreathElement mul(const WreathElement &x, const WreathElement &y) const;
    WreathElement inverse(const WreathElement &x) const;
    Perm to_perm(const WreathElement &x) const;

    /// All elements as a FiniteGroup; element k corresponds to decode(k).
    const FiniteGroup &as_permutation_group() const { return group_; }
    const WreathElement &decode(std::size_t k) const { return decoded_.at(k); }

private:
    FiniteGroup base_;
    std::size_t n_;
    std::vector<WreathElement> decoded_;
    FiniteGroup group_;
};

} // namespace orbichern
