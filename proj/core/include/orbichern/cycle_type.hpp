#pragma once

#include "orbichern/rational.hpp"

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace orbichern {

/// Cycle type [c_1..c_n] of weight n: c_k orbits (cycles) of size k.
class CycleType {
public:
    CycleType() = default;
    explicit CycleType(std::vector<unsigned> multiplicities);
    /// From a list of orbit sizes summing to n.
    static CycleType from_orbit_sizes(std::size_t n, std::span<const std::size_t> sizes);

    std::size_t weight() const;
    std::size_t length() const;
    /// n! / prod k^{c_k} c_k!, the size of the matching conjugacy class of S_n.
    Integer cardinality() const;
    /// prod (k!)^{c_k} c_k!
    Integer block_symmetry() const;

    /// c_k for 1 <= k <= n (0 past the end).
    unsigned operator[](std::size_t k) const;
    std::span<const unsigned> multiplicities() const { return c_; }

    std::string to_string() const;
    auto operator<=>(const CycleType &) const = default;

private:
    std::vector<unsigned> c_;
};

/// All cycle types of weight n, in decreasing lexicographic order of
/// multiplicity vectors ([n,0,..] first, [0,..,1] last).
std::vector<CycleType> cycle_types(std::size_t n);

} // namespace orbichern
