#pragma once

#include "orbichern/perm.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbichern {

inline constexpr std::size_t kDefaultMaxGroupOrder = 1'000'000;

class GroupTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A fully enumerated permutation group.
///
/// Elements are addressed by index; index_of() and mul() are O(1) after the
/// first call (the composition table is built lazily for orders up to
/// kMaxTableOrder and computed through the lookup map above that). Copies
/// share the same immutable state.
class FiniteGroup {
public:
    static constexpr std::size_t kMaxTableOrder = 4096;

    /// Takes an explicit element list; it must be closed, contain the identity
    /// and be duplicate-free (checked).
    FiniteGroup(std::size_t degree, std::vector<Perm> elements, std::vector<std::size_t> generators,
                std::string name = {});

    std::size_t degree() const;
    std::size_t order() const;
    const std::string &name() const;

    const Perm &element(std::size_t i) const;
    std::span<const Perm> elements() const;
    std::size_t identity() const;
    std::span<const std::size_t> generators() const;

    std::optional<std::size_t> find(const Perm &p) const;
    std::size_t index_of(const Perm &p) const;

    std::size_t mul(std::size_t a, std::size_t b) const;
    std::size_t inv(std::size_t a) const;

    bool is_abelian() const;

private:
    struct State;
    std::shared_ptr<const State> state_;
};

/// Enumerates the group generated by `generators` (breadth-first, so element
/// order is deterministic). Throws GroupTooLarge past `max_order`.
FiniteGroup close_group(std::span<const Perm> generators, std::size_t max_order = kDefaultMaxGroupOrder,
                        std::string name = {});

FiniteGroup trivial_group();
FiniteGroup cyclic_group(std::size_t d);
FiniteGroup symmetric_group(std::size_t n);
FiniteGroup dihedral_group(std::size_t n);

/// Subgroup of `g` consisting of the listed element indices (closure checked).
FiniteGroup subgroup(const FiniteGroup &g, std::span<const std::size_t> element_indices);
FiniteGroup centralizer(const FiniteGroup &g, std::size_t element);
/// Conjugacy classes as sorted index lists, ordered by smallest member.
std::vector<std::vector<std::size_t>> conjugacy_classes(const FiniteGroup &g);

/// Parses "1", "Z/d", "S3"/"S_3", "D4"/"D_4" or a generator list in cycle
/// notation such as "(1 2 3),(1 2)".
FiniteGroup parse_finite_group(std::string_view text);

} // namespace orbichern
