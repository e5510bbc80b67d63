#pragma once

#include "orbichern/group_spec.hpp"
#include "orbichern/hom_search.hpp"
#include "orbichern/rational.hpp"

#include <cstddef>
#include <vector>

namespace orbichern {

enum class Provenance { closed_form, enumerated };

/// Subgroup counts j_1..j_R of a source group, j_r = number of index-r subgroups.
struct JSequence {
    GroupSpec source;
    std::vector<Integer> values;        // values[r-1] = j_r
    std::vector<Provenance> provenance; // per entry

    std::size_t rmax() const { return values.size(); }
    /// j_r for 1 <= r <= rmax().
    const Integer &j(std::size_t r) const;
};

const char *to_string(Provenance p);

/// j(m;k) by j(m;k) = sum_{d|k} d j(m-1;d), j(0;1) = 1, j(0;k>1) = 0.
Integer free_abelian_subgroup_count(unsigned m, std::size_t k);

JSequence j_sequence(const GroupSpec &a, std::size_t rmax, const SearchOptions &opts = {});

/// Number of homomorphisms A -> S_r acting transitively on {1..r}.
std::uint64_t count_transitive_homs(const GroupSpec &a, std::size_t r, const SearchOptions &opts = {});

/// u_1..u_D: index-d subgroups up to conjugacy.
std::vector<Integer> u_sequence(const GroupSpec &a, std::size_t dmax, const SearchOptions &opts = {});

/// Isomorphism types of the index-r subgroups, for the families where they are
/// known (Z^m, Z/d, 1). Throws std::invalid_argument("subgroup types unknown") otherwise.
struct SubgroupClass {
    GroupSpec type;
    Integer count;
};
std::vector<SubgroupClass> index_subgroup_classes(const GroupSpec &a, std::size_t r);

/// Orbit sizes of the group generated by `gens` acting on {0..degree-1}, sorted.
std::vector<std::size_t> orbit_sizes(std::span<const Perm *const> gens, std::size_t degree);

/// |C_{S_d}(<gens>)| for a transitive set of generators on d points.
std::size_t transitive_centralizer_order(std::span<const Perm *const> gens, std::size_t degree);

} // namespace orbichern
